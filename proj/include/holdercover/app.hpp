#pragma once

// Pipelines behind the command-line tool. Each one only composes library
// operations and serializes the result.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "holdercover/cantor.hpp"

namespace holdercover {

enum class Command { schedule, corners, chain, curve, beta, bnv, dini, dims, check };

struct RunConfig {
    Command command = Command::check;
    std::string check = "all";        // check: eq5, lemma31, lemma32, lemma33, eq4, disjoint, all
    std::string input;
    std::string output;               // empty: standard output
    std::string svg;
    std::string tree_out;
    std::string format = "json";      // json or csv where both make sense
    std::string gamma = "3/4";
    std::string delta;                // empty: none
    std::string variant = "corrected";
    int stages = 3;
    int depth = 3;
    bool primed = false;
    std::string eps0 = "1";
    std::string d = "1";
    int chain_levels = 6;
    std::string levels = "0:6";       // a:b
    std::string beta0 = "1/12";
    std::string counts;               // dini: comma-separated N_k starting at k = 0
    std::string stroke_width = "0.002";
    std::size_t pairs = 100000;
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultPointBudget;
    int precision_bits = kDefaultPrecisionBits;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;

// Runs one command; diagnostics go to err as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace holdercover
