#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "holdercover/covering.hpp"

namespace holdercover {

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct TreeVertex {
    int level = 0;
    std::size_t index = 0;              // ball index within its level
    std::size_t parent = kNoParent;     // vertex id
    Real edge_length = 0;               // length of the edge from the parent, 2^{-level d}
};

// Vertices are numbered level-major, then by ball index; vertex 0 is the root.
// The edge ending at a level-k vertex has length 2^{-kd}.
class CoverTree {
public:
    CoverTree() = default;

    const std::vector<TreeVertex>& vertices() const { return vertices_; }
    const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
    std::size_t vertex_id(int level, std::size_t index) const { return level_offset_[level] + index; }
    std::size_t size() const { return vertices_.size(); }
    int depth() const { return static_cast<int>(level_offset_.size()) - 1; }
    Real d() const { return d_; }
    Real total_length() const { return total_length_; }

    friend CoverTree build_tree(const CoverChain& chain);

private:
    std::vector<TreeVertex> vertices_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::size_t> level_offset_;
    Real d_ = 1;
    Real total_length_ = 0;
};

struct TourStep {
    std::size_t from = 0;
    std::size_t to = 0;
    Real length = 0;
    Real cumulative = 0;  // tour length at the end of this step
};

struct EulerTour {
    std::vector<TourStep> steps;

    Real length() const { return steps.empty() ? Real(0) : steps.back().cumulative; }
};

// 2^{-kd}; exact whenever k d is an integer.
Real edge_length(int level, Real d);

CoverTree build_tree(const CoverChain& chain);

Real tree_distance(const CoverTree& tree, std::size_t u, std::size_t v);

// Depth-first from the root, children in ascending ball index.
EulerTour euler_tour(const CoverTree& tree);

}  // namespace holdercover
