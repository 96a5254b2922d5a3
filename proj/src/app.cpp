#include "holdercover/app.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "holdercover/beta.hpp"
#include "holdercover/errors.hpp"
#include "holdercover/io.hpp"

namespace holdercover {

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ValidationError("level range must look like a:b, got '" + text + "'");
    }
}

Real parse_number(const std::string& text) { return to_long_double(parse_rational(text)); }

void emit(const RunConfig& config, std::ostream& out, const std::string& content) {
    if (config.output.empty()) {
        out << content;
    } else {
        io::write_atomic(config.output, content);
    }
}

std::vector<Point2> load_points(const RunConfig& config) {
    if (config.input.empty()) throw ValidationError("--input is required");
    io::Json j;
    try {
        j = io::Json::parse(io::read_file(config.input));
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(config.input + ": " + ex.what());
    }
    auto points = io::points_from_json(j);
    if (points.size() > config.budget) throw BudgetError("input exceeds the point budget");
    return points;
}

struct Construction {
    ScaleSchedule s;
    SideExponents e;
};

Construction construction(const RunConfig& config) {
    Construction c;
    c.s = schedule(parse_rational(config.gamma), config.stages, parse_variant(config.variant), config.precision_bits);
    std::optional<Rational> delta;
    if (!config.delta.empty()) delta = parse_rational(config.delta);
    c.e = side_exponents(c.s, delta);
    return c;
}

std::string window_word(bool ok) { return ok ? "in" : "out"; }

void check_tables(const RunConfig& config, std::ostream& out) {
    const auto c = construction(config);
    const auto& s = c.s;
    const auto& e = c.e;
    out << std::boolalpha;
    const auto& which = config.check;
    const bool all = which == "all";
    bool known = all;

    if (all || which == "eq5") {
        known = true;
        out << "# normalized length n * 4^{k_{2n+1}} * ell_{k_{2n+1}} = n * 4^x, window [1, 4^{1-gamma}]\n";
        out << "n,k,x,value,window\n";
        for (int n = 1; n <= s.stages; ++n) {
            const Rational x = normalized_length_exponent(s, e, n);
            const Real value = static_cast<Real>(n) / pow4_neg(x);
            out << n << ',' << s.ks[2 * n + 1] << ',' << to_string(x) << ',' << io::format_real(value) << ','
                << window_word(normalized_length_in_window(s, e, n, config.precision_bits)) << '\n';
        }
    }
    if (all || which == "lemma31") {
        known = true;
        out << "# side-length bounds at k_{2n} and k_{2n+1}\n";
        out << "n,even_lower,even_upper,odd_upper,odd_lower\n";
        for (int n = 1; n <= s.stages; ++n) {
            const auto b = sidelength_bounds(s, e, n);
            out << n << ',' << b.even_lower << ',' << b.even_upper << ',' << b.odd_upper << ',' << b.odd_lower << '\n';
        }
    }
    if (all || which == "lemma32") {
        known = true;
        out << "# 4^k ell_k = 4^{k - e_k} at odd stage boundaries\n";
        out << "m,k,exponent,value\n";
        for (int m = 1; m < static_cast<int>(s.ks.size()); m += 2) {
            const auto counts = analytic_counts(e, s.ks[m]);
            out << m << ',' << s.ks[m] << ',' << to_string(counts.dini_exponent) << ','
                << io::format_real(1 / pow4_neg(counts.dini_exponent)) << '\n';
        }
    }
    if (all || which == "lemma33") {
        known = true;
        out << "# lower box ratio k_{2n}/e_{k_{2n}} and premeasure exponent at t = 1\n";
        out << "n,k,ratio,premeasure_exponent\n";
        for (int n = 1; n <= s.stages; ++n) {
            const auto counts = analytic_counts(e, s.ks[2 * n]);
            out << n << ',' << s.ks[2 * n] << ',' << to_string(*counts.lower_box_ratio) << ','
                << to_string(hausdorff_premeasure_bound(s, n, Rational(1))) << '\n';
        }
    }
    if (all || which == "eq4") {
        known = true;
        out << "# |(n/2) k_n / k_{n+1} - (1 - gamma)|\n";
        out << "n,deviation\n";
        for (int n = 1; n + 1 < static_cast<int>(s.ks.size()); ++n)
            out << n << ',' << to_string(ratio_deviation(s, n)) << '\n';
    }
    if (all || which == "disjoint") {
        known = true;
        out << "# children pairwise disjoint (every increment > 1/2)\n";
        out << "family,disjoint\n";
        out << "K," << children_disjoint(e, false) << '\n';
        if (e.delta()) out << "K'," << children_disjoint(e, true) << '\n';
    }
    if (!known) throw ValidationError("unknown check '" + which + "'");
}

void run_command(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case Command::schedule: {
            const auto c = construction(config);
            emit(config, out, io::dump(io::schedule_to_json(c.s, c.e)));
            return;
        }
        case Command::corners: {
            const auto c = construction(config);
            if (config.primed && !c.e.delta()) throw ValidationError("--primed needs --delta");
            const auto pts = corners(c.e, config.depth, config.primed, config.budget);
            emit(config, out, io::dump(io::points_to_json(pts)));
            return;
        }
        case Command::chain: {
            const auto pts = load_points(config);
            const auto chain = build_chain(pts, parse_number(config.eps0), config.chain_levels, parse_number(config.d));
            emit(config, out, io::dump(io::chain_to_json(chain)));
            return;
        }
        case Command::curve: {
            const auto pts = load_points(config);
            const auto chain = build_chain(pts, parse_number(config.eps0), config.chain_levels, parse_number(config.d));
            const auto tree = build_tree(chain);
            const auto curve = build_curve(tree, chain);
            if (!config.svg.empty()) io::write_atomic(config.svg, io::curve_svg(curve, parse_number(config.stroke_width)));
            if (!config.tree_out.empty()) io::write_atomic(config.tree_out, io::dump(io::tree_to_json(tree)));
            emit(config, out, io::dump(io::curve_to_json(curve)));
            return;
        }
        case Command::beta: {
            const auto pts = load_points(config);
            const auto [lo, hi] = parse_range(config.levels);
            const auto report = beta_squared_sum(pts, lo, hi);
            if (config.format == "csv") {
                emit(config, out, io::beta_report_csv(report));
            } else {
                io::Json j;
                j["levels"] = io::Json::array({lo, hi});
                io::Json sums = io::Json::array();
                for (Real v : report.per_level_sums) sums.push_back(io::format_real(v));
                j["per_level_sums"] = std::move(sums);
                j["cumulative"] = io::format_real(report.cumulative);
                io::Json records = io::Json::array();
                for (const auto& r : report.records) {
                    io::Json rec = io::square_to_json(r.square);
                    rec["omega"] = io::format_real(r.omega);
                    rec["beta"] = io::format_real(r.beta);
                    rec["contribution"] = io::format_real(r.contribution);
                    records.push_back(std::move(rec));
                }
                j["records"] = std::move(records);
                emit(config, out, io::dump(j));
            }
            return;
        }
        case Command::bnv: {
            const auto pts = load_points(config);
            const auto rows = bnv_sum(pts, parse_number(config.d), parse_range(config.levels).second,
                                      parse_number(config.beta0));
            emit(config, out, io::bnv_csv(rows));
            return;
        }
        case Command::dini: {
            std::vector<std::pair<int, std::size_t>> counts;
            if (!config.counts.empty()) {
                std::stringstream ss(config.counts);
                std::string item;
                int k = 0;
                while (std::getline(ss, item, ',')) {
                    try {
                        counts.emplace_back(k++, static_cast<std::size_t>(std::stoull(item)));
                    } catch (const std::exception&) {
                        throw ValidationError("bad count '" + item + "'");
                    }
                }
            } else {
                const auto pts = load_points(config);
                const auto chain = build_chain(pts, parse_number(config.eps0), config.chain_levels, parse_number(config.d));
                const auto n = chain.counts();
                for (std::size_t k = 0; k < n.size(); ++k) counts.emplace_back(static_cast<int>(k), n[k]);
            }
            const auto report = dini_report(counts, parse_number(config.d));
            std::ostringstream csv;
            csv << "k,count,term,partial_sum\n";
            for (std::size_t i = 0; i < report.terms.size(); ++i) {
                const auto& t = report.terms[i];
                csv << t.k << ',' << t.count << ',' << io::format_real(t.term) << ','
                    << io::format_real(report.partial_sums[i]) << '\n';
            }
            csv << "# ratio " << io::format_real(report.ratio) << " tail " << io::format_real(report.tail_estimate)
                << " verdict " << (report.verdict == DiniVerdict::converging ? "converging" : "inconclusive") << '\n';
            emit(config, out, csv.str());
            return;
        }
        case Command::dims: {
            const auto pts = load_points(config);
            const auto [lo, hi] = parse_range(config.levels);
            std::vector<DimSample> lower, upper;
            std::ostringstream csv;
            csv << "level,eps,lower,upper\n";
            for (int j = lo; j <= hi; ++j) {
                const Real eps = std::ldexp(Real(1), -j);
                const auto b = cover_bracket(pts, eps);
                lower.push_back({eps, static_cast<Real>(b.lower)});
                upper.push_back({eps, static_cast<Real>(b.upper)});
                csv << j << ',' << io::format_real(eps) << ',' << b.lower << ',' << b.upper << '\n';
            }
            const auto fl = box_dim_fit(lower);
            const auto fu = box_dim_fit(upper);
            csv << "# slope lower " << io::format_real(fl.slope) << " upper " << io::format_real(fu.slope) << '\n';
            emit(config, out, csv.str());
            return;
        }
        case Command::check: {
            std::ostringstream table;
            check_tables(config, table);
            emit(config, out, table.str());
            return;
        }
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        run_command(config, out);
        return kExitOk;
    } catch (const BudgetError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitBudget;
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace holdercover
