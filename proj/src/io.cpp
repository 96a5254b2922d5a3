#include "holdercover/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holdercover/errors.hpp"

namespace holdercover::io {

namespace {

std::string format_short(Real value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10Lg", value);
    return buf;
}

Real real_from(const Json& j) {
    if (j.is_string()) return parse_real(j.get<std::string>());
    if (j.is_number()) return j.get<double>();
    throw ValidationError("expected a number or decimal string");
}

}  // namespace

std::string format_real(Real value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", value);
    return buf;
}

Real parse_real(const std::string& text) {
    if (text.empty()) throw ValidationError("empty number");
    char* end = nullptr;
    errno = 0;
    const Real v = std::strtold(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        throw ValidationError("not a finite number: '" + text + "'");
    return v;
}

Json points_to_json(const std::vector<Point2>& points) {
    Json arr = Json::array();
    for (const auto& p : points) arr.push_back(Json::array({format_real(p.x), format_real(p.y)}));
    Json j;
    j["points"] = std::move(arr);
    return j;
}

std::vector<Point2> points_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ValidationError("point cloud must be {\"points\": [[x, y], ...]}");
    std::vector<Point2> out;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2) throw ValidationError("each point must be [x, y]");
        out.push_back({real_from(p[0]), real_from(p[1])});
    }
    return out;
}

Json square_to_json(const DyadicSquare& q) {
    Json j;
    j["level"] = q.level;
    j["jx"] = q.jx;
    j["jy"] = q.jy;
    return j;
}

DyadicSquare square_from_json(const Json& j) {
    try {
        return {j.at("level").get<int>(), j.at("jx").get<std::int64_t>(), j.at("jy").get<std::int64_t>()};
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("bad dyadic square: ") + ex.what());
    }
}

Json chain_to_json(const CoverChain& chain) {
    Json j;
    j["eps0"] = format_real(chain.eps0);
    j["d"] = format_real(chain.d);
    Json levels = Json::array();
    for (const auto& level : chain.levels) {
        Json l;
        l["k"] = level.k;
        l["radius"] = format_real(level.radius);
        Json balls = Json::array();
        for (const auto& b : level.balls) {
            Json ball;
            ball["cx"] = format_real(b.center.x);
            ball["cy"] = format_real(b.center.y);
            balls.push_back(std::move(ball));
        }
        l["balls"] = std::move(balls);
        l["parents"] = level.parents;
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    return j;
}

Json tree_to_json(const CoverTree& tree) {
    Json j;
    j["d"] = format_real(tree.d());
    j["total_length"] = format_real(tree.total_length());
    Json vertices = Json::array();
    Json edges = Json::array();
    for (std::size_t v = 0; v < tree.size(); ++v) {
        const auto& vx = tree.vertices()[v];
        vertices.push_back(Json::array({vx.level, vx.index}));
        if (vx.parent == kNoParent) continue;
        Json e;
        e["from"] = vx.parent;
        e["to"] = v;
        e["length"] = "1/2^" + format_real(static_cast<Real>(vx.level) * tree.d());
        edges.push_back(std::move(e));
    }
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

Json curve_to_json(const HolderCurve& curve) {
    Json j;
    j["alpha"] = format_real(curve.alpha());
    j["constant_bound"] = format_real(curve.constant_bound());
    Json knots = Json::array();
    for (std::size_t i = 0; i < curve.points().size(); ++i) {
        Json k;
        k["t"] = format_real(curve.params()[i]);
        k["x"] = format_real(curve.points()[i].x);
        k["y"] = format_real(curve.points()[i].y);
        knots.push_back(std::move(k));
    }
    j["knots"] = std::move(knots);
    return j;
}

Json schedule_to_json(const ScaleSchedule& s, const SideExponents& e) {
    Json j;
    j["gamma"] = to_string(s.gamma);
    j["delta"] = e.delta() ? Json(to_string(*e.delta())) : Json(nullptr);
    j["variant"] = to_string(s.variant);
    j["stages"] = s.stages;
    j["ks"] = s.ks;
    j["raw"] = s.raw;
    j["clamped"] = s.clamped;
    Json thetas = Json::array();
    for (const auto& t : s.thetas) thetas.push_back(to_string(t));
    j["thetas"] = std::move(thetas);
    Json eps = Json::array();
    for (const auto& x : s.eps_diagnostics) eps.push_back(to_string(x));
    j["eps"] = std::move(eps);
    Json ej = Json::object();
    for (auto k : e.boundaries()) ej[std::to_string(k)] = to_string(e.at(k));
    j["e"] = std::move(ej);
    if (e.delta()) {
        Json ep = Json::object();
        for (auto k : e.boundaries()) ep[std::to_string(k)] = to_string(e.primed_at(k));
        j["e_primed"] = std::move(ep);
    }
    return j;
}

ScaleSchedule schedule_from_json(const Json& j) {
    try {
        ScaleSchedule s;
        s.gamma = parse_rational(j.at("gamma").get<std::string>());
        s.variant = parse_variant(j.at("variant").get<std::string>());
        s.stages = j.at("stages").get<int>();
        s.ks = j.at("ks").get<std::vector<std::int64_t>>();
        s.raw = j.at("raw").get<std::vector<std::int64_t>>();
        s.clamped = j.at("clamped").get<std::vector<bool>>();
        for (const auto& t : j.at("thetas")) s.thetas.push_back(parse_rational(t.get<std::string>()));
        for (const auto& x : j.at("eps")) s.eps_diagnostics.push_back(parse_rational(x.get<std::string>()));
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("bad schedule JSON: ") + ex.what());
    }
}

std::string beta_report_csv(const BetaReport& report) {
    std::ostringstream out;
    out << "level,jx,jy,omega,beta,contribution\n";
    for (const auto& r : report.records) {
        out << r.square.level << ',' << r.square.jx << ',' << r.square.jy << ',' << format_real(r.omega) << ','
            << format_real(r.beta) << ',' << format_real(r.contribution) << '\n';
    }
    return out.str();
}

std::string bnv_csv(const std::vector<BnvLevel>& rows) {
    std::ostringstream out;
    out << "level,count,term,partial_sum\n";
    for (const auto& r : rows)
        out << r.level << ',' << r.count << ',' << format_real(r.term) << ',' << format_real(r.partial_sum) << '\n';
    return out.str();
}

std::string curve_svg(const HolderCurve& curve, Real stroke_width) {
    const auto& pts = curve.points();
    Real x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!pts.empty()) {
        x0 = x1 = pts[0].x;
        y0 = y1 = pts[0].y;
        for (const auto& p : pts) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    }
    const Real pad = std::max({x1 - x0, y1 - y0, Real(1e-9)}) * Real(0.02);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_short(x0 - pad) << ' '
        << format_short(-(y1 + pad)) << ' ' << format_short(x1 - x0 + 2 * pad) << ' ' << format_short(y1 - y0 + 2 * pad)
        << "\">\n";
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << format_short(stroke_width) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << format_short(pts[i].x) << ',' << format_short(-pts[i].y);
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw BudgetError("cannot write " + path);
        out << content;
        out.flush();
        if (!out) throw BudgetError("cannot write " + path);
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw BudgetError("cannot write " + path);
    }
}

}  // namespace holdercover::io
