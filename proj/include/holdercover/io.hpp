#pragma once

// Wire formats. Reals travel as decimal strings and rationals as "p/q"
// strings; object keys are emitted in a fixed order so identical inputs give
// byte-identical files.

#include <string>
#include <vector>

#include <json.hpp>

#include "holdercover/beta.hpp"
#include "holdercover/cantor.hpp"
#include "holdercover/covering.hpp"
#include "holdercover/covertree.hpp"
#include "holdercover/curve.hpp"

namespace holdercover::io {

using Json = nlohmann::ordered_json;

std::string format_real(Real value);
Real parse_real(const std::string& text);

Json points_to_json(const std::vector<Point2>& points);
std::vector<Point2> points_from_json(const Json& j);

Json square_to_json(const DyadicSquare& q);
DyadicSquare square_from_json(const Json& j);

Json chain_to_json(const CoverChain& chain);
Json tree_to_json(const CoverTree& tree);
Json curve_to_json(const HolderCurve& curve);

Json schedule_to_json(const ScaleSchedule& s, const SideExponents& e);
ScaleSchedule schedule_from_json(const Json& j);

// level,jx,jy,omega,beta,contribution
std::string beta_report_csv(const BetaReport& report);
std::string bnv_csv(const std::vector<BnvLevel>& rows);

std::string curve_svg(const HolderCurve& curve, Real stroke_width);

std::string dump(const Json& j);

std::string read_file(const std::string& path);
// Writes through a temporary sibling and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace holdercover::io
