#include "isowirt/report.hpp"

#include <array>
#include <cstdio>
#include <utility>

#include <nlohmann/json.hpp>

namespace isowirt {

namespace {

constexpr std::array<std::pair<TheoremId, const char*>, 14> kNames{{
    {TheoremId::WirtingerM, "wirtinger"},
    {TheoremId::WirtingerLambda, "wirtinger-lambda"},
    {TheoremId::WirtingerS, "wirtinger-s"},
    {TheoremId::StabilityC, "stability-c"},
    {TheoremId::StabilityS, "stability-s"},
    {TheoremId::ChakerianV1, "chakerian-v1"},
    {TheoremId::ChakerianV2, "chakerian-v2"},
    {TheoremId::DiscreteHigher, "discrete-higher"},
    {TheoremId::EquilateralBound, "equilateral"},
    {TheoremId::LengthFormEven, "length-even"},
    {TheoremId::GenWirtinger, "gen-wirtinger"},
    {TheoremId::SmoothIsoperimetric, "smooth-iso"},
    {TheoremId::ChernoffCore, "chernoff-core"},
    {TheoremId::ChernoffTheorem, "chernoff"},
}};

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  return "unknown";
}

TheoremId theorem_from_name(const std::string& name) {
  for (const auto& [tid, n] : kNames)
    if (name == n) return tid;
  throw ParameterError("unknown theorem name: " + name);
}

InequalityReport make_report(TheoremId id, Index k, int m, double lhs, double rhs,
                             double deficit, Direction dir, double term_magnitude,
                             std::vector<long> modes, bool modes_admissible,
                             double tolerance) {
  InequalityReport r;
  r.theorem = id;
  r.k = k;
  r.m = m;
  r.lhs = lhs;
  r.rhs = rhs;
  r.deficit = deficit;
  r.direction = dir;
  r.scale = std::max({std::abs(lhs), std::abs(rhs), 1.0, term_magnitude});
  r.tolerance = tolerance;
  r.holds = deficit >= -tolerance * r.scale;
  // two independent signals, and equality never contradicts holds
  r.equality =
      r.holds && modes_admissible && std::abs(deficit) <= tol::kEquality * r.scale;
  r.active_modes = std::move(modes);
  return r;
}

nlohmann::json report_to_json(const InequalityReport& r) {
  nlohmann::json j;
  j["theorem_id"] = theorem_name(r.theorem);
  j["k"] = r.k;
  j["m"] = r.m;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["deficit"] = r.deficit;
  j["direction"] = r.direction == Direction::GreaterEqual ? "geq" : "leq";
  j["scale"] = r.scale;
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["active_modes"] = r.active_modes;
  j["tolerance"] = r.tolerance;
  if (!r.flags.empty()) j["flags"] = r.flags;
  return j;
}

std::string report_csv_header() {
  return "theorem_id,k,m,lhs,rhs,deficit,direction,scale,holds,equality,"
         "active_modes,tolerance,flags";
}

std::string report_to_csv(const InequalityReport& r) {
  std::string modes;
  for (std::size_t i = 0; i < r.active_modes.size(); ++i) {
    if (i) modes += ' ';
    modes += std::to_string(r.active_modes[i]);
  }
  std::string flags;
  for (std::size_t i = 0; i < r.flags.size(); ++i) {
    if (i) flags += ' ';
    flags += r.flags[i];
  }
  std::string row = theorem_name(r.theorem);
  row += ',' + std::to_string(r.k);
  row += ',' + std::to_string(r.m);
  row += ',' + fmt17(r.lhs);
  row += ',' + fmt17(r.rhs);
  row += ',' + fmt17(r.deficit);
  row += ',';
  row += (r.direction == Direction::GreaterEqual ? "geq" : "leq");
  row += ',' + fmt17(r.scale);
  row += ',';
  row += (r.holds ? "true" : "false");
  row += ',';
  row += (r.equality ? "true" : "false");
  row += ',' + modes;
  row += ',' + fmt17(r.tolerance);
  row += ',' + flags;
  return row;
}

}  // namespace isowirt
