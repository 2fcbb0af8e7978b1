#pragma once

#include "isowirt/types.hpp"

#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace isowirt {

enum class TheoremId {
  WirtingerM,
  WirtingerLambda,
  WirtingerS,
  StabilityC,
  StabilityS,
  ChakerianV1,
  ChakerianV2,
  DiscreteHigher,
  EquilateralBound,
  LengthFormEven,
  GenWirtinger,
  SmoothIsoperimetric,
  ChernoffCore,
  ChernoffTheorem,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

// Conventional orientation of the inequality's statement; the deficit below
// is always re-oriented so that "holds" means deficit >= 0.
enum class Direction { GreaterEqual, LessEqual };

// Two-sided record of one inequality evaluation.
//
// For inequalities displayed as a single signed sum ">= 0", lhs and rhs carry
// the negative and positive parts of that sum, so both sides stay meaningful
// and max(|lhs|, |rhs|) reflects the size of the numbers that were actually
// combined.  `scale` additionally includes the total magnitude of the summed
// terms: the displayed sums telescope heavily at high order, and tolerances
// anchored to the cancelled value instead of the term size would reject
// correct results for spurious reasons.
struct InequalityReport {
  TheoremId theorem = TheoremId::WirtingerM;
  Index k = 0;  // 0 when not applicable
  int m = 0;    // 0 when not applicable
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  Direction direction = Direction::GreaterEqual;
  double scale = 1.0;
  bool holds = false;
  bool equality = false;
  std::vector<long> active_modes;
  double tolerance = tol::kDefault;
  std::vector<std::string> flags;
};

// Assembles holds / equality from the oriented deficit:
//   holds    <=>  deficit >= -tolerance * scale
//   equality <=>  modes_admissible and |deficit| <= tol::kEquality * scale
// with scale = max(|lhs|, |rhs|, 1, term_magnitude).
InequalityReport make_report(TheoremId id, Index k, int m, double lhs, double rhs,
                             double deficit, Direction dir, double term_magnitude,
                             std::vector<long> modes, bool modes_admissible,
                             double tolerance);

nlohmann::json report_to_json(const InequalityReport& r);
std::string report_csv_header();
std::string report_to_csv(const InequalityReport& r);

}  // namespace isowirt
