#ifndef KHF_TREND_HPP
#define KHF_TREND_HPP

// Artifact-wide limit-trend rule: a sequence over an approach grid counts as
// "to zero" (resp. "diverging") when its last monotone_points steps are
// strictly monotone and the final/initial ratio passes 10^{-ratio_log10}
// (resp. 10^{ratio_log10}). The paper states limits, not rates; trends are
// reported as data and verdict thresholds live here, pinned.

#include <string>
#include <vector>

#include "khf/numeric.hpp"

namespace khf {

struct TrendRule {
  int monotone_points = 5;
  double ratio_log10 = 3.0;
};

struct TrendReport {
  std::string quantity;
  std::vector<Real> grid;
  std::vector<Real> values;
  std::string direction;  // "decreasing" | "increasing" | "flat" | "mixed"
  bool monotone_tail = false;
  bool to_zero = false;
  bool diverging = false;

  static TrendReport analyze(std::string quantity, std::vector<Real> grid,
                             std::vector<Real> values, const TrendRule& rule = {});
};

inline TrendReport TrendReport::analyze(std::string quantity, std::vector<Real> grid,
                                        std::vector<Real> values,
                                        const TrendRule& rule) {
  TrendReport r;
  r.quantity = std::move(quantity);
  r.grid = std::move(grid);
  r.values = std::move(values);
  const auto& v = r.values;
  if (v.size() < 2) {
    r.direction = "flat";
    return r;
  }
  std::size_t steps = std::min<std::size_t>(rule.monotone_points, v.size() - 1);
  std::size_t start = v.size() - 1 - steps;
  bool dec = true, inc = true, flat = true;
  for (std::size_t i = start; i + 1 < v.size(); ++i) {
    if (!(v[i + 1] < v[i])) dec = false;
    if (!(v[i + 1] > v[i])) inc = false;
    if (v[i + 1] != v[i]) flat = false;
  }
  r.direction = flat ? "flat" : dec ? "decreasing" : inc ? "increasing" : "mixed";
  r.monotone_tail = dec || inc;
  const Real& first = v.front();
  const Real& last = v.back();
  Real ratio_cut = pow(Real(10), rule.ratio_log10);
  if (dec && first > 0 && last >= 0 && last * ratio_cut < first) r.to_zero = true;
  if (inc && first > 0 && last > first * ratio_cut) r.diverging = true;
  return r;
}

}  // namespace khf

#endif
