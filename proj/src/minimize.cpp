#include "sentinet/minimize.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sentinet/error.hpp"

namespace sentinet {

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMinimum out;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
    // Bracket width stops shrinking once it reaches a few ulps.
    if (!(c > a || d < b)) break;
  }
  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  return out;
}

ScalarMinimum grid_then_golden(const std::function<double(double)>& f, double lo, double hi,
                               double step, double tol) {
  if (!(hi > lo) || !(step > 0.0)) throw DomainError("grid search needs lo < hi and step > 0");
  const auto points = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;

  ScalarMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = f(x);
    ++best.evaluations;
    if (std::isnan(v)) throw NumericalError("objective is NaN at x=" + std::to_string(x));
    if (v < best.value) {
      best.value = v;
      best.x = x;
      best_index = i;
    }
  }
  if (!std::isfinite(best.value)) throw NumericalError("objective has no finite value on the grid");

  const double left = std::max(lo, lo + (static_cast<double>(best_index) - 1.0) * step);
  const double right = std::min(hi, lo + (static_cast<double>(best_index) + 1.0) * step);
  const ScalarMinimum refined = golden_section(f, left, right, tol);
  best.evaluations += refined.evaluations;
  if (refined.value < best.value) {
    best.value = refined.value;
    best.x = refined.x;
  }
  return best;
}

}  // namespace sentinet
