#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace sentinet {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

// Golden-section search on [lo, hi] until the bracket is narrower than tol.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-10);

// Evaluates f on the grid lo, lo + step, ..., hi, then refines around the
// best grid point with golden-section search. The returned value is never
// worse than the best grid point. Grid points are computed as lo + i * step
// from integers, so lo + k * step lands exactly on representable values
// like 0 when lo and step allow it.
ScalarMinimum grid_then_golden(const std::function<double(double)>& f, double lo, double hi,
                               double step, double tol = 1e-10);

}  // namespace sentinet
