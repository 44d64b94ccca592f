#pragma once

#include <vector>

namespace amalgam {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log(y) against log(x). Throws DegenerateFit when fewer
/// than two points are usable or the x values do not vary.
LinearFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace amalgam
