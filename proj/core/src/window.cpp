#include "amalgam/window.hpp"

#include <cmath>

#include "amalgam/error.hpp"

namespace amalgam {

double smooth_step(double t) noexcept {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

void WindowProfile::validate() const {
  if (!(plateau >= 0.0 && support > plateau)) {
    throw Error(ErrorKind::InvalidArgument, "window needs 0 <= plateau < support");
  }
}

double WindowProfile::operator()(double t) const noexcept {
  const double r = std::abs(t);
  if (r <= plateau) return 1.0;
  if (r >= support) return 0.0;
  return smooth_step((support - r) / (support - plateau));
}

}  // namespace amalgam
