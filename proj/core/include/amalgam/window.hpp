#pragma once

namespace amalgam {

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, strictly monotone between.
double smooth_step(double t) noexcept;

/// Radial bump: 1 on [0, plateau], 0 beyond support, smooth_step transition.
struct WindowProfile {
  double plateau = 0.5;
  double support = 0.75;

  /// Throws InvalidArgument unless 0 <= plateau < support.
  void validate() const;
  double operator()(double t) const noexcept;
};

}  // namespace amalgam
