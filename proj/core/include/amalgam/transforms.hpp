#pragma once

#include <vector>

#include "amalgam/grid.hpp"
#include "amalgam/indices.hpp"

namespace amalgam {

/// Short-time Fourier transform samples V_g f(x_j, xi_m) for x_j = j * stride * h,
/// all frequency bins m. Row j holds one window position. d = 1 only.
struct StftSamples {
  int positions = 0;
  int stride = 1;
  int bins = 0;
  std::vector<Complex> values;  // positions x bins

  const Complex& at(int j, int m) const { return values[static_cast<std::size_t>(j) * bins + m]; }
};

/// Throws UnsupportedSpace for d != 1 and InvalidArgument when the grids differ,
/// stride does not divide N, or g is not L2-normalized (within 1e-6).
StftSamples stft_grid(const GridFunction& f, const GridFunction& g, int stride);

/// Relative spectral energy of f outside the Euclidean ball B(0, radius).
double spectral_excess(const GridFunction& f, double radius);

/// Grid convolution (f * g)(x) = integral f(x - y) g(y) dy.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

struct InequalityCheck {
  double ratio = 0.0;        // ||f||_q / ||f||_p, or ||f*g||_p / (||f||_p ||g||_p)
  double scale = 1.0;        // R^{d(1/p-1/q)} or (R1+R2)^{d(1/p-1)}
  double normalized = 0.0;   // ratio / scale
};

/// Bernstein ratio for f band-limited to B(0,R). Throws NotBandLimited
/// when more than 1e-10 of the spectral energy lies outside the ball.
InequalityCheck check_bernstein(const GridFunction& f, double radius, const ReciprocalIndex& p,
                                const ReciprocalIndex& q);
/// Young-type ratio for 0 < p < 1, f in B(0,R1), g in B(0,R2).
InequalityCheck check_young_sub1(const GridFunction& f, const GridFunction& g, const ReciprocalIndex& p, double r1,
                                 double r2);

struct InequalitySweep {
  std::vector<double> radii;
  std::vector<double> ratios;
  double fitted_exponent = 0.0;
  double expected_exponent = 0.0;
};

/// Dilation sweep over band-limited bumps of radius R; fits ratio ~ R^e.
InequalitySweep bernstein_sweep(const GridSpec& spec, const ReciprocalIndex& p, const ReciprocalIndex& q,
                                const std::vector<double>& radii);
/// Same with R1 = R2 = R for the Young-type inequality; fits against R1 + R2.
InequalitySweep young_sweep(const GridSpec& spec, const ReciprocalIndex& p, const std::vector<double>& radii);

}  // namespace amalgam
