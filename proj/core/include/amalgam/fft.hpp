#pragma once

#include <vector>

#include "amalgam/grid.hpp"

namespace amalgam {

/// Continuous-convention Fourier transform on the grid:
/// fhat(xi_m) = h^d sum_x f(x) e^{-i x xi_m}, with the inverse chosen so that
/// inverse_transform(forward_transform(f)) == f. Parseval then reads
/// h^d sum |f|^2 = (2 pi P)^{-d} sum |fhat|^2.
std::vector<Complex> forward_transform(const GridFunction& f);
GridFunction inverse_transform(const GridSpec& spec, std::vector<Complex> spectrum);

/// Raw unnormalized DFT in place (sign -1 forward, +1 backward).
void dft_in_place(const GridSpec& spec, std::vector<Complex>& data, int sign);

}  // namespace amalgam
