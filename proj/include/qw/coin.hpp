#pragma once

#include <array>
#include <string>

#include "qw/mat2.hpp"

namespace qw {

// Rotation parameters of the coin: angle theta about the unit axis n,
// with an optional global phase delta (det C = e^{2i*delta}).
struct CoinSpec {
  double theta = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double global_phase = 0.0;
};

using CoinMatrix = Mat2;

// C = e^{i*delta} e^{i(theta/2) n.sigma}. Diagonal entries
// alpha_pm = cos(theta/2) +- i n_z sin(theta/2), off-diagonal
// beta_pm = (i n_x +- n_y) sin(theta/2); row order (+, -).
CoinMatrix build_coin(const CoinSpec& spec);

// Named presets: "hadamard" (theta = pi, n = (1,0,1)/sqrt(2)) and "identity".
// The mass-coupled walk coin lives in dirac.hpp (preset "dirac" there).
CoinSpec coin_preset(const std::string& name);

}  // namespace qw
