#include "qw/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qw {

CoinMatrix build_coin(const CoinSpec& spec) {
  const auto& n = spec.axis;
  const double axis_norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(axis_norm - 1.0) > 1e-12)
    throw std::invalid_argument("build_coin: rotation axis must be a unit vector");

  const double c = std::cos(spec.theta / 2.0);
  const double s = std::sin(spec.theta / 2.0);
  const cplx alpha_p(c, n[2] * s);
  const cplx alpha_m(c, -n[2] * s);
  const cplx beta_p(n[1] * s, n[0] * s);   // (i n_x + n_y) sin(theta/2)
  const cplx beta_m(-n[1] * s, n[0] * s);  // (i n_x - n_y) sin(theta/2)

  const cplx phase = std::polar(1.0, spec.global_phase);
  return {phase * alpha_p, phase * beta_p, phase * beta_m, phase * alpha_m};
}

CoinSpec coin_preset(const std::string& name) {
  if (name == "hadamard") {
    const double r = 1.0 / std::sqrt(2.0);
    return {std::numbers::pi, {r, 0.0, r}, 0.0};
  }
  if (name == "identity") return {0.0, {0.0, 0.0, 1.0}, 0.0};
  throw std::invalid_argument("coin_preset: unknown preset '" + name + "'");
}

}  // namespace qw
