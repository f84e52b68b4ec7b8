#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qw {

// Periodic ring of N sites. Momenta live on the grid k_j = 2*pi*j/N - pi,
// j = 0..N-1, ascending, in units of 1/spacing.
struct Lattice {
  int sites;
  double spacing;
  double dt;

  explicit Lattice(int sites_, double spacing_ = 1.0, double dt_ = 1.0)
      : sites(sites_), spacing(spacing_), dt(dt_) {
    if (sites < 2) throw std::invalid_argument("Lattice: need at least 2 sites");
    if (sites % 2 != 0)
      throw std::invalid_argument("Lattice: site count must be even, got " +
                                  std::to_string(sites));
    if (!(spacing > 0.0)) throw std::invalid_argument("Lattice: spacing must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("Lattice: dt must be positive");
  }

  double momentum(int j) const {
    return 2.0 * std::numbers::pi * j / sites - std::numbers::pi;
  }

  std::vector<double> momentum_grid() const {
    std::vector<double> k(sites);
    for (int j = 0; j < sites; ++j) k[j] = momentum(j);
    return k;
  }

  bool operator==(const Lattice&) const = default;
};

}  // namespace qw
