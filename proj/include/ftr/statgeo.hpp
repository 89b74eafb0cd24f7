#pragma once

#include <cstdint>
#include <string>

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"

namespace ftr {

/// The pair (N, R0) with the derived uncertainty constant sigma, the
/// dimensionless scale deviation sigma_eps = 1/(2 sqrt N) and the range
/// constant k = 2 sigma.
struct CosmicFrame {
  Real n_particles;      // N
  Quantity radius;       // R0, length
  Quantity sigma;        // R0 / (2 sqrt N)
  Real sigma_eps;        // 1 / (2 sqrt N), dimensionless
  Quantity range_k;      // 2 sigma

  static CosmicFrame from(const Real& n, const Quantity& r0);
};

struct GaussianPDF {
  Quantity mean;
  Quantity std;

  /// Density value at x (x must carry the same dims as std).
  Real density(const Quantity& x) const;
};

/// The ordinary / extraordinary resolution of the counting fluctuation.
/// Compound variance = n0 (1 - n0/N): the ordinary variance n0 minus the
/// finite-universe correction n0^2/N carried by the extraordinary part.
struct FluctuationSplit {
  GaussianPDF ordinary;       // std sqrt(n0)
  GaussianPDF extraordinary;  // std of y: n0 / sqrt(N)
  GaussianPDF compound;       // std sqrt(n0 (1 - n0/N))
  Real zeta_std;              // std of zeta = y/n0: 1/sqrt(N)
};

struct ZetaEpsilon {
  Real exact;        // (1+zeta)^(1/2) - 1
  Real approximate;  // zeta / 2
  Real difference;
};

struct McReport {
  std::uint64_t n_particles = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double empirical_std = 0;
  double predicted_std = 0;
  double z_score = 0;
};

Quantity sigma_from_cosmic(const Real& n, const Quantity& r0);

FluctuationSplit fluctuation_split(const Real& n0, const Real& n_total);

ZetaEpsilon zeta_epsilon(const Real& zeta);

struct LocalUncertainty {
  Quantity radial;
  Quantity transverse;
};
/// Throws OutOfRange when sigma_eps^2 r^2 exceeds sigma^2 beyond the
/// working-precision tolerance (r = R0 itself is legal).
LocalUncertainty local_uncertainty(const Quantity& r, const CosmicFrame& frame);

/// ds^2 = dr^2/(1 - (sigma_eps/sigma)^2 r^2) + r^2 dtheta^2
///        + r^2 sin^2(theta) dphi^2, evaluated at the given theta.
Quantity line_element(const Quantity& r, const Quantity& dr, const Real& dtheta,
                      const Real& dphi, const Real& theta, const CosmicFrame& frame);

/// sigma*sqrt(2): the geometric-origin scatter removed by direct measurement.
Quantity direct_measure_correction(const Quantity& sigma);

Quantity range_constant(const CosmicFrame& frame);

/// R0/N = G m_h / (pi c^2).
Quantity einstein_ratio(const ConstantSet& constants);

/// Inverts (einstein_ratio, range_constant): sqrt(N) = k/ratio, R0 = k sqrt(N).
CosmicFrame solve_cosmic_pair(const Quantity& ratio, const Quantity& k);

/// Range of the interaction mediated by a carrier of mass m (or rest energy,
/// converted through c^2): k = hbar / (2 m c).
Quantity carrier_range(const Quantity& m, const ConstantSet& constants);

/// O'P'/OP = 1 - sigma_eps.
Real projection_ratio(const CosmicFrame& frame);

/// Samples n_particles coordinates per trial from a centered Gaussian with
/// std R0/2 and checks the centroid scatter against R0/(2 sqrt n).
/// Deterministic for a given seed; trials draw from independent substreams
/// keyed by (seed, trial index), so a partitioned evaluation merges to the
/// same report.
McReport mc_centroid(std::uint64_t n_particles, std::uint64_t trials, std::uint64_t seed,
                     double r0);

}  // namespace ftr
