#include "ftr/statgeo.hpp"

#include <cmath>

#include "ftr/errors.hpp"

namespace ftr {

CosmicFrame CosmicFrame::from(const Real& n, const Quantity& r0) {
  if (!n.is_positive()) throw NonPositiveInput("particle count N");
  if (!r0.magnitude.is_positive()) throw NonPositiveInput("radius R0");
  if (!r0.dims.compatible(DimSig::of_length())) {
    throw DimensionMismatch("R0 must be a length, got " + r0.dims.to_string());
  }
  CosmicFrame f;
  f.n_particles = n;
  f.radius = r0;
  Real two_sqrt_n = Real(2) * n.sqrt();
  f.sigma = {r0.magnitude / two_sqrt_n, r0.dims, "sigma"};
  f.sigma_eps = Real(1) / two_sqrt_n;
  f.range_k = {Real(2) * f.sigma.magnitude, r0.dims, "k"};
  return f;
}

Real GaussianPDF::density(const Quantity& x) const {
  if (!same_dims(x, std)) throw DimensionMismatch("density argument vs std");
  Real u = (x.magnitude - mean.magnitude) / std.magnitude;
  Real norm = (Real(2) * Real::pi()).sqrt() * std.magnitude;
  return (-(u * u) / Real(2)).exp() / norm;
}

Quantity sigma_from_cosmic(const Real& n, const Quantity& r0) {
  return CosmicFrame::from(n, r0).sigma;
}

FluctuationSplit fluctuation_split(const Real& n0, const Real& n_total) {
  if (!n0.is_positive()) throw NonPositiveInput("n0");
  if (n0 >= n_total) throw DomainError("n0 must be smaller than N");
  Quantity zero = dimensionless(Real(0));
  FluctuationSplit s;
  s.ordinary = {zero, dimensionless(n0.sqrt())};
  s.extraordinary = {zero, dimensionless(n0 / n_total.sqrt())};
  s.compound = {zero, dimensionless((n0 * (Real(1) - n0 / n_total)).sqrt())};
  s.zeta_std = Real(1) / n_total.sqrt();
  return s;
}

ZetaEpsilon zeta_epsilon(const Real& zeta) {
  Real one_plus = Real(1) + zeta;
  if (!one_plus.is_positive()) throw DomainError("1 + zeta must be positive");
  ZetaEpsilon r;
  r.exact = one_plus.sqrt() - Real(1);
  r.approximate = zeta / Real(2);
  r.difference = (r.approximate - r.exact).abs();
  return r;
}

LocalUncertainty local_uncertainty(const Quantity& r, const CosmicFrame& frame) {
  if (!r.dims.compatible(DimSig::of_length())) {
    throw DimensionMismatch("local_uncertainty expects a length");
  }
  Real sig2 = frame.sigma.magnitude * frame.sigma.magnitude;
  Real corr = frame.sigma_eps * r.magnitude;
  Real rad2 = sig2 - corr * corr;
  if (rad2.is_negative()) {
    // Boundary r = R0 is legal; reject only beyond working-precision slack.
    Real tol = Real::epsilon_at(5) * sig2;
    if (rad2.abs() > tol) throw OutOfRange("r beyond the spherical frame");
    rad2 = Real(0);
  }
  return {{rad2.sqrt(), frame.sigma.dims, "radial"}, frame.sigma};
}

Quantity line_element(const Quantity& r, const Quantity& dr, const Real& dtheta,
                      const Real& dphi, const Real& theta, const CosmicFrame& frame) {
  if (!r.dims.compatible(DimSig::of_length()) || !dr.dims.compatible(DimSig::of_length())) {
    throw DimensionMismatch("line_element expects lengths");
  }
  Real abs_r = r.magnitude.abs();
  if (abs_r == frame.radius.magnitude) throw Singular("r = R0");
  if (abs_r > frame.radius.magnitude) throw OutOfRange("|r| beyond R0");
  Real ratio = frame.sigma_eps / frame.sigma.magnitude;  // 1/R0
  Real denom = Real(1) - (ratio * r.magnitude) * (ratio * r.magnitude);
  Real radial = dr.magnitude * dr.magnitude / denom;
  Real sin_theta = theta.sin();
  Real angular =
      r.magnitude * r.magnitude * (dtheta * dtheta + sin_theta * sin_theta * dphi * dphi);
  DimSig area = DimSig::of_length() + DimSig::of_length();
  return {radial + angular, area, "ds^2"};
}

Quantity direct_measure_correction(const Quantity& sigma) {
  if (sigma.magnitude.is_negative()) throw NonPositiveInput("sigma");
  return qscale(Real(2).sqrt(), sigma);
}

Quantity range_constant(const CosmicFrame& frame) { return frame.range_k; }

Quantity einstein_ratio(const ConstantSet& constants) {
  Quantity g = constants.get("G");
  Quantity m_h = constants.get("m_h");
  Quantity c = constants.get("c");
  Quantity c2 = qmul(c, c);
  Quantity out = qdiv(qmul(g, m_h), qscale(Real::pi(), c2));
  out.label = "R0/N";
  return out;
}

CosmicFrame solve_cosmic_pair(const Quantity& ratio, const Quantity& k) {
  if (!ratio.magnitude.is_positive() || !k.magnitude.is_positive()) {
    throw NonPositiveInput("solve_cosmic_pair arguments");
  }
  if (!ratio.dims.compatible(DimSig::of_length()) || !k.dims.compatible(DimSig::of_length())) {
    throw DimensionMismatch("solve_cosmic_pair expects lengths");
  }
  Real sqrt_n = k.magnitude / ratio.magnitude;
  Real n = sqrt_n * sqrt_n;
  Quantity r0{k.magnitude * sqrt_n, k.dims, "R0"};
  return CosmicFrame::from(n, r0);
}

Quantity carrier_range(const Quantity& m, const ConstantSet& constants) {
  if (!m.magnitude.is_positive()) throw NonPositiveInput("carrier mass");
  Quantity c = constants.get("c");
  Quantity mass = m;
  if (m.dims.compatible(DimSig::of_energy())) {
    mass = qdiv(m, qmul(c, c));
  } else if (!m.dims.compatible(DimSig::of_mass())) {
    throw DimensionMismatch("carrier_range expects a mass or an energy");
  }
  Quantity hbar = constants.hbar();
  Quantity out = qdiv(hbar, qscale(Real(2), qmul(mass, c)));
  out.label = "range";
  return out;
}

Real projection_ratio(const CosmicFrame& frame) { return Real(1) - frame.sigma_eps; }

namespace {

// splitmix64; the per-trial stream key.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic Gaussian pairs via Box-Muller on a 64-bit counter stream.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t key) : state_(key) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double next_uniform() {
    state_ = mix64(state_);
    // (0,1]: avoids log(0).
    return (static_cast<double>(state_ >> 11) + 1.0) * 0x1.0p-53;
  }
  std::uint64_t state_;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace

McReport mc_centroid(std::uint64_t n_particles, std::uint64_t trials, std::uint64_t seed,
                     double r0) {
  if (n_particles < 1) throw NonPositiveInput("n_particles");
  if (trials < 1) throw NonPositiveInput("trials");
  const double coord_std = r0 / 2.0;

  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    GaussianStream stream(mix64(seed ^ mix64(t + 1)));
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n_particles; ++i) acc += stream.next();
    double centroid = coord_std * acc / static_cast<double>(n_particles);
    sum_sq += centroid * centroid;
  }

  McReport rep;
  rep.n_particles = n_particles;
  rep.trials = trials;
  rep.seed = seed;
  rep.predicted_std = coord_std / std::sqrt(static_cast<double>(n_particles));
  rep.empirical_std = std::sqrt(sum_sq / static_cast<double>(trials));
  double se = rep.predicted_std / std::sqrt(2.0 * static_cast<double>(trials));
  rep.z_score = (rep.empirical_std - rep.predicted_std) / se;
  return rep;
}

}  // namespace ftr
