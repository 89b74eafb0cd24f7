#include "ftr/statmech.hpp"

#include "ftr/errors.hpp"

namespace ftr {

EinsteinSolid::EinsteinSolid(unsigned long m, unsigned long q)
    : oscillators(m), energy_units(q) {
  if (m < 1) throw NonPositiveInput("oscillator count");
}

BigInt multiplicity(const EinsteinSolid& s) {
  return BigInt::binomial(s.energy_units + s.oscillators - 1, s.energy_units);
}

Quantity entropy(const BigInt& omega, const ConstantSet& constants) {
  if (omega < BigInt(1)) throw NonPositiveInput("multiplicity");
  Quantity k_b = constants.get("k_B");
  return {k_b.magnitude * Real(omega).log(), k_b.dims, "S"};
}

Real prob_ratio(const BigInt& omega1, const BigInt& omega0) {
  if (omega0 < BigInt(1)) throw NonPositiveInput("reference multiplicity");
  return Real(omega1) / Real(omega0);
}

std::vector<Real> boltzmann(const StateEnergies& states, const ConstantSet& constants) {
  if (states.energies.empty()) throw DomainError("no states");
  if (!states.temperature.magnitude.is_positive()) throw NonPositiveInput("temperature");
  Quantity k_b = constants.get("k_B");
  Quantity kt = qmul(k_b, states.temperature);
  if (!kt.dims.compatible(DimSig::of_energy())) {
    throw DimensionMismatch("k_B T is not an energy");
  }

  // Shift by the maximal energy before exponentiating; the ratios are
  // unchanged and the exponentials stay in (0, 1].
  Real top = states.energies.front().magnitude;
  for (const auto& e : states.energies) {
    if (!e.dims.compatible(DimSig::of_energy())) throw DimensionMismatch("state energy");
    if (e.magnitude > top) top = e.magnitude;
  }
  std::vector<Real> weights;
  weights.reserve(states.energies.size());
  Real z(0);
  for (const auto& e : states.energies) {
    Real w = (-(e.magnitude - top) / kt.magnitude).exp();
    z += w;
    weights.push_back(std::move(w));
  }
  for (auto& w : weights) w = w / z;
  return weights;
}

OccupationModel OccupationModel::by_degree(Rational n, Quantity h0) {
  OccupationModel m;
  m.form = Form::ByDegree;
  m.degree_n = std::move(n);
  m.value = std::move(h0);
  return m;
}

OccupationModel OccupationModel::scale_free(long k, long l, Quantity e0) {
  OccupationModel m;
  m.form = Form::ScaleFree;
  m.multiplicity = k;
  m.dim_index = l;
  m.value = std::move(e0);
  return m;
}

OccupationSplit occupation_split(const OccupationModel& m) {
  OccupationSplit out;
  if (m.form == OccupationModel::Form::ByDegree) {
    out.total = m.value;
    out.particle_energy = qscale(m.degree_n, m.value);
    out.field_energy = qscale(Rational(1) - m.degree_n, m.value);
    return out;
  }
  if (m.dim_index == 0) throw ZeroL("scale-free split needs l != 0");
  Rational k(m.multiplicity), l(m.dim_index);
  out.particle_energy = m.value;
  out.field_energy = qscale(-((l + k) / l), m.value);
  out.total = qscale(-(k / l), m.value);
  return out;
}

Quantity top_vs_mean(const Quantity& h_mean, long k) {
  if (k == 0) throw ZeroMultiplicity("top_vs_mean");
  return qscale(-Rational(1, k), h_mean);
}

Quantity mass_from_multiplicity(const Quantity& m1, long k1, long k2) {
  if (k1 < 1 || k2 < 1) throw NonPositiveMultiplicity("mass_from_multiplicity");
  return qscale(Rational(k1, k2), m1);
}

RigidTransform rigid_transform(const Real& x, const Real& y, const Real& z, const Real& t,
                               long k) {
  RigidTransform r;
  r.x = x;
  r.y = y;
  r.z = z;
  r.t_rigid = Real(-k) * t;
  r.g44 = Rational(k) * Rational(k);
  r.sqrt_minus_g = Rational(-k);
  r.p4_factor = Rational(-k);
  return r;
}

}  // namespace ftr
