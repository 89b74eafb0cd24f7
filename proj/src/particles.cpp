#include "ftr/particles.hpp"

#include <algorithm>
#include <array>

#include "ftr/errors.hpp"

namespace ftr {

Carrier::Carrier(int multiplicity) : k_(multiplicity) {
  static constexpr std::array<int, 6> allowed{1, 3, 4, 10, 136, 137};
  if (std::find(allowed.begin(), allowed.end(), multiplicity) == allowed.end()) {
    throw NonPositiveMultiplicity("carrier multiplicity must be one of 1,3,4,10,136,137");
  }
  label_ = "V" + std::to_string(multiplicity);
}

void Carrier::stabilize(const std::string& characteristic) {
  stabilized_.insert(characteristic);
}

TwoParticle::TwoParticle(Quantity a, Quantity b) : m(std::move(a)), m_prime(std::move(b)) {
  if (!m.magnitude.is_positive() || !m_prime.magnitude.is_positive()) {
    throw NonPositiveInput("two-particle masses");
  }
  if (!same_dims(m, m_prime)) throw DimensionMismatch("two-particle masses");
}

TwoParticleReduction reduce_two_particle(const TwoParticle& p) {
  Quantity total = qadd(p.m, p.m_prime);
  Quantity reduced = qdiv(qmul(p.m, p.m_prime), total);
  total.label = "M";
  reduced.label = "mu";
  return {total, reduced};
}

std::pair<Quantity, Quantity> two_particle_roots(const Quantity& m1, const Quantity& mu) {
  if (!same_dims(m1, mu)) throw DimensionMismatch("two_particle_roots arguments");
  // m^2 - m M1 + M1 mu = 0
  Quantity disc = qsub(qmul(m1, m1), qscale(Rational(4), qmul(m1, mu)));
  if (disc.magnitude.is_negative()) throw ComplexRoots("discriminant < 0");
  Quantity root = qsqrt(disc);
  Quantity heavy = qscale(Rational(1, 2), qadd(m1, root));
  Quantity light = qscale(Rational(1, 2), qsub(m1, root));
  heavy.label = "heavy";
  light.label = "light";
  return {heavy, light};
}

Quantity hydrocule_rest(const Quantity& m0) {
  if (!m0.magnitude.is_positive()) throw NonPositiveInput("m0");
  return qscale(bond_factor(), m0);
}

Rational system_exponent(SystemClass cls) {
  switch (cls) {
    case SystemClass::Length: return Rational(-1, 6);
    case SystemClass::Time: return Rational(-1, 6);
    case SystemClass::IntraculeMass: return Rational(1, 2);
    case SystemClass::ExtraculeMassDensity: return Rational(1);
  }
  throw UnknownClass("system_exponent");
}

Quantity system_convert(const Quantity& q, SystemClass cls, SystemDirection dir) {
  return system_convert(q, system_exponent(cls), dir);
}

Quantity system_convert(const Quantity& q, const Rational& exponent, SystemDirection dir) {
  Rational e = dir == SystemDirection::AtoB ? exponent : -exponent;
  Real beta{Rational(bond_factor())};
  return qscale(beta.pow(e), q);
}

Quantity mutual_density_check(const Quantity& m, const Quantity& m_prime, const Real& a,
                              const Real& a_prime, const Real& c) {
  Quantity self = qscale(a, qmul(m, m));
  Quantity self_prime = qscale(a_prime, qmul(m_prime, m_prime));
  Quantity mutual = qscale(c, qmul(m, m_prime));
  return qsub(qadd(self, self_prime), mutual);
}

namespace {
Quantity kinetic(const Quantity& p, const Quantity& mass) {
  return qdiv(qmul(p, p), qscale(Rational(2), mass));
}
}  // namespace

PairEnergies energies_free(const Quantity& m0, const Quantity& mu, const Quantity& p_ext,
                           const Quantity& p_int, const ConstantSet& constants) {
  if (!m0.magnitude.is_positive() || !mu.magnitude.is_positive()) {
    throw NonPositiveInput("masses");
  }
  Quantity c = constants.get("c");
  Quantity c2 = qmul(c, c);
  PairEnergies out;
  out.external = qadd(qmul(m0, c2), kinetic(p_ext, m0));
  out.internal = qadd(qmul(mu, c2), kinetic(p_int, mu));
  return out;
}

PairEnergies energies_bound(const Quantity& m0, const Quantity& mu, const Quantity& p_int,
                            const ConstantSet& constants) {
  if (!m0.magnitude.is_positive() || !mu.magnitude.is_positive()) {
    throw NonPositiveInput("masses");
  }
  Quantity c = constants.get("c");
  Quantity c2 = qmul(c, c);
  PairEnergies out;
  out.external = qmul(m0, c2);
  out.internal = qadd(qmul(mu, c2), kinetic(p_int, mu));
  return out;
}

}  // namespace ftr
