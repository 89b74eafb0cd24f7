#pragma once

#include <set>
#include <string>
#include <utility>

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"

namespace ftr {

/// A carrier particle: a blank slate with k independent components.
/// Stabilizing a named characteristic freezes it and drops one effective
/// degree of freedom.
class Carrier {
 public:
  explicit Carrier(int multiplicity);

  int multiplicity() const { return k_; }
  const std::string& label() const { return label_; }
  void stabilize(const std::string& characteristic);
  long effective_multiplicity() const {
    return k_ - static_cast<long>(stabilized_.size());
  }
  const std::set<std::string>& stabilized() const { return stabilized_; }

 private:
  int k_;
  std::string label_;
  std::set<std::string> stabilized_;
};

struct TwoParticle {
  Quantity m;
  Quantity m_prime;

  TwoParticle(Quantity a, Quantity b);
};

struct TwoParticleReduction {
  Quantity external;  // M = m + m'
  Quantity internal;  // mu = m m' / (m + m')
};

TwoParticleReduction reduce_two_particle(const TwoParticle& p);

/// Roots of m^2 - m M1 + M1 mu = 0, returned (heavy, light).
/// ComplexRoots when the discriminant is negative.
std::pair<Quantity, Quantity> two_particle_roots(const Quantity& m1, const Quantity& mu);

/// beta m0 = (137/136) m0.
Quantity hydrocule_rest(const Quantity& m0);

enum class SystemDirection { AtoB, BtoA };

/// Quantity classes with a fixed conversion exponent on beta; anything else
/// is UnknownClass rather than a guess.
enum class SystemClass { Length, Time, IntraculeMass, ExtraculeMassDensity };

Rational system_exponent(SystemClass cls);

Quantity system_convert(const Quantity& q, SystemClass cls, SystemDirection dir);
/// Raw-exponent form for callers that carry their own dimension index.
Quantity system_convert(const Quantity& q, const Rational& exponent, SystemDirection dir);

/// A m^2 + A' m'^2 - C m m'; zero certifies the rest-density consistency
/// condition for the mutual energy tensor.
Quantity mutual_density_check(const Quantity& m, const Quantity& m_prime, const Real& a,
                              const Real& a_prime, const Real& c);

struct PairEnergies {
  Quantity external;
  Quantity internal;
};

/// Free-intracule energies: E_e = m0 c^2 + p'^2/2m0, E_i = mu c^2 + p^2/2mu.
PairEnergies energies_free(const Quantity& m0, const Quantity& mu, const Quantity& p_ext,
                           const Quantity& p_int, const ConstantSet& constants);
/// Bound-intracule form: the external kinetic term is dropped.
PairEnergies energies_bound(const Quantity& m0, const Quantity& mu, const Quantity& p_int,
                            const ConstantSet& constants);

}  // namespace ftr
