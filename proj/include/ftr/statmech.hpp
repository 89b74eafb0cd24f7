#pragma once

#include <vector>

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"

namespace ftr {

/// Oscillator model: M independent oscillators sharing q energy units.
/// The constructor taking an atom count applies the conventional factor 3.
struct EinsteinSolid {
  unsigned long oscillators;  // M >= 1
  unsigned long energy_units;  // q >= 0

  EinsteinSolid(unsigned long m, unsigned long q);
  static EinsteinSolid from_atoms(unsigned long atoms, unsigned long q) {
    return EinsteinSolid(3 * atoms, q);
  }
};

/// Omega = (q + M - 1)! / (q! (M-1)!), exact.
BigInt multiplicity(const EinsteinSolid& s);

/// S = k_B ln Omega.
Quantity entropy(const BigInt& omega, const ConstantSet& constants);

/// Pr(E1)/Pr(E0) = Omega1/Omega0.
Real prob_ratio(const BigInt& omega1, const BigInt& omega0);

struct StateEnergies {
  std::vector<Quantity> energies;
  Quantity temperature;
};

/// Boltzmann occupation probabilities; computed after subtracting the top
/// energy so the exponentials stay bounded. Sums to 1 at working precision.
std::vector<Real> boltzmann(const StateEnergies& states, const ConstantSet& constants);

/// Occupation energetics. The degree form splits a total H0 by the degree
/// of homogeneity n; the scale-free form runs from the particle energy E0
/// through the multiplicity k and dimension-index l.
struct OccupationModel {
  enum class Form { ByDegree, ScaleFree };
  Form form;
  Rational degree_n;  // degree form only
  long multiplicity = 1;  // k; -1 is the degenerate single-variate case
  long dim_index = 1;     // l
  Quantity value;         // H0 for the degree form, E0 for the scale-free form

  static OccupationModel by_degree(Rational n, Quantity h0);
  static OccupationModel scale_free(long k, long l, Quantity e0);
};

struct OccupationSplit {
  Quantity particle_energy;  // E0
  Quantity field_energy;     // W0
  Quantity total;            // H0
};

OccupationSplit occupation_split(const OccupationModel& m);

/// -H_mean / k, the top-particle value of an additive characteristic.
Quantity top_vs_mean(const Quantity& h_mean, long k);

/// m2 = m1 k1 / k2 (from m1/m2 = k2/k1).
Quantity mass_from_multiplicity(const Quantity& m1, long k1, long k2);

struct RigidTransform {
  Real x, y, z, t_rigid;    // t' = -k t
  Rational g44;              // k^2
  Rational sqrt_minus_g;     // -k
  Rational p4_factor;        // p4 = -k p4'
};

RigidTransform rigid_transform(const Real& x, const Real& y, const Real& z, const Real& t,
                               long k);

}  // namespace ftr
