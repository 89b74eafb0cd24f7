#pragma once

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"
#include "ftr/statgeo.hpp"

namespace ftr {

struct WeightConstant;

/// Standardized background environment: a cosmic frame taken at one of the
/// two temperature limits. At zero temperature the particles are at rest
/// and the weight function governs physical momenta; the infinite limit
/// carries mean-square momenta varpi^2 per axis.
enum class UranoidTemperature { Zero, Infinite };

struct Uranoid {
  CosmicFrame frame;
  UranoidTemperature temperature = UranoidTemperature::Zero;

  WeightConstant weight(const ConstantSet& constants) const;
  /// Mean momentum energy: zero in the rest environment, sqrt(3) varpi c in
  /// the infinite limit.
  Quantity mean_energy(const ConstantSet& constants) const;
};

/// Flat-space substitute environment: N1 particles in a sphere of radius R1
/// chosen to reproduce the uranoid's sigma through R1^2/(5 N1) = sigma^2.
/// The special variant keeps N1 = N and R1 = R0 but retains the
/// sub-threshold hbar_1.
struct Planoid {
  Real n1;
  Quantity r1;
  bool special = false;

  static Planoid matching_sigma(const Quantity& sigma, const Real& n1);
};

struct WeightParams {
  Quantity varpi;  // hbar / (2 sigma), momentum units
};

struct WeightConstant {
  Quantity varpi;        // momentum
  Quantity as_energy;    // varpi * c
  Real ratio_to_mec2;    // (varpi c) / (m_e c^2)
};

/// varpi = hbar/(2 sigma), with its energy form and the ratio to the
/// electron rest energy.
WeightConstant weight_constant(const Quantity& sigma, const ConstantSet& constants);

/// w(p) = (2 pi varpi^2)^(-1/2) exp(-p^2 / 2 varpi^2).
Real weight_apply(const Quantity& p, const WeightParams& params);

struct InfiniteTEnergy {
  Quantity energy;     // sqrt(3) varpi c
  Real ratio_to_mec2;
};

/// Mean energy in the infinite-temperature environment: E^2 = 3 varpi^2
/// in momentum form, reported as an energy.
InfiniteTEnergy infinite_t_energy(const Quantity& sigma, const ConstantSet& constants);

/// Top energy of the filled momentum sphere at number density n:
/// E = (3n/8pi)^(2/3) h^2 / (2 mu0), from two extracules per cell h^3.
Quantity exclusion_top_energy(const Quantity& number_density, const Quantity& mu0,
                              const ConstantSet& constants);

/// Exactly 3/5: mean over top energy for the filled momentum sphere.
Rational mean_over_top();

struct ProperMass {
  Quantity m0;
  Quantity m_external;  // M = (136/10) m0
};

/// m0 = (3/4) hbar sqrt(4N/5) / (c R0); the observational form carries an
/// extra beta^(1/6).
ProperMass proper_mass(const CosmicFrame& frame, const ConstantSet& constants,
                       bool observational);

/// sigma = (136/10)(3/4) beta^(1/6) hbar sqrt(1/5) / (M c).
Quantity sigma_from_M(const Quantity& m_external, const ConstantSet& constants);

struct ExclusionMass {
  Quantity m0;          // from m0^2 = (3/4)(3/5) hbar^2 N / R0^2
  Quantity g_subthreshold;  // G1 = (5/3) G
};

/// The same proper mass reached through the exclusion route with
/// hbar_1^2 = (3/5) hbar^2; must agree with proper_mass at working
/// precision.
ExclusionMass proper_mass_from_exclusion(const CosmicFrame& frame,
                                         const ConstantSet& constants);

/// m0 = (3/4) hbar sqrt(N1) / (c R1).
Quantity planoid_mass(const Planoid& p, const ConstantSet& constants);

struct SpecialPlanoid {
  Quantity sigma1;  // sqrt(4/5) sigma
  Quantity varpi1;  // sqrt(3/4) varpi
};

SpecialPlanoid special_planoid(const Quantity& sigma, const ConstantSet& constants);

/// B = -(4/3)^(1/2) 16 pi e^2 sigma^2.
Quantity non_coulomb_B(const Quantity& sigma, const ConstantSet& constants);

struct NonCoulombEnergy {
  Quantity energy;     // E_nc at the given r
  Quantity amplitude;  // well depth A (positive)
  Quantity range_k;    // 2 sigma, the k of the exp(-r^2/k^2) form
};

/// E_nc = -(16/3pi)^(1/2) (e^2/sigma) exp(-r^2/4sigma^2); the mass-corrected
/// form scales by the proton-to-standard ratio 136/10.
NonCoulombEnergy non_coulomb_energy(const Quantity& r, const Quantity& sigma,
                                    const ConstantSet& constants, bool mass_corrected);

enum class DegeneracyForm { Paper, Modern };

struct DegeneracyK {
  Quantity k_number;   // pressure = K n^(5/3), n a number density
  Quantity k_mass_mu2; // pressure = K rho^(5/3), rho a mass density, mu_e = 2
};

/// Degeneracy-pressure constant. The two forms
/// (1/5)(3/8pi)^(2/3) h^2/mu and (3 pi^2)^(2/3) hbar^2/(5 m_e)
/// are algebraically identical at mu = m_e. The mass-density normalization
/// needs m_u in the constant set.
DegeneracyK degeneracy_K(const Quantity& mu, const ConstantSet& constants, DegeneracyForm form);

struct InterchangeMass {
  Quantity m3;             // (136/3) m0
  Quantity m_external;     // (136/10) m0
  bool chain_consistent;   // (3/10)(136/3) == 136/10
};

InterchangeMass interchange_mass(const Quantity& m0);

}  // namespace ftr
