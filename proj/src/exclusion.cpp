#include "ftr/exclusion.hpp"

#include "ftr/errors.hpp"

namespace ftr {

WeightConstant Uranoid::weight(const ConstantSet& constants) const {
  return weight_constant(frame.sigma, constants);
}

Quantity Uranoid::mean_energy(const ConstantSet& constants) const {
  if (temperature == UranoidTemperature::Zero) {
    return {Real(0), DimSig::of_energy(), "E"};
  }
  return infinite_t_energy(frame.sigma, constants).energy;
}

Planoid Planoid::matching_sigma(const Quantity& sigma, const Real& n1) {
  if (!sigma.magnitude.is_positive()) throw NonPositiveInput("sigma");
  if (!n1.is_positive()) throw NonPositiveInput("N1");
  Planoid p;
  p.n1 = n1;
  // R1^2 = 5 N1 sigma^2
  p.r1 = {(Real(5) * n1).sqrt() * sigma.magnitude, sigma.dims, "R1"};
  return p;
}

WeightConstant weight_constant(const Quantity& sigma, const ConstantSet& constants) {
  if (!sigma.magnitude.is_positive()) throw NonPositiveInput("sigma");
  Quantity hbar = constants.hbar();
  Quantity c = constants.get("c");
  WeightConstant out;
  out.varpi = qdiv(hbar, qscale(Rational(2), sigma));
  out.varpi.label = "varpi";
  out.as_energy = qmul(out.varpi, c);
  Quantity mec2 = qmul(constants.get("m_e"), qmul(c, c));
  out.ratio_to_mec2 = qdiv(out.as_energy, mec2).magnitude;
  return out;
}

Real weight_apply(const Quantity& p, const WeightParams& params) {
  if (!same_dims(p, params.varpi)) throw DimensionMismatch("weight_apply momentum");
  Real u = p.magnitude / params.varpi.magnitude;
  Real norm = (Real(2) * Real::pi()).sqrt() * params.varpi.magnitude;
  return (-(u * u) / Real(2)).exp() / norm;
}

InfiniteTEnergy infinite_t_energy(const Quantity& sigma, const ConstantSet& constants) {
  WeightConstant wc = weight_constant(sigma, constants);
  InfiniteTEnergy out;
  out.energy = qscale(Real(3).sqrt(), wc.as_energy);
  out.ratio_to_mec2 = Real(3).sqrt() * wc.ratio_to_mec2;
  return out;
}

Quantity exclusion_top_energy(const Quantity& number_density, const Quantity& mu0,
                              const ConstantSet& constants) {
  if (!number_density.magnitude.is_positive() || !mu0.magnitude.is_positive()) {
    throw NonPositiveInput("exclusion_top_energy arguments");
  }
  Quantity h = constants.get("h");
  Quantity phase = qpow(qscale(Real(3) / (Real(8) * Real::pi()), number_density),
                        Rational(2, 3));
  Quantity out = qdiv(qmul(phase, qmul(h, h)), qscale(Rational(2), mu0));
  out.label = "top energy";
  return out;
}

Rational mean_over_top() { return Rational(3, 5); }

ProperMass proper_mass(const CosmicFrame& frame, const ConstantSet& constants,
                       bool observational) {
  Quantity hbar = constants.hbar();
  Quantity c = constants.get("c");
  Real factor = (Real(4) * frame.n_particles / Real(5)).sqrt();
  Real mag =
      Real(Rational(3, 4)) * hbar.magnitude * factor / (c.magnitude * frame.radius.magnitude);
  if (observational) {
    mag = mag * Real(bond_factor()).pow(Rational(1, 6));
  }
  DimSig mass_dims = hbar.dims - c.dims - frame.radius.dims;  // reduces to g
  ProperMass out;
  out.m0 = {mag, mass_dims, "m0"};
  out.m_external = qscale(Rational(136, 10), out.m0);
  out.m_external.label = "M";
  return out;
}

Quantity sigma_from_M(const Quantity& m_external, const ConstantSet& constants) {
  if (!m_external.magnitude.is_positive()) throw NonPositiveInput("M");
  Quantity hbar = constants.hbar();
  Quantity c = constants.get("c");
  Real beta16 = Real(bond_factor()).pow(Rational(1, 6));
  Real factor = Real(Rational(136, 10)) * Real(Rational(3, 4)) * beta16 *
                Real(Rational(1, 5)).sqrt();
  Quantity out = qscale(factor, qdiv(hbar, qmul(m_external, c)));
  out.label = "sigma";
  return out;
}

ExclusionMass proper_mass_from_exclusion(const CosmicFrame& frame,
                                         const ConstantSet& constants) {
  Quantity hbar = constants.hbar();
  Quantity c = constants.get("c");
  // hbar_1^2 = (3/5) hbar^2, then m0^2 = (3/4) N (hbar_1 / R0)^2.
  Real hbar1 = hbar.magnitude * Real(Rational(3, 5)).sqrt();
  Real m0 = (Real(Rational(3, 4)) * frame.n_particles).sqrt() * hbar1 /
            (frame.radius.magnitude * c.magnitude);
  DimSig mass_dims = hbar.dims - c.dims - frame.radius.dims;
  ExclusionMass out;
  out.m0 = {m0, mass_dims, "m0"};
  out.g_subthreshold = qscale(Rational(5, 3), constants.get("G"));
  out.g_subthreshold.label = "G1";
  return out;
}

Quantity planoid_mass(const Planoid& p, const ConstantSet& constants) {
  Quantity hbar = constants.hbar();
  Quantity c = constants.get("c");
  Real mag = Real(Rational(3, 4)) * hbar.magnitude * p.n1.sqrt() /
             (c.magnitude * p.r1.magnitude);
  DimSig mass_dims = hbar.dims - c.dims - p.r1.dims;
  return {mag, mass_dims, "m0"};
}

SpecialPlanoid special_planoid(const Quantity& sigma, const ConstantSet& constants) {
  if (!sigma.magnitude.is_positive()) throw NonPositiveInput("sigma");
  SpecialPlanoid out;
  out.sigma1 = qscale(Real(Rational(4, 5)).sqrt(), sigma);
  out.sigma1.label = "sigma1";
  WeightConstant wc = weight_constant(sigma, constants);
  out.varpi1 = qscale(Real(Rational(3, 4)).sqrt(), wc.varpi);
  out.varpi1.label = "varpi1";
  return out;
}

Quantity non_coulomb_B(const Quantity& sigma, const ConstantSet& constants) {
  if (!sigma.magnitude.is_positive()) throw NonPositiveInput("sigma");
  Quantity e = constants.get("e");
  Quantity e2 = qmul(e, e);
  Real factor = Real(Rational(4, 3)).sqrt() * Real(16) * Real::pi();
  Quantity out = qscale(-factor, qmul(e2, qmul(sigma, sigma)));
  out.label = "B";
  return out;
}

NonCoulombEnergy non_coulomb_energy(const Quantity& r, const Quantity& sigma,
                                    const ConstantSet& constants, bool mass_corrected) {
  if (!sigma.magnitude.is_positive()) throw NonPositiveInput("sigma");
  if (!r.dims.compatible(DimSig::of_length())) throw DimensionMismatch("r must be a length");
  Quantity e = constants.get("e");
  Quantity e2 = qmul(e, e);
  Real factor = (Real(16) / (Real(3) * Real::pi())).sqrt();
  Quantity amplitude = qscale(factor, qdiv(e2, sigma));
  if (mass_corrected) {
    // proton over standard mass: m_p / m0 = 136/10
    amplitude = qscale(Rational(136, 10), amplitude);
  }
  Real u = r.magnitude / (Real(2) * sigma.magnitude);
  Real envelope = (-(u * u)).exp();
  NonCoulombEnergy out;
  out.amplitude = amplitude;
  out.amplitude.label = "A";
  out.energy = qscale(-envelope, amplitude);
  out.energy.label = "E_nc";
  out.range_k = qscale(Rational(2), sigma);
  out.range_k.label = "k";
  return out;
}

DegeneracyK degeneracy_K(const Quantity& mu, const ConstantSet& constants,
                         DegeneracyForm form) {
  if (!mu.magnitude.is_positive()) throw NonPositiveInput("mu");
  Quantity k_number;
  if (form == DegeneracyForm::Paper) {
    Quantity h = constants.get("h");
    Real factor = Real(Rational(1, 5)) *
                  (Real(3) / (Real(8) * Real::pi())).pow(Rational(2, 3));
    k_number = qscale(factor, qdiv(qmul(h, h), mu));
  } else {
    Quantity hbar = constants.hbar();
    Real factor = (Real(3) * Real::pi() * Real::pi()).pow(Rational(2, 3)) / Real(5);
    k_number = qscale(factor, qdiv(qmul(hbar, hbar), constants.get("m_e")));
  }
  k_number.label = "K";
  DegeneracyK out;
  out.k_number = k_number;
  if (constants.has("m_u")) {
    // P = K rho^(5/3) with rho in g/cm^3: n_e = rho/(mu_e m_u), mu_e = 2.
    Quantity per_mass = qpow(qscale(Rational(2), constants.get("m_u")), Rational(-5, 3));
    out.k_mass_mu2 = qmul(k_number, per_mass);
    out.k_mass_mu2.label = "K_rho";
  } else {
    out.k_mass_mu2 = dimensionless(Real(0));
    out.k_mass_mu2.label = "unavailable";
  }
  return out;
}

InterchangeMass interchange_mass(const Quantity& m0) {
  if (!m0.magnitude.is_positive()) throw NonPositiveInput("m0");
  InterchangeMass out;
  out.m3 = qscale(Rational(136, 3), m0);
  out.m3.label = "m3";
  out.m_external = qscale(Rational(136, 10), m0);
  out.m_external.label = "M";
  out.chain_consistent =
      Rational(3, 10) * Rational(136, 3) == Rational(136, 10);
  return out;
}

}  // namespace ftr
