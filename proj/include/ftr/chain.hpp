#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"

namespace ftr {

/// One derivation outcome with its comparison values. Relative errors are
/// present whenever both comparands exist; a row with a tolerance carries a
/// verdict.
struct DerivationResult {
  std::string name;
  Quantity computed;
  std::optional<Quantity> paper_value;
  std::optional<Quantity> observed_value;
  std::optional<Real> rel_err_paper;
  std::optional<Real> rel_err_observed;
  std::optional<Real> tolerance;  // on rel_err_paper unless noted
  std::optional<bool> passed;
  std::string citation;
  std::string note;
};

struct TheoreticalN {
  BigInt exact;   // 204 * 2^256
  Real decimal;
};

TheoreticalN theoretical_N();

/// G from the elimination of R0 between the R0/N and R0/sqrt(N) relations:
/// G = 136 beta^(1/6) h c sqrt(9/20) / (20 m_h^2 sqrt(N)).
DerivationResult derive_G(const BigInt& n, const ConstantSet& constants);

/// Inverse of the same elimination: N implied by a measured G.
Real solve_N_from_G(const ConstantSet& constants);

struct MassRatios {
  Rational eta1_exact;  // 136^2/10
  Real eta1;
  Real eta2;            // heavy/light root ratio of 10m^2 - 136 m m0 + m0^2
};

MassRatios mass_ratio_standard();

struct MassRatiosCurrent {
  Real eta1;  // (136^2/10) beta^(-5/6)
  Real eta2;  // root ratio of 10m^2 - 136 m m0 + beta^(5/6) m0^2
};

MassRatiosCurrent mass_ratio_current();

struct RydbergResult {
  Quantity paper_form;     // (1/2) alpha^2 mu c / (2 pi hbar)
  Quantity textbook_form;  // 2 pi^2 mu e^4 / (h^3 c)
  Real ratio;              // paper_form / textbook_form
  std::string audit;
};

/// paper_alpha selects the exact 1/137 in the paper form; otherwise the
/// measured e^2/(hbar c) is used, which makes the two forms coincide.
RydbergResult rydberg(const Quantity& mu, const ConstantSet& constants, bool paper_alpha);

enum class AlphaMode { Paper, Modern };

/// Fine-structure constant: exact 1/137 in paper mode, e^2/(hbar c) from
/// the set in modern mode.
Real fine_structure(AlphaMode mode, const ConstantSet& constants);

struct ForceConstant {
  Real theory;  // (2 / (3 pi beta^2)) sqrt(5N)
  Real direct;  // e^2 / (G m_p m_e)
  Real rel_diff;
};

ForceConstant force_constant(const BigInt& n, const ConstantSet& constants);

struct Recession {
  Quantity v0;          // c / (k sqrt(3N)), dimension 1/s
  Real km_s_mpc;        // the same in km/s/Mpc
};

Recession recession(const Quantity& range_k, const BigInt& n, const ConstantSet& constants);

struct HubbleDimensionless {
  Real h;
  bool in_modern_range;  // [0.5, 1.0]
};

/// h = H0 / (100 km/s/Mpc).
HubbleDimensionless hubble_dimensionless(const Quantity& h0);

struct FaradayMass {
  Quantity value;   // 4 pi 137^3 F^2 m_h^2, as printed
  std::string dimensional_audit;
  bool is_mass;
};

FaradayMass mu_from_faraday(const ConstantSet& constants);

/// The natural-unit identity chain (c = 1, hbar = 1), run with the
/// round-number chain constants c = 3e8 m/s and hbar = 1.054e-34 J s.
struct NaturalChain {
  Real step_a;       // meters per second of time: 3e8
  Real step_b;       // kg m^2 per second of time: 1.054e-34
  Real step_c;       // kg m equal to unity: 3.513e-43
  Real step_d;       // value of 1 kg in seconds^-1: 8.54e50
  Real c_value;      // photon-gas proportionality constant, ~1
  Rational c_power;  // signed seconds exponent of that constant
};

/// Checks the momentum-density / photon-density identity: a gas of photons
/// at unit natural frequency has p/n of natural value 1, up to the rounding
/// baked into the chain constants.
NaturalChain photon_momentum_identity(const ConstantSet& constants);

struct ChainOptions {
  std::map<std::string, Real> tolerance_overrides;
};

/// Runs every derivation in dependency order against one constant set and
/// returns the comparison table. Core constants must be present; optional
/// rows (carrier ranges, the mass-density degeneracy constant, the measured
/// Hubble row) appear when their inputs exist in the set.
std::vector<DerivationResult> run_chain(const ConstantSet& constants,
                                        const ChainOptions& options = {});

}  // namespace ftr
