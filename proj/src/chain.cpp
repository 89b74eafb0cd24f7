#include "ftr/chain.hpp"

#include <sstream>

#include "ftr/errors.hpp"
#include "ftr/exclusion.hpp"
#include "ftr/particles.hpp"
#include "ftr/statgeo.hpp"

namespace ftr {

TheoreticalN theoretical_N() {
  TheoreticalN n;
  n.exact = BigInt(204).shifted_left(256);
  n.decimal = Real(n.exact);
  return n;
}

namespace {

Real beta_pow(const Rational& e) { return Real(bond_factor()).pow(e); }

Quantity derive_G_value(const Real& sqrt_n, const ConstantSet& constants) {
  Quantity h = constants.get("h");
  Quantity c = constants.get("c");
  Quantity m_h = constants.get("m_h");
  Real factor = Real(136) * beta_pow(Rational(1, 6)) * Real(Rational(9, 20)).sqrt() /
                (Real(20) * sqrt_n);
  Quantity out = qscale(factor, qdiv(qmul(h, c), qmul(m_h, m_h)));
  out.label = "G";
  return out;
}

}  // namespace

DerivationResult derive_G(const BigInt& n, const ConstantSet& constants) {
  DerivationResult row;
  row.name = "G_derived";
  row.computed = derive_G_value(Real(n).sqrt(), constants);
  row.paper_value = make_quantity("6.6665e-8", "cm3.g-1.s-2");
  row.observed_value = constants.get("G");
  row.citation = "Eq 9.21";
  return row;
}

Real solve_N_from_G(const ConstantSet& constants) {
  // Invert the same elimination for the N implied by the measured G.
  Quantity probe = derive_G_value(Real(1), constants);
  Real sqrt_n = probe.magnitude / constants.get("G").magnitude;
  return sqrt_n * sqrt_n;
}

namespace {

// Heavy/light root ratio of 10 m^2 - 136 m m0 + c0 m0^2 = 0 (m0 scales out).
Real quadratic_root_ratio(const Real& c0) {
  Real disc = Real(136 * 136) - Real(40) * c0;
  Real root = disc.sqrt();
  Real heavy = (Real(136) + root) / Real(20);
  Real light = (Real(136) - root) / Real(20);
  return heavy / light;
}

}  // namespace

MassRatios mass_ratio_standard() {
  MassRatios r;
  r.eta1_exact = Rational(136 * 136, 10);
  r.eta1 = Real(r.eta1_exact);
  r.eta2 = quadratic_root_ratio(Real(1));
  return r;
}

MassRatiosCurrent mass_ratio_current() {
  MassRatiosCurrent r;
  r.eta1 = Real(Rational(136 * 136, 10)) * beta_pow(Rational(-5, 6));
  r.eta2 = quadratic_root_ratio(beta_pow(Rational(5, 6)));
  return r;
}

RydbergResult rydberg(const Quantity& mu, const ConstantSet& constants, bool paper_alpha) {
  if (!mu.magnitude.is_positive()) throw NonPositiveInput("mu");
  Quantity c = constants.get("c");
  Quantity h = constants.get("h");
  // One consistent pair: the measured-alpha route must make the two forms
  // coincide identically, so hbar is h/2pi here rather than a separately
  // rounded dataset entry.
  Quantity hbar{h.magnitude / (Real(2) * Real::pi()), h.dims, "hbar"};
  Quantity e = constants.get("e");

  Real alpha = paper_alpha ? Real(Rational(1, 137))
                           : qdiv(qmul(e, e), qmul(hbar, c)).magnitude;
  RydbergResult out;
  out.paper_form = qscale(alpha * alpha / Real(2), qdiv(qmul(mu, c), qscale(Rational(2), qmul(dimensionless(Real::pi()), hbar))));
  out.paper_form.label = "R";
  Quantity e4 = qpow(e, Rational(4));
  Quantity h3c = qmul(qpow(h, Rational(3)), c);
  out.textbook_form = qscale(Real(2) * Real::pi() * Real::pi(), qdiv(qmul(mu, e4), h3c));
  out.textbook_form.label = "R";
  out.ratio = out.paper_form.magnitude / out.textbook_form.magnitude;
  out.audit = paper_alpha
                  ? "alpha fixed at exactly 1/137; the printed derivation absorbs e^2 as "
                    "hbar c/137, so the two forms differ by (137 e^2/(hbar c))^-2"
                  : "alpha taken as the measured e^2/(hbar c); the two forms coincide";
  return out;
}

Real fine_structure(AlphaMode mode, const ConstantSet& constants) {
  if (mode == AlphaMode::Paper) return Real(Rational(1, 137));
  Quantity e = constants.get("e");
  return qdiv(qmul(e, e), qmul(constants.hbar(), constants.get("c"))).magnitude;
}

ForceConstant force_constant(const BigInt& n, const ConstantSet& constants) {
  ForceConstant out;
  Real beta2 = Real(bond_factor()) * Real(bond_factor());
  out.theory = Real(2) / (Real(3) * Real::pi() * beta2) * (Real(5) * Real(n)).sqrt();
  Quantity e = constants.get("e");
  Quantity denom = qmul(constants.get("G"), qmul(constants.get("m_p"), constants.get("m_e")));
  Quantity direct = qdiv(qmul(e, e), denom);
  if (!direct.dims.is_dimensionless()) {
    throw DimensionMismatch("force constant must be dimensionless, got " +
                            direct.dims.to_string());
  }
  out.direct = direct.magnitude;
  out.rel_diff = rel_diff(out.theory, out.direct);
  return out;
}

Recession recession(const Quantity& range_k, const BigInt& n, const ConstantSet& constants) {
  if (!range_k.magnitude.is_positive()) throw NonPositiveInput("range constant");
  Quantity c = constants.get("c");
  Real sqrt_3n = (Real(3) * Real(n)).sqrt();
  Recession out;
  out.v0 = qdiv(c, qscale(sqrt_3n, range_k));
  out.v0.label = "V0";
  UnitFactor u = parse_unit_expr("km.s-1.Mpc-1");
  out.km_s_mpc = out.v0.magnitude / u.factor;
  return out;
}

HubbleDimensionless hubble_dimensionless(const Quantity& h0) {
  UnitFactor u = parse_unit_expr("km.s-1.Mpc-1");
  if (!h0.dims.compatible(u.dims)) throw DimensionMismatch("H0 must be km/s/Mpc-like");
  HubbleDimensionless out;
  out.h = h0.magnitude / (Real(100) * u.factor);
  out.in_modern_range = out.h >= Real(Rational(1, 2)) && out.h <= Real(1);
  return out;
}

FaradayMass mu_from_faraday(const ConstantSet& constants) {
  Quantity f = constants.faraday_h();
  Quantity m_h = constants.get("m_h");
  Real factor = Real(4) * Real::pi() * Real(137).pow_int(3);
  FaradayMass out;
  out.value = qscale(factor, qmul(qmul(f, f), qmul(m_h, m_h)));
  out.value.label = "mu_A";
  out.is_mass = out.value.dims.compatible(DimSig::of_mass());
  out.dimensional_audit = "printed form evaluates to dimensions [" +
                          out.value.dims.to_string() +
                          (out.is_mass ? "], a mass" : "], not a mass");
  return out;
}

NaturalChain photon_momentum_identity(const ConstantSet& constants) {
  // Round-number chain constants, kept separate from the measured set.
  ConstantSet chain;
  chain.add("c", make_quantity("3e10", "cm.s-1", "c"), "3e10", "cm.s-1", Provenance::User);
  chain.add("hbar", make_quantity("1.054e-27", "erg.s", "hbar"), "1.054e-27", "erg.s",
            Provenance::User);

  NaturalChain out;
  out.step_a = Real("3e8");
  out.step_b = Real("1.054e-34");
  out.step_c = out.step_b / out.step_a;  // kg m equal to 1
  out.step_d = natural_value(make_quantity("1", "kg"), chain).value;

  // Photon gas at unit natural frequency: energy per photon hbar * (1/s),
  // one photon per natural volume (c * 1s)^3. C = p/n = <u> V / c.
  Quantity hbar_set = constants.hbar();
  Quantity c_set = constants.get("c");
  Quantity per_photon{hbar_set.magnitude, hbar_set.dims - DimSig::of_time(), "u"};
  Quantity volume = qpow(qmul(c_set, make_quantity("1", "s")), Rational(3));
  Quantity c_const = qdiv(qmul(per_photon, volume), c_set);
  NaturalValue nv = natural_value(c_const, chain);
  out.c_value = nv.value;
  out.c_power = nv.power;
  return out;
}

namespace {

struct RowBuilder {
  const ConstantSet& constants;
  const ChainOptions& options;
  std::vector<DerivationResult> rows;

  Real tol(const std::string& name, const char* fallback) const {
    auto it = options.tolerance_overrides.find(name);
    if (it != options.tolerance_overrides.end()) return it->second;
    return Real(std::string(fallback));
  }

  void push(DerivationResult row, const char* default_tol) {
    if (row.paper_value) {
      row.rel_err_paper = rel_diff(row.computed.magnitude, row.paper_value->magnitude);
    }
    if (row.observed_value) {
      row.rel_err_observed = rel_diff(row.computed.magnitude, row.observed_value->magnitude);
    }
    if (default_tol != nullptr) {
      row.tolerance = tol(row.name, default_tol);
      const std::optional<Real>& err = row.rel_err_paper ? row.rel_err_paper : row.rel_err_observed;
      row.passed = err ? (*err <= *row.tolerance) : false;
    }
    rows.push_back(std::move(row));
  }

  void push_info(DerivationResult row) {
    row.note = row.note.empty() ? "informational" : row.note + "; informational";
    push(std::move(row), nullptr);
  }
};

}  // namespace

std::vector<DerivationResult> run_chain(const ConstantSet& constants,
                                        const ChainOptions& options) {
  RowBuilder b{constants, options, {}};
  const bool paper_era = constants.provenance() == Provenance::PaperEra1946;

  // N = (3/2) 136 2^256, the exact theoretical count.
  TheoreticalN n = theoretical_N();
  {
    DerivationResult row;
    row.name = "N_theoretical";
    row.computed = dimensionless(n.decimal);
    row.observed_value = dimensionless(Real("2.31e79"));
    row.citation = "Eq 9.20";
    row.note = "exact 204*2^256; observational solution shown for spread";
    b.push_info(std::move(row));
  }

  // sigma from the extracule mass: the system-B extracule carries beta
  // times the measured hydrogen mass.
  Quantity m_ext = qscale(bond_factor(), constants.get("m_h"));
  Quantity sigma = sigma_from_M(m_ext, constants);
  {
    DerivationResult row;
    row.name = "sigma_uncertainty";
    row.computed = sigma;
    row.paper_value = make_quantity("9.53657e-14", "cm");
    row.citation = "Eq 8.15";
    b.push(std::move(row), paper_era ? "1e-3" : "1e-2");
  }

  Quantity range_k = qscale(Rational(2), sigma);
  range_k.label = "k";
  {
    DerivationResult row;
    row.name = "range_constant_k";
    row.computed = range_k;
    row.paper_value = make_quantity("1.921e-13", "cm");
    row.citation = "Eq 9.1";
    b.push(std::move(row), "1e-2");
  }

  Quantity ratio = einstein_ratio(constants);
  {
    DerivationResult row;
    row.name = "einstein_ratio";
    row.computed = ratio;
    row.paper_value = make_quantity("3.95e-53", "cm");
    row.citation = "Eq 5.18";
    b.push(std::move(row), "5e-3");
  }

  CosmicFrame frame = solve_cosmic_pair(ratio, range_k);
  {
    DerivationResult row;
    row.name = "N_observational";
    row.computed = dimensionless(frame.n_particles);
    row.paper_value = dimensionless(Real("2.31e79"));
    row.citation = "Eq 5.18";
    b.push(std::move(row), "1e-2");
  }
  {
    DerivationResult row;
    row.name = "R0_observational";
    row.computed = frame.radius;
    row.paper_value = make_quantity("9.14e26", "cm");
    row.citation = "Eq 5.18";
    b.push(std::move(row), "1e-2");
  }

  {
    Recession rec = recession(make_quantity("1.921e-13", "cm"), n.exact, constants);
    DerivationResult row;
    row.name = "recession_V0";
    row.computed = dimensionless(rec.km_s_mpc);
    row.paper_value = dimensionless(Real("572.4"));
    row.citation = "Eq 9.1";
    row.note = "km/s/Mpc from the range constant and the theoretical N";
    b.push(std::move(row), "5e-3");
  }

  {
    ForceConstant f = force_constant(n.exact, constants);
    DerivationResult row;
    row.name = "force_constant";
    row.computed = dimensionless(f.theory);
    row.observed_value = dimensionless(f.direct);
    row.citation = "Eq 9.22";
    row.note = "theory path vs direct e^2/(G m_p m_e)";
    b.push(std::move(row), "1e-2");
  }

  b.push(derive_G(n.exact, constants), "2e-3");

  {
    MassRatios mr = mass_ratio_standard();
    DerivationResult row;
    row.name = "eta1_standard";
    row.computed = dimensionless(mr.eta1);
    row.paper_value = dimensionless(Real("1849.6"));
    row.citation = "Eq 9.4";
    row.note = "exact " + mr.eta1_exact.to_string();
    b.push(std::move(row), "1e-12");

    DerivationResult row2;
    row2.name = "eta2_standard";
    row2.computed = dimensionless(mr.eta2);
    row2.paper_value = dimensionless(Real("1847.6"));
    row2.citation = "Eq 9.6";
    b.push(std::move(row2), "2.7e-5");
  }
  {
    MassRatiosCurrent mr = mass_ratio_current();
    DerivationResult row;
    row.name = "eta1_current";
    row.computed = dimensionless(mr.eta1);
    row.paper_value = dimensionless(Real("1838.34"));
    row.citation = "Eq 9.11";
    b.push(std::move(row), "5.4e-6");

    DerivationResult row2;
    row2.name = "eta2_current";
    row2.computed = dimensionless(mr.eta2);
    row2.paper_value = dimensionless(Real("1836.34"));
    row2.citation = "Eq 9.13";
    b.push(std::move(row2), "5.4e-6");
  }
  {
    DerivationResult row;
    row.name = "mass_ratio_measured";
    row.computed = dimensionless(qdiv(constants.get("m_p"), constants.get("m_e")).magnitude);
    row.observed_value = dimensionless(mass_ratio_current().eta2);
    row.citation = "Eq 9.13";
    row.note = "measured m_p/m_e beside the current-mass prediction";
    b.push_info(std::move(row));
  }

  {
    ProperMass pm = proper_mass(frame, constants, false);
    ExclusionMass em = proper_mass_from_exclusion(frame, constants);
    DerivationResult row;
    row.name = "proper_mass_two_path";
    row.computed = pm.m0;
    row.observed_value = em.m0;
    row.citation = "Eq 8.13/8.24";
    row.note = "relativity route vs exclusion route, exact 9/20 identity";
    b.push(std::move(row), "1e-40");

    ProperMass obs = proper_mass(frame, constants, true);
    DerivationResult row2;
    row2.name = "proper_mass_M";
    row2.computed = obs.m_external;
    row2.observed_value = constants.get("m_h");
    row2.citation = "Eq 8.14";
    b.push(std::move(row2), "2e-2");
  }

  {
    WeightConstant wc = weight_constant(sigma, constants);
    DerivationResult row;
    row.name = "weight_ratio_mec2";
    row.computed = dimensionless(wc.ratio_to_mec2);
    row.paper_value = dimensionless(Real(202));
    row.citation = "Eq 8.8";
    row.note = "varpi c over the electron rest energy";
    b.push(std::move(row), "1.49e-2");

    InfiniteTEnergy it = infinite_t_energy(sigma, constants);
    DerivationResult row2;
    row2.name = "infinite_T_mec2";
    row2.computed = dimensionless(it.ratio_to_mec2);
    row2.paper_value = dimensionless(Real(350));
    row2.citation = "Eq 8.9";
    b.push(std::move(row2), "5e-2");
  }

  {
    NonCoulombEnergy nc =
        non_coulomb_energy(make_quantity("0", "cm"), sigma, constants, true);
    Quantity c = constants.get("c");
    Quantity mec2 = qmul(constants.get("m_e"), qmul(c, c));
    DerivationResult row;
    row.name = "nuclear_A_mec2";
    row.computed = dimensionless(qdiv(nc.amplitude, mec2).magnitude);
    row.paper_value = dimensionless(Real("52.01"));
    row.observed_value = dimensionless(Real("52.26"));
    row.citation = "Eq 9.16";
    row.note = "non-Coulomb amplitude over the electron rest energy; the quoted "
               "Coulomb-to-non-Coulomb ratio 15.20 is carried as a quote only "
               "(its evaluation point is unstated)";
    b.push(std::move(row), "1.93e-2");
  }

  {
    // The identity check needs one self-consistent h/hbar pair, so the
    // rounded hbar dataset entry is set aside and hbar = h/2pi is used.
    ConstantSet consistent = constants.without("hbar");
    DegeneracyK kp = degeneracy_K(constants.get("m_e"), consistent, DegeneracyForm::Paper);
    DegeneracyK km = degeneracy_K(constants.get("m_e"), consistent, DegeneracyForm::Modern);
    DerivationResult row;
    row.name = "degeneracy_K_identity";
    row.computed = kp.k_number;
    row.observed_value = km.k_number;
    row.citation = "Eq 9.23/9.24";
    row.note = "the two printed forms at mu = m_e";
    b.push(std::move(row), "1e-45");

    if (constants.has("m_u")) {
      DerivationResult row2;
      row2.name = "degeneracy_K_rho";
      row2.computed = km.k_mass_mu2;
      row2.observed_value = make_quantity("3.16e12", "cm4.g-2/3.s-2");
      row2.citation = "Eq 9.23";
      row2.note = "mass-density normalization, mu_e = 2";
      b.push(std::move(row2), "1e-2");
    }
  }

  {
    TwoParticleReduction red = reduce_two_particle(
        TwoParticle(constants.get("m_p"), constants.get("m_e")));
    RydbergResult ry = rydberg(red.internal, constants, true);
    DerivationResult row;
    row.name = "rydberg_textbook";
    row.computed = ry.textbook_form;
    row.observed_value = make_quantity("109677.6", "cm-1");
    row.citation = "Eq 9.8";
    b.push(std::move(row), "1e-3");

    DerivationResult row2;
    row2.name = "rydberg_paper_form";
    row2.computed = ry.paper_form;
    row2.observed_value = ry.textbook_form;
    row2.citation = "Eq 9.7";
    row2.note = ry.audit;
    b.push_info(std::move(row2));
  }

  {
    DerivationResult row;
    row.name = "fine_structure_inverse";
    row.computed = dimensionless(Real(1) / fine_structure(AlphaMode::Modern, constants));
    row.observed_value = dimensionless(Real("137.036"));
    row.citation = "Eq 9.15";
    row.note = "beta * 136 = 137 holds exactly in the paper normalization";
    b.push(std::move(row), "1e-4");
  }

  if (constants.has("m_pi_c2")) {
    Quantity k_pi = carrier_range(constants.get("m_pi_c2"), constants);
    DerivationResult row;
    row.name = "carrier_range_pion";
    row.computed = k_pi;
    row.paper_value = make_quantity("0.73e-13", "cm");
    row.citation = "Eq 5.21";
    row.note = "longest-range strong carrier";
    b.push(std::move(row), "4e-2");
  }
  if (constants.has("m_Z_c2")) {
    Quantity k_z = carrier_range(constants.get("m_Z_c2"), constants);
    DerivationResult row;
    row.name = "carrier_range_Z";
    row.computed = k_z;
    row.citation = "Eq 5.21";
    row.note = "weak range, expected order 1e-16 to 1e-17 cm";
    row.passed = k_z.magnitude >= Real("1e-17") && k_z.magnitude <= Real("5e-16");
    b.push(std::move(row), nullptr);
  }

  {
    NaturalChain nc = photon_momentum_identity(constants);
    DerivationResult row;
    row.name = "natural_step_d";
    row.computed = dimensionless(nc.step_d);
    row.paper_value = dimensionless(Real("8.540e50"));
    row.citation = "Ch. X (d)";
    row.note = "value of 1 kg in seconds with c = hbar = 1";
    b.push(std::move(row), "1e-3");

    DerivationResult row2;
    row2.name = "photon_C";
    row2.computed = dimensionless(nc.c_value);
    row2.paper_value = dimensionless(Real(1));
    row2.citation = "Eq 10.2";
    row2.note = "signed exponent s^" + nc.c_power.to_string() +
                "; magnitude-count convention reports s^4";
    b.push(std::move(row2), "1e-2");
  }

  {
    FaradayMass fm = mu_from_faraday(constants);
    DerivationResult row;
    row.name = "faraday_mass_audit";
    row.computed = fm.value;
    row.citation = "Eq 9.14";
    row.note = fm.dimensional_audit;
    b.push_info(std::move(row));
  }

  {
    InterchangeMass im = interchange_mass(make_quantity("1", "g"));
    DerivationResult row;
    row.name = "interchange_chain";
    row.computed = im.m3;
    row.citation = "Eq 8.28";
    row.note = im.chain_consistent
                   ? "(3/10)(136/3) = 136/10 holds exactly; the scattered relations cohere"
                   : "relation chain INCONSISTENT";
    row.passed = im.chain_consistent;
    b.push(std::move(row), nullptr);
  }

  if (constants.has("H0_obs")) {
    HubbleDimensionless h = hubble_dimensionless(constants.get("H0_obs"));
    DerivationResult row;
    row.name = "hubble_dimensionless";
    row.computed = dimensionless(h.h);
    row.citation = "Eq 9.2";
    row.note = h.in_modern_range ? "within the modern range"
                                 : "outside the modern range [0.5, 1.0], flagged";
    b.push_info(std::move(row));

    // What-if: the N implied by the measured recession rate and the quoted
    // range constant, V0 = c/(k sqrt(3N)).
    Quantity v0 = constants.get("H0_obs");
    Quantity k_anchor = make_quantity("1.921e-13", "cm");
    Real ck = constants.get("c").magnitude / (k_anchor.magnitude * v0.magnitude);
    DerivationResult what_if;
    what_if.name = "N_from_hubble";
    what_if.computed = dimensionless(ck * ck / Real(3));
    what_if.citation = "Eq 9.1";
    what_if.note = "what-if: N implied by the measured recession rate";
    b.push_info(std::move(what_if));
  }

  {
    DerivationResult row;
    row.name = "N_from_measured_G";
    row.computed = dimensionless(solve_N_from_G(constants));
    row.observed_value = dimensionless(n.decimal);
    row.citation = "Eq 9.21";
    row.note = "what-if: the elimination formula inverted for N";
    b.push_info(std::move(row));
  }

  return b.rows;
}

}  // namespace ftr
