#include <doctest.h>

#include <algorithm>

#include "ftr/chain.hpp"
#include "ftr/errors.hpp"

using namespace ftr;

namespace {
const std::string kData = FTR_DATA_DIR;

bool close(const Real& a, const char* b, const char* tol) {
  return rel_diff(a, Real(std::string(b))) <= Real(std::string(tol));
}
}  // namespace

TEST_CASE("theoretical N is exact") {
  TheoreticalN n = theoretical_N();
  // independent route: multiply out 2^256 digit-for-digit with plain
  // big-integer exponentiation, then scale by (3/2)*136
  BigInt two_to_256 = BigInt::pow(BigInt(2), 256);
  BigInt expected = BigInt(3) * BigInt(136) * two_to_256;
  // (3/2)*136 = 204: halve the product exactly
  CHECK(expected == BigInt(2) * n.exact);
  CHECK(n.exact == BigInt(204) * two_to_256);
  // frozen digit-for-digit from an independent big-integer evaluation
  CHECK(n.exact.to_string() ==
        "2362158620441250386640848094177233320206707687179067506404934713"
        "7614278446546944");
  CHECK(Rational(3, 2) * Rational(136) == Rational(204));
  CHECK(close(n.decimal, "2.3622e79", "1e-4"));
}

TEST_CASE("G derivation hits the quoted value") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  DerivationResult g = derive_G(theoretical_N().exact, modern);
  CHECK(close(g.computed.magnitude, "6.6665e-8", "2e-3"));
  CHECK(g.computed.dims.compatible(DimSig(-1, 3, -2)));

  // scaling: G falls as 1/sqrt(N)
  DerivationResult g4 = derive_G(BigInt(4) * theoretical_N().exact, modern);
  CHECK(rel_diff(g.computed.magnitude, Real(2) * g4.computed.magnitude) <=
        Real::epsilon_at(5));

  // inversion: the measured G implies N near 2.36e79
  CHECK(close(solve_N_from_G(modern), "2.355e79", "1e-3"));
}

TEST_CASE("standard mass ratios") {
  MassRatios mr = mass_ratio_standard();
  CHECK(mr.eta1_exact == Rational(9248, 5));
  CHECK(mr.eta1 == Real(Rational(9248, 5)));
  CHECK((mr.eta2 - Real("1847.6")).abs() < Real("0.05"));
  CHECK(close(mr.eta2, "1847.5925", "1e-5"));
}

TEST_CASE("current mass ratios") {
  MassRatiosCurrent mr = mass_ratio_current();
  CHECK((mr.eta1 - Real("1838.34")).abs() < Real("0.01"));
  CHECK((mr.eta2 - Real("1836.34")).abs() < Real("0.01"));

  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  Real measured = qdiv(modern.get("m_p"), modern.get("m_e")).magnitude;
  CHECK(close(measured, "1836.15", "1e-4"));
}

TEST_CASE("root ratios are invariant under rescaling m0") {
  // the ratio is the contract, not the roots: scale-free by construction,
  // checked through the two-particle machinery in its own suite; here the
  // closed form must be stable against the beta normalization order
  Real direct = mass_ratio_current().eta2;
  Real beta56 = Real(bond_factor()).pow(Rational(5, 6));
  Real disc = (Real(136 * 136) - Real(40) * beta56).sqrt();
  Real expected = (Real(136) + disc) / (Real(136) - disc);
  CHECK(rel_diff(direct, expected) <= Real::epsilon_at(5));
}

TEST_CASE("rydberg forms") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  Quantity mu = qdiv(qmul(modern.get("m_p"), modern.get("m_e")),
                     qadd(modern.get("m_p"), modern.get("m_e")));

  RydbergResult paper_mode = rydberg(mu, modern, true);
  CHECK(paper_mode.textbook_form.dims.compatible(DimSig(0, -1, 0)));
  CHECK(close(paper_mode.textbook_form.magnitude, "109677.6", "1e-3"));

  // the two forms differ exactly by (alpha_measured * 137)^-2, with alpha
  // built from the same h/2pi pairing the operation itself uses
  Quantity h = modern.get("h");
  Real hbar_consistent = h.magnitude / (Real(2) * Real::pi());
  Real alpha = qmul(modern.get("e"), modern.get("e")).magnitude /
               (hbar_consistent * modern.get("c").magnitude);
  Real expected_ratio = (Real(Rational(1, 137)) / alpha).pow_int(2);
  CHECK(rel_diff(paper_mode.ratio, expected_ratio) <= Real::epsilon_at(5));

  // with the measured alpha both routes coincide
  RydbergResult modern_mode = rydberg(mu, modern, false);
  CHECK(rel_diff(modern_mode.ratio, Real(1)) <= Real::epsilon_at(5));
}

TEST_CASE("fine structure modes") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  Real paper = fine_structure(AlphaMode::Paper, modern);
  CHECK(paper == Real(Rational(1, 137)));
  CHECK(close(paper, "0.00729927", "1e-5"));

  Real measured = fine_structure(AlphaMode::Modern, modern);
  CHECK(close(Real(1) / measured, "137.036", "1e-5"));

  // beta * 136 = 137 exactly
  CHECK(bond_factor() * Rational(136) == Rational(137));
}

TEST_CASE("force constant two paths") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  ForceConstant f = force_constant(theoretical_N().exact, modern);
  CHECK(close(f.theory, "2.2727e39", "1e-3"));
  CHECK(close(f.direct, "2.2687e39", "1e-3"));
  CHECK(f.rel_diff < Real("0.01"));

  // theory path scales as sqrt(N)
  ForceConstant f4 = force_constant(BigInt(4) * theoretical_N().exact, modern);
  CHECK(rel_diff(f4.theory, Real(2) * f.theory) <= Real::epsilon_at(5));
}

TEST_CASE("recession constant") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  Recession r = recession(make_quantity("1.921e-13", "cm"), theoretical_N().exact, modern);
  CHECK((r.km_s_mpc - Real("572.4")).abs() < Real(2));
  CHECK(r.v0.dims.compatible(DimSig(0, 0, -1)));

  // V0 falls as 1/sqrt(N)
  Recession r4 = recession(make_quantity("1.921e-13", "cm"),
                           BigInt(4) * theoretical_N().exact, modern);
  CHECK(rel_diff(r.km_s_mpc, Real(2) * r4.km_s_mpc) <= Real::epsilon_at(5));

  // the two observational anchors for context
  HubbleDimensionless contemporary = hubble_dimensionless(
      make_quantity("560", "km.s-1.Mpc-1"));
  CHECK(contemporary.h == Real("5.6"));
  CHECK(!contemporary.in_modern_range);
  HubbleDimensionless today = hubble_dimensionless(modern.get("H0_obs"));
  CHECK(today.h == Real("0.72"));
  CHECK(today.in_modern_range);
  CHECK(hubble_dimensionless(make_quantity("100", "km.s-1.Mpc-1")).h == Real(1));
  CHECK(hubble_dimensionless(make_quantity("572.4", "km.s-1.Mpc-1")).h == Real("5.724"));
}

TEST_CASE("faraday mass audit") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  FaradayMass fm = mu_from_faraday(modern);
  CHECK(!fm.is_mass);  // the printed form is dimensionally suspect
  CHECK(fm.value.dims.compatible(DimSig(1, 1, 0)));  // g cm
  CHECK(close(fm.value.magnitude, "8.2946e-33", "1e-3"));

  // proportional to F^2
  ConstantSet doubled = modern.without("faraday_h");
  doubled.add("faraday_h", make_quantity("1.9147254e4", "esu.s.g-1.cm-1"), "1.9147254e4",
              "esu.s.g-1.cm-1", Provenance::User);
  CHECK(rel_diff(mu_from_faraday(doubled).value.magnitude, Real(4) * fm.value.magnitude) <
        Real("1e-6"));

  CHECK(BigInt::pow(BigInt(137), 3) == BigInt(2571353));
}

TEST_CASE("natural-unit identity chain") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  NaturalChain nc = photon_momentum_identity(modern);
  CHECK(close(nc.step_c, "3.513e-43", "1e-3"));
  CHECK(close(nc.step_d, "8.540e50", "1e-3"));
  CHECK((nc.c_value - Real(1)).abs() < Real("0.01"));
  CHECK(nc.c_power == Rational(2));
}

TEST_CASE("run_chain with the modern set") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  auto rows = run_chain(modern);
  CHECK(rows.size() >= 12);
  for (const auto& row : rows) {
    if (row.passed) CHECK_MESSAGE(*row.passed, row.name);
    if (row.tolerance) {
      CHECK_MESSAGE(row.passed.has_value(), row.name);  // no silent verdicts
    }
  }
}

TEST_CASE("run_chain with the paper-era set stays within tolerances") {
  ConstantSet paper = ConstantSet::load_file(kData + "/paper-era-1946.cst");
  auto rows = run_chain(paper);
  CHECK(rows.size() >= 12);
  for (const auto& row : rows) {
    if (row.passed) CHECK_MESSAGE(*row.passed, row.name);
  }
  auto sigma = std::find_if(rows.begin(), rows.end(),
                            [](const DerivationResult& r) { return r.name == "sigma_uncertainty"; });
  REQUIRE(sigma != rows.end());
  CHECK(*sigma->rel_err_paper <= Real("1e-3"));
}

TEST_CASE("run_chain without m_h") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  try {
    run_chain(modern.without("m_h"));
    FAIL("expected MissingConstant");
  } catch (const MissingConstant& e) {
    CHECK(e.name == "m_h");
  }
}

TEST_CASE("tolerance overrides change verdicts") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  ChainOptions opts;
  opts.tolerance_overrides.emplace("einstein_ratio", Real("1e-9"));
  auto rows = run_chain(modern, opts);
  auto row = std::find_if(rows.begin(), rows.end(),
                          [](const DerivationResult& r) { return r.name == "einstein_ratio"; });
  REQUIRE(row != rows.end());
  CHECK(row->passed.has_value());
  CHECK_FALSE(*row->passed);
}

TEST_CASE("every derivation row passes the dimension firewall") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  for (const auto& row : run_chain(modern)) {
    if (row.paper_value) {
      CHECK_MESSAGE(row.computed.dims.compatible(row.paper_value->dims), row.name);
    }
    if (row.observed_value && row.tolerance) {
      CHECK_MESSAGE(row.computed.dims.compatible(row.observed_value->dims), row.name);
    }
  }
}
