#include <doctest.h>

#include <random>

#include "ftr/errors.hpp"
#include "ftr/particles.hpp"

using namespace ftr;

namespace {
const std::string kData = FTR_DATA_DIR;
}

TEST_CASE("carriers take only the allowed multiplicities") {
  Carrier standard(136);
  CHECK(standard.label() == "V136");
  Carrier full(137);
  CHECK(full.effective_multiplicity() == 137);
  full.stabilize("scale");
  CHECK(full.effective_multiplicity() == 136);
  CHECK_THROWS_AS(Carrier(5), NonPositiveMultiplicity);
}

TEST_CASE("two-particle reduction") {
  TwoParticleReduction sym =
      reduce_two_particle(TwoParticle(make_quantity("2", "g"), make_quantity("2", "g")));
  CHECK(sym.external.magnitude == Real(4));
  CHECK(sym.internal.magnitude == Real(1));

  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  TwoParticleReduction hyd =
      reduce_two_particle(TwoParticle(modern.get("m_p"), modern.get("m_e")));
  CHECK(rel_diff(hyd.external.magnitude, Real("1.67353e-24")) < Real("1e-5"));
  CHECK(rel_diff(hyd.internal.magnitude, Real("9.10443e-28")) < Real("1e-5"));

  // heavy-partner limit: mu -> m
  TwoParticleReduction lopsided =
      reduce_two_particle(TwoParticle(make_quantity("1", "g"), make_quantity("1e30", "g")));
  CHECK(rel_diff(lopsided.internal.magnitude, Real(1)) < Real("1e-29"));

  CHECK_THROWS_AS(TwoParticle(make_quantity("0", "g"), make_quantity("1", "g")),
                  NonPositiveInput);
}

TEST_CASE("hydrogen mass ratio stays distinct from the carrier ratio") {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  TwoParticleReduction hyd =
      reduce_two_particle(TwoParticle(modern.get("m_p"), modern.get("m_e")));
  Real ratio = hyd.external.magnitude / hyd.internal.magnitude;
  // (1+r)^2/r with the measured r = m_p/m_e
  CHECK(rel_diff(ratio, Real("1838.153")) < Real("1e-5"));
  // nowhere near the 136^2/10 carrier ratio
  CHECK((ratio - Real("1849.6")).abs() > Real(11));
}

TEST_CASE("two-particle roots") {
  // M1 = (136/10) m0, mu = m0/136 reproduces the 1847.6 ratio
  Quantity m0 = make_quantity("1", "g");
  std::pair<Quantity, Quantity> roots =
      two_particle_roots(qscale(Rational(136, 10), m0), qscale(Rational(1, 136), m0));
  Real ratio = roots.first.magnitude / roots.second.magnitude;
  CHECK((ratio - Real("1847.6")).abs() < Real("0.05"));

  // degenerate discriminant
  std::pair<Quantity, Quantity> twin =
      two_particle_roots(make_quantity("4", "g"), make_quantity("1", "g"));
  CHECK(twin.first.magnitude == Real(2));
  CHECK(twin.second.magnitude == Real(2));

  CHECK_THROWS_AS(two_particle_roots(make_quantity("1", "g"), make_quantity("1", "g")),
                  ComplexRoots);
}

TEST_CASE("Vieta relations and reduction round trip") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  Real tol = Real::epsilon_at(5);
  for (int i = 0; i < 100; ++i) {
    Quantity a = {Real::from_double(u(rng)), DimSig::of_mass(), ""};
    Quantity b = {Real::from_double(u(rng)), DimSig::of_mass(), ""};
    TwoParticleReduction red = reduce_two_particle(TwoParticle(a, b));
    auto [heavy, light] = two_particle_roots(red.external, red.internal);
    // Vieta: sum and product recover M1 and M1 mu
    CHECK(rel_diff(heavy.magnitude + light.magnitude, red.external.magnitude) <= tol);
    CHECK(rel_diff(heavy.magnitude * light.magnitude,
                   red.external.magnitude * red.internal.magnitude) <= tol);
    // and the roots are the original pair, up to ordering
    Real hi = a.magnitude > b.magnitude ? a.magnitude : b.magnitude;
    Real lo = a.magnitude > b.magnitude ? b.magnitude : a.magnitude;
    CHECK(rel_diff(heavy.magnitude, hi) <= tol);
    CHECK(rel_diff(light.magnitude, lo) <= tol);
  }
}

TEST_CASE("hydrocule rest energy") {
  CHECK(hydrocule_rest(make_quantity("136", "g")).magnitude == Real(137));
  CHECK(rel_diff(hydrocule_rest(make_quantity("1", "g")).magnitude, Real("1.00735294")) <
        Real("1e-8"));
  Quantity m = make_quantity("3.7", "g");
  Quantity back = qscale(bond_factor().reciprocal(), hydrocule_rest(m));
  CHECK(rel_diff(back.magnitude, m.magnitude) <= Real::epsilon_at(5));
}

TEST_CASE("system conversion exponent table") {
  Quantity len = make_quantity("1", "cm");
  Quantity to_b = system_convert(len, SystemClass::Length, SystemDirection::AtoB);
  CHECK(rel_diff(to_b.magnitude, Real("0.9987797")) < Real("1e-7"));

  Quantity mu = make_quantity("1", "g");
  Quantity mu_b = system_convert(mu, SystemClass::IntraculeMass, SystemDirection::AtoB);
  CHECK(rel_diff(mu_b.magnitude, Real(bond_factor()).pow(Rational(1, 2))) <=
        Real::epsilon_at(5));

  Quantity dens_b =
      system_convert(make_quantity("1", "g.cm-3"), SystemClass::ExtraculeMassDensity,
                     SystemDirection::AtoB);
  CHECK(rel_diff(dens_b.magnitude, Real(bond_factor())) <= Real::epsilon_at(5));

  // round trip is the identity
  Quantity back = system_convert(to_b, SystemClass::Length, SystemDirection::BtoA);
  CHECK(rel_diff(back.magnitude, len.magnitude) <= Real::epsilon_at(5));

  // integer exponents stay exact through the rational-power path
  Quantity exact = system_convert(make_quantity("136", "g"), Rational(1),
                                  SystemDirection::AtoB);
  CHECK(exact.magnitude == Real(137));
}

TEST_CASE("beta powers are monotone in the exponent") {
  Real prev(0);
  for (int n = -6; n <= 6; ++n) {
    Real v = Real(bond_factor()).pow(Rational(n, 6));
    if (n > -6) CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("mutual density condition") {
  Quantity m = make_quantity("2", "g");
  CHECK(mutual_density_check(m, m, Real(1), Real(1), Real(2)).magnitude == Real(0));

  Quantity res = mutual_density_check(make_quantity("2", "g"), make_quantity("3", "g"),
                                      Real(0), Real(0), Real(1));
  CHECK(res.magnitude == Real(-6));

  // random solve-then-substitute: C = (A m^2 + A' m'^2)/(m m')
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.5, 5.0);
  for (int i = 0; i < 50; ++i) {
    Real a = Real::from_double(u(rng)), ap = Real::from_double(u(rng));
    Quantity mq = {Real::from_double(u(rng)), DimSig::of_mass(), ""};
    Quantity mpq = {Real::from_double(u(rng)), DimSig::of_mass(), ""};
    Real c = (a * mq.magnitude * mq.magnitude + ap * mpq.magnitude * mpq.magnitude) /
             (mq.magnitude * mpq.magnitude);
    Quantity zero = mutual_density_check(mq, mpq, a, ap, c);
    CHECK(zero.magnitude.abs() <=
          Real::epsilon_at(5) * mq.magnitude * mpq.magnitude * c);
  }
}

TEST_CASE("free and bound pair energies") {
  // c = 1 basis keeps masses and energies numerically equal
  ConstantSet natural;
  natural.add("c", make_quantity("1", "cm.s-1", "c"), "1", "cm.s-1", Provenance::User);

  Quantity m0 = make_quantity("136", "g");
  Quantity mu = make_quantity("1", "g");
  Quantity rest = make_quantity("0", "g.cm.s-1");

  PairEnergies at_rest = energies_free(m0, mu, rest, rest, natural);
  CHECK(at_rest.external.magnitude == Real(136));
  CHECK(at_rest.internal.magnitude == Real(1));

  PairEnergies moving = energies_free(m0, mu, rest, make_quantity("2", "g.cm.s-1"), natural);
  CHECK(moving.internal.magnitude == Real(3));

  // with mu = m0/136 the rest sum is the hydrocule energy beta m0
  Quantity mu_h = qscale(Rational(1, 136), m0);
  PairEnergies h = energies_free(m0, mu_h, rest, rest, natural);
  Real total = h.external.magnitude + h.internal.magnitude;
  CHECK(rel_diff(total, Real(bond_factor()) * m0.magnitude) <= Real::epsilon_at(5));

  // bound form drops the external kinetic term
  Quantity p = make_quantity("5", "g.cm.s-1");
  PairEnergies bound = energies_bound(m0, mu, p, natural);
  PairEnergies free_form = energies_free(m0, mu, p, p, natural);
  CHECK(bound.external.magnitude == Real(136));
  CHECK(free_form.external.magnitude > bound.external.magnitude);
  CHECK(bound.internal.magnitude == free_form.internal.magnitude);
}
