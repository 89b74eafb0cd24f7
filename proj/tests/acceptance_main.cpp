// Acceptance suite: every release criterion, one pass/fail line each.
// Exit status 0 only when all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ftr/chain.hpp"
#include "ftr/constants.hpp"
#include "ftr/exclusion.hpp"
#include "ftr/particles.hpp"
#include "ftr/quantum.hpp"
#include "ftr/statgeo.hpp"
#include "ftr/statmech.hpp"
#include "ftr/zoo.hpp"

using namespace ftr;

namespace {

int g_failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-28s %s\n", ok ? "PASS" : "FAIL", id, label,
              detail.c_str());
  if (!ok) ++g_failures;
}

bool within(const Real& value, const char* target, const char* rel_tol) {
  return rel_diff(value, Real(std::string(target))) <= Real(std::string(rel_tol));
}

std::string show(const Real& v) { return v.to_string(6); }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

const std::string kData = FTR_DATA_DIR;

}  // namespace

int main() {
  ConstantSet modern = ConstantSet::load_file(kData + "/modern.cst");
  ConstantSet paper = ConstantSet::load_file(kData + "/paper-era-1946.cst");
  BigInt n_exact = theoretical_N().exact;

  // 1. cosmic pair from the two anchors, under a second
  {
    auto t0 = std::chrono::steady_clock::now();
    CosmicFrame f = solve_cosmic_pair(make_quantity("3.95e-53", "cm"),
                                      make_quantity("1.9e-13", "cm"));
    double ms = ms_since(t0);
    bool ok = within(f.n_particles, "2.31e79", "0.01") &&
              within(f.radius.magnitude, "9.14e26", "0.01") && ms < 1000.0;
    report(1, "cosmic pair", ok,
           "N=" + show(f.n_particles) + " R0=" + show(f.radius.magnitude) + " cm, " +
               std::to_string(ms) + " ms");
  }

  // 2. Einstein-universe ratio from the paper-era set
  {
    Quantity r = einstein_ratio(paper);
    bool ok = within(r.magnitude, "3.95e-53", "0.005");
    report(2, "einstein ratio", ok, show(r.magnitude) + " cm vs 3.95e-53 +-0.5%");
  }

  // 3. theoretical N: exact integer and decimal
  {
    TheoreticalN n = theoretical_N();
    // independent oracle: 3*136*2^256 halved, and plain power-of-two route
    BigInt oracle = BigInt(3) * BigInt(136) * BigInt::pow(BigInt(2), 256);
    bool exact_ok = (BigInt(2) * n.exact == oracle) &&
                    (n.exact == BigInt(204) * BigInt::pow(BigInt(2), 256)) &&
                    n.exact.to_string() == (BigInt(204) * BigInt::pow(BigInt(2), 256)).to_string();
    bool ok = exact_ok && within(n.decimal, "2.3622e79", "1e-4");
    report(3, "theoretical N", ok, "204*2^256, " + show(n.decimal));
  }

  // 4. G from the elimination formula, under a second at 50 digits
  {
    auto t0 = std::chrono::steady_clock::now();
    DerivationResult g = derive_G(n_exact, modern);
    double ms = ms_since(t0);
    bool ok = within(g.computed.magnitude, "6.6665e-8", "0.002") && ms < 1000.0;
    report(4, "G derivation", ok,
           show(g.computed.magnitude) + " cgs vs 6.6665e-8 +-0.2%, " + std::to_string(ms) +
               " ms");
  }

  // 5. the four mass ratios
  {
    MassRatios std_r = mass_ratio_standard();
    MassRatiosCurrent cur = mass_ratio_current();
    bool ok = std_r.eta1_exact == Rational(9248, 5) &&
              std_r.eta1 == Real(Rational(9248, 5)) &&
              (std_r.eta2 - Real("1847.6")).abs() <= Real("0.05") &&
              (cur.eta1 - Real("1838.34")).abs() <= Real("0.01") &&
              (cur.eta2 - Real("1836.34")).abs() <= Real("0.01");
    report(5, "mass ratios", ok,
           show(std_r.eta1) + " / " + show(std_r.eta2) + " / " + show(cur.eta1) + " / " +
               show(cur.eta2));
  }

  // 6. recession constant
  {
    Recession r = recession(make_quantity("1.921e-13", "cm"), n_exact, modern);
    bool ok = (r.km_s_mpc - Real("572.4")).abs() <= Real(2) &&
              (r.km_s_mpc - Real(572)).abs() <= Real(2);
    report(6, "recession", ok, show(r.km_s_mpc) + " km/s/Mpc vs 572 +-2");
  }

  // 7. force constant: two independent paths within 1%
  {
    ForceConstant f = force_constant(n_exact, modern);
    bool ok = f.rel_diff <= Real("0.01") && within(f.theory, "2.27e39", "0.01") &&
              within(f.direct, "2.27e39", "0.01");
    report(7, "force constant", ok,
           "theory " + show(f.theory) + " vs direct " + show(f.direct));
  }

  // 8. sigma anchor from the extracule mass (beta m_h in system B)
  {
    Quantity sig_paper = sigma_from_M(qscale(bond_factor(), paper.get("m_h")), paper);
    Quantity sig_modern = sigma_from_M(qscale(bond_factor(), modern.get("m_h")), modern);
    bool ok = within(sig_paper.magnitude, "9.53657e-14", "0.001") &&
              within(sig_modern.magnitude, "9.53657e-14", "0.01");
    report(8, "sigma anchor", ok,
           show(sig_paper.magnitude) + " (paper-era), " + show(sig_modern.magnitude) +
               " (modern)");
  }

  // 9. proper-mass two-path identity and the hydrogen-mass landing
  {
    Real sqrt_n = Real(n_exact).sqrt();
    CosmicFrame frame = CosmicFrame::from(
        Real(n_exact), {Real("1.921e-13") * sqrt_n, DimSig::of_length(), "R0"});
    ProperMass pm = proper_mass(frame, modern, false);
    ExclusionMass em = proper_mass_from_exclusion(frame, modern);
    ProperMass obs = proper_mass(frame, modern, true);
    Real path_diff = rel_diff(pm.m0.magnitude, em.m0.magnitude);
    bool ok = path_diff <= Real("1e-40") &&
              rel_diff(obs.m_external.magnitude, modern.get("m_h").magnitude) <= Real("0.02");
    report(9, "proper-mass two-path", ok,
           "paths differ by " + show(path_diff) + ", M = " + show(obs.m_external.magnitude) +
               " g vs m_h");
  }

  // shared sigma for 10 and 11: the modern extracule-mass anchor
  Quantity sigma = sigma_from_M(qscale(bond_factor(), modern.get("m_h")), modern);

  // 10. weight constant against the electron rest energy
  {
    WeightConstant wc = weight_constant(sigma, modern);
    bool ok = (wc.ratio_to_mec2 - Real(202)).abs() <= Real(3);
    report(10, "weight constant", ok, show(wc.ratio_to_mec2) + " m_e c^2 vs 202 +-3");
  }

  // 11. nuclear-energy constant brackets the quoted pair
  {
    NonCoulombEnergy nc = non_coulomb_energy(make_quantity("0", "cm"), sigma, modern, true);
    Quantity c = modern.get("c");
    Real a_ratio =
        qdiv(nc.amplitude, qmul(modern.get("m_e"), qmul(c, c))).magnitude;
    bool in_band = (a_ratio - Real("52.4")).abs() <= Real(1);
    bool brackets = (Real("52.01") >= a_ratio - Real(1)) && (Real("52.01") <= a_ratio + Real(1)) &&
                    (Real("52.26") >= a_ratio - Real(1)) && (Real("52.26") <= a_ratio + Real(1));
    report(11, "nuclear-energy constant", in_band && brackets,
           show(a_ratio) + " m_e c^2, band covers 52.01 and 52.26");
  }

  // 12. degeneracy constant: the two printed forms agree identically
  {
    ConstantSet consistent = modern.without("hbar");
    DegeneracyK kp = degeneracy_K(consistent.get("m_e"), consistent, DegeneracyForm::Paper);
    DegeneracyK km = degeneracy_K(consistent.get("m_e"), consistent, DegeneracyForm::Modern);
    Real diff = rel_diff(kp.k_number.magnitude, km.k_number.magnitude);
    bool ok = diff <= Real::epsilon_at(5);
    report(12, "degeneracy K identity", ok,
           "forms differ by " + show(diff) + " (tol 1e-45)");
  }

  // 13. carrier ranges
  {
    Quantity pion = carrier_range(modern.get("m_pi_c2"), modern);
    Quantity z = carrier_range(modern.get("m_Z_c2"), modern);
    bool pion_ok = within(pion.magnitude, "0.707e-13", "0.002") &&
                   rel_diff(pion.magnitude, Real("0.73e-13")) <= Real("0.04");
    bool z_ok = z.magnitude >= Real("1e-17") && z.magnitude <= Real("5e-16");
    report(13, "carrier ranges", pion_ok && z_ok,
           "pion " + show(pion.magnitude) + " cm, Z " + show(z.magnitude) + " cm");
  }

  // 14. natural-unit identity
  {
    NaturalChain nc = photon_momentum_identity(modern);
    bool ok = within(nc.step_d, "8.540e50", "0.001") &&
              (nc.c_value - Real(1)).abs() <= Real("0.01");
    report(14, "natural-unit identity", ok,
           "1 kg = " + show(nc.step_d) + " /s, C = " + show(nc.c_value));
  }

  // 15. zoo puzzle, under five seconds
  {
    auto t0 = std::chrono::steady_clock::now();
    ZooSolution sol = max_family(true);
    double ms = ms_since(t0);

    bool shape = sol.max_size == 5 && sol.boys == 3 && sol.girls == 2;
    bool winners = !sol.families.empty();
    for (const Family& f : sol.families) {
      int best = -1;
      bool best_boy = false;
      for (const FamilyMember& m : f) {
        if (m.guess.score() > best) {
          best = m.guess.score();
          best_boy = m.gender == Gender::Boy;
        }
      }
      winners = winners && best == 4 && best_boy;
    }

    std::set<std::string> witness{"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)",
                                  "(1)(2)(3 4)(5 6)(7)(8)", "(1 3)(2 4)(5 7)(6 8)",
                                  "(1 5)(2 6)(3 8)(4 7)"};
    for (const auto& a : witness) {
      for (const auto& b : witness) {
        if (a != b) {
          winners = winners &&
                    commutator_is_T(Perm8::from_cycles(a), Perm8::from_cycles(b));
        }
      }
    }
    bool found_witness = false;
    for (const Family& f : sol.families) {
      std::set<std::string> got;
      for (const FamilyMember& m : f) got.insert(m.guess.cycles());
      if (got == witness) found_witness = true;
    }

    bool ok = shape && winners && found_witness && ms < 5000.0;
    report(15, "zoo puzzle", ok,
           std::to_string(sol.max_size) + " = " + std::to_string(sol.boys) + "+" +
               std::to_string(sol.girls) + ", " + std::to_string(ms) + " ms");
  }

  // 16. statistical properties with no quoted number
  {
    bool multiplicity_ok = true;
    // exhaustive enumeration oracle
    struct Enum {
      static unsigned long count(unsigned long m, unsigned long q) {
        if (m == 1) return 1;
        unsigned long total = 0;
        for (unsigned long first = 0; first <= q; ++first) total += count(m - 1, q - first);
        return total;
      }
    };
    for (unsigned long m = 1; m <= 8 && multiplicity_ok; ++m) {
      for (unsigned long q = 0; q <= 8; ++q) {
        if (multiplicity(EinsteinSolid(m, q)) !=
            BigInt(static_cast<long>(Enum::count(m, q)))) {
          multiplicity_ok = false;
          break;
        }
      }
    }

    // Boltzmann normalization
    std::vector<Quantity> ladder;
    for (int i = 0; i < 9; ++i) {
      ladder.push_back(qscale(Rational(2 * i + 1), make_quantity("1e-14", "erg")));
    }
    Real sum(0);
    for (const Real& p :
         boltzmann(StateEnergies{ladder, make_quantity("300", "K")}, modern)) {
      sum += p;
    }
    bool boltzmann_ok = (sum - Real(1)).abs() <= Real::epsilon_at(5);

    // fluctuation convolution identity at 1e-6 sup-norm
    const double n0 = 1e4, big_n = 1e8;
    const double s_comp = std::sqrt(n0 * (1.0 - n0 / big_n));
    const double s_ext = n0 / std::sqrt(big_n);
    const double s_ord = std::sqrt(n0);
    auto gauss = [](double x, double s) {
      return std::exp(-x * x / (2 * s * s)) / (s * std::sqrt(2 * M_PI));
    };
    double sup = 0.0;
    for (int i = 0; i < 10000; ++i) {
      double y = -5.0 * s_ord + i * (10.0 * s_ord / 9999);
      double acc = 0.0;
      const int usteps = 1600;
      const double ulim = 8.0 * s_ext, hu = 2.0 * ulim / usteps;
      for (int j = 0; j <= usteps; ++j) {
        double u = -ulim + j * hu;
        double w = (j == 0 || j == usteps) ? 0.5 : 1.0;
        acc += w * gauss(y - u, s_comp) * gauss(u, s_ext);
      }
      acc *= hu;
      sup = std::max(sup, std::fabs(acc - gauss(y, s_ord)));
    }
    bool convolution_ok = sup < 1e-6;

    // Monte Carlo centroid scatter across the three scales
    bool mc_ok = true;
    for (auto [np, trials, seed] :
         {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{100, 10000, 11},
          {1000, 4000, 12},
          {10000, 2000, 13}}) {
      McReport r = mc_centroid(np, trials, seed, 1.0);
      mc_ok = mc_ok && std::fabs(r.z_score) < 3.0;
    }

    // uncertainty bound on 1000 seeded random 2x2 cases
    bool bound_ok = true;
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Real slack = Real::epsilon_at(8);
    for (int i = 0; i < 1000 && bound_ok; ++i) {
      auto herm = [&] {
        C2Matrix m;
        double a = u(rng), b2 = u(rng), c = u(rng), d = u(rng);
        m.e[0] = CReal{Real::from_double(a)};
        m.e[1] = CReal{Real::from_double(c), Real::from_double(d)};
        m.e[2] = CReal{Real::from_double(c), Real::from_double(-d)};
        m.e[3] = CReal{Real::from_double(b2)};
        return m;
      };
      CReal a0{Real::from_double(u(rng)), Real::from_double(u(rng))};
      CReal a1{Real::from_double(u(rng)), Real::from_double(u(rng))};
      Real norm = (a0.norm2() + a1.norm2()).sqrt();
      if (norm.is_zero()) continue;
      Real inv = Real(1) / norm;
      C2State st{{CReal{a0.re * inv, a0.im * inv}, CReal{a1.re * inv, a1.im * inv}}};
      UncertaintyBound ub = uncertainty_bound(st, herm(), herm());
      bound_ok = ub.lhs >= ub.rhs - slack;
    }

    bool ok = multiplicity_ok && boltzmann_ok && convolution_ok && mc_ok && bound_ok;
    report(16, "statistical properties", ok,
           std::string("multiplicity ") + (multiplicity_ok ? "ok" : "BAD") + ", boltzmann " +
               (boltzmann_ok ? "ok" : "BAD") + ", convolution sup " + std::to_string(sup) +
               ", mc " + (mc_ok ? "ok" : "BAD") + ", bound " + (bound_ok ? "ok" : "BAD"));
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 16 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
