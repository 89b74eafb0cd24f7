#pragma once

#include <array>
#include <vector>

#include "ftr/constants.hpp"
#include "ftr/quantity.hpp"

namespace ftr {

/// Complex number over working-precision reals.
struct CReal {
  Real re;
  Real im;

  CReal() = default;
  CReal(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  CReal conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  friend CReal operator+(const CReal& a, const CReal& b) { return {a.re + b.re, a.im + b.im}; }
  friend CReal operator-(const CReal& a, const CReal& b) { return {a.re - b.re, a.im - b.im}; }
  friend CReal operator*(const CReal& a, const CReal& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// 2x2 complex matrix at working precision; entries row-major.
struct C2Matrix {
  std::array<CReal, 4> e;

  static C2Matrix identity();
  static C2Matrix zero();
  friend C2Matrix operator+(const C2Matrix& a, const C2Matrix& b);
  friend C2Matrix operator-(const C2Matrix& a, const C2Matrix& b);
  friend C2Matrix operator*(const C2Matrix& a, const C2Matrix& b);
  C2Matrix scaled(const CReal& s) const;
  C2Matrix dagger() const;
  bool is_hermitian(const Real& tol) const;
};

/// Normalized two-component state.
struct C2State {
  std::array<CReal, 2> amp;

  Real norm2() const { return amp[0].norm2() + amp[1].norm2(); }
};

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Exact 2x2 complex-rational matrix; used for the spin-matrix identities
/// where the entries stay in {0, +-1, +-i} and the algebra must be exact.
struct ExactC2 {
  struct C {
    Rational re, im;
    bool operator==(const C& o) const { return re == o.re && im == o.im; }
  };
  std::array<C, 4> e;

  static ExactC2 identity();
  static ExactC2 pauli(Axis a);
  friend ExactC2 operator*(const ExactC2& a, const ExactC2& b);
  friend ExactC2 operator-(const ExactC2& a, const ExactC2& b);
  ExactC2 scaled_by_i(long k) const;  // multiply by k*i
  bool operator==(const ExactC2& o) const { return e == o.e; }
  C2Matrix to_matrix() const;
};

/// Uniformly sampled function on a strictly increasing grid.
struct SampledFunction {
  Real x0;
  Real step;
  std::vector<Real> values;

  SampledFunction(Real start, Real h, std::vector<Real> v);
  size_t size() const { return values.size(); }
  Real x_at(size_t i) const { return x0 + Real(static_cast<long>(i)) * step; }
  /// Central second difference at interior index i.
  Real second_diff(size_t i) const;
};

/// lambda = h/p.
Quantity de_broglie(const Quantity& p, const ConstantSet& constants);

/// lambda(x)^2 = -4 pi^2 f(x) / f''(x), central finite difference.
/// ZeroFunction when f(x) vanishes, NonOscillatory when the ratio is
/// negative.
Real local_wavelength(const SampledFunction& f, const Real& x);

struct SchrodingerResidual {
  Real value;
  bool degenerate;  // psi'' vanished everywhere
};

/// Max over interior grid of |psi'' + (8 pi^2 m / h^2)(E - V) psi|
/// normalized by max |psi''|; near 0 certifies an eigenpair.
SchrodingerResidual schrodinger_residual(const SampledFunction& psi, const Quantity& energy,
                                         const SampledFunction& potential, const Quantity& mass,
                                         const ConstantSet& constants);

/// sigma_i sigma_j - sigma_j sigma_i, exact. SameAxis when i == j.
ExactC2 pauli_commutator(Axis i, Axis j);

struct UncertaintyBound {
  Real lhs;  // dA * dB
  Real rhs;  // |<[A,B]>| / 2
};

/// Throws NotHermitian / NotNormalized. Guarantees lhs >= rhs up to the
/// working-precision slack.
UncertaintyBound uncertainty_bound(const C2State& state, const C2Matrix& a, const C2Matrix& b);

}  // namespace ftr
