#include "ftr/quantum.hpp"

#include <cmath>

#include "ftr/errors.hpp"

namespace ftr {

C2Matrix C2Matrix::identity() {
  return {{CReal{Real(1)}, CReal{Real(0)}, CReal{Real(0)}, CReal{Real(1)}}};
}

C2Matrix C2Matrix::zero() {
  return {{CReal{Real(0)}, CReal{Real(0)}, CReal{Real(0)}, CReal{Real(0)}}};
}

C2Matrix operator+(const C2Matrix& a, const C2Matrix& b) {
  C2Matrix r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

C2Matrix operator-(const C2Matrix& a, const C2Matrix& b) {
  C2Matrix r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

C2Matrix operator*(const C2Matrix& a, const C2Matrix& b) {
  C2Matrix r;
  r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
  r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
  r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
  r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  return r;
}

C2Matrix C2Matrix::scaled(const CReal& s) const {
  C2Matrix r;
  for (int i = 0; i < 4; ++i) r.e[i] = e[i] * s;
  return r;
}

C2Matrix C2Matrix::dagger() const {
  return {{e[0].conj(), e[2].conj(), e[1].conj(), e[3].conj()}};
}

bool C2Matrix::is_hermitian(const Real& tol) const {
  C2Matrix d = *this - dagger();
  for (const CReal& c : d.e) {
    if (c.re.abs() > tol || c.im.abs() > tol) return false;
  }
  return true;
}

ExactC2 ExactC2::identity() {
  Rational z(0), o(1);
  return {{C{o, z}, C{z, z}, C{z, z}, C{o, z}}};
}

ExactC2 ExactC2::pauli(Axis a) {
  Rational z(0), o(1), m(-1);
  switch (a) {
    case Axis::X: return {{C{z, z}, C{o, z}, C{o, z}, C{z, z}}};
    case Axis::Y: return {{C{z, z}, C{z, m}, C{z, o}, C{z, z}}};
    case Axis::Z: return {{C{o, z}, C{z, z}, C{z, z}, C{m, z}}};
  }
  return identity();
}

namespace {
ExactC2::C cmul(const ExactC2::C& a, const ExactC2::C& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ExactC2::C cadd(const ExactC2::C& a, const ExactC2::C& b) { return {a.re + b.re, a.im + b.im}; }
ExactC2::C csub(const ExactC2::C& a, const ExactC2::C& b) { return {a.re - b.re, a.im - b.im}; }
}  // namespace

ExactC2 operator*(const ExactC2& a, const ExactC2& b) {
  ExactC2 r;
  r.e[0] = cadd(cmul(a.e[0], b.e[0]), cmul(a.e[1], b.e[2]));
  r.e[1] = cadd(cmul(a.e[0], b.e[1]), cmul(a.e[1], b.e[3]));
  r.e[2] = cadd(cmul(a.e[2], b.e[0]), cmul(a.e[3], b.e[2]));
  r.e[3] = cadd(cmul(a.e[2], b.e[1]), cmul(a.e[3], b.e[3]));
  return r;
}

ExactC2 operator-(const ExactC2& a, const ExactC2& b) {
  ExactC2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = csub(a.e[i], b.e[i]);
  return r;
}

ExactC2 ExactC2::scaled_by_i(long k) const {
  ExactC2 r;
  Rational kk(k);
  for (int i = 0; i < 4; ++i) {
    // (re + i im) * k i = -k im + i k re
    r.e[i] = {-(kk * e[i].im), kk * e[i].re};
  }
  return r;
}

C2Matrix ExactC2::to_matrix() const {
  C2Matrix m;
  for (int i = 0; i < 4; ++i) m.e[i] = CReal{Real(e[i].re), Real(e[i].im)};
  return m;
}

SampledFunction::SampledFunction(Real start, Real h, std::vector<Real> v)
    : x0(std::move(start)), step(std::move(h)), values(std::move(v)) {
  if (values.size() < 5) throw Error("sampled function needs at least 5 points");
  if (!step.is_positive()) throw Error("sampled function needs a positive step");
}

Real SampledFunction::second_diff(size_t i) const {
  if (i == 0 || i + 1 >= values.size()) throw Error("second difference needs an interior point");
  return (values[i + 1] - Real(2) * values[i] + values[i - 1]) / (step * step);
}

Quantity de_broglie(const Quantity& p, const ConstantSet& constants) {
  if (!p.magnitude.is_positive()) throw NonPositiveInput("momentum");
  Quantity out = qdiv(constants.get("h"), p);
  out.label = "lambda";
  return out;
}

namespace {
size_t grid_index_near(const SampledFunction& f, const Real& x) {
  Real pos = (x - f.x0) / f.step;
  double d = pos.to_double();
  long i = std::lround(d);
  if (i < 1 || static_cast<size_t>(i) + 1 >= f.size()) {
    throw OutOfRange("x not interior to the grid");
  }
  return static_cast<size_t>(i);
}
}  // namespace

Real local_wavelength(const SampledFunction& f, const Real& x) {
  size_t i = grid_index_near(f, x);
  Real fx = f.values[i];
  Real fpp = f.second_diff(i);
  if (fx.is_zero()) throw ZeroFunction("f(x) = 0");
  if (fpp.is_zero()) throw NonOscillatory("f'' = 0");
  Real four_pi2 = Real(4) * Real::pi() * Real::pi();
  Real lambda2 = -(four_pi2 * fx) / fpp;
  if (!lambda2.is_positive()) throw NonOscillatory("negative wavelength-squared ratio");
  return lambda2.sqrt();
}

SchrodingerResidual schrodinger_residual(const SampledFunction& psi, const Quantity& energy,
                                         const SampledFunction& potential, const Quantity& mass,
                                         const ConstantSet& constants) {
  if (psi.size() != potential.size() || psi.x0 != potential.x0 || psi.step != potential.step) {
    throw GridMismatch("psi and V grids differ");
  }
  Quantity h = constants.get("h");
  // 8 pi^2 m / h^2, units 1/(erg cm^2)
  Real pi = Real::pi();
  Quantity factor = qdiv(qscale(Real(8) * pi * pi, mass), qmul(h, h));
  if (!energy.dims.compatible(DimSig::of_energy())) {
    throw DimensionMismatch("E must be an energy");
  }

  Real max_res(0), max_curv(0);
  for (size_t i = 1; i + 1 < psi.size(); ++i) {
    Real curv = psi.second_diff(i);
    Real ev = energy.magnitude - potential.values[i];
    Real res = (curv + factor.magnitude * ev * psi.values[i]).abs();
    if (res > max_res) max_res = res;
    Real ac = curv.abs();
    if (ac > max_curv) max_curv = ac;
  }
  if (max_curv.is_zero()) return {Real(0), true};
  return {max_res / max_curv, false};
}

ExactC2 pauli_commutator(Axis i, Axis j) {
  if (i == j) throw SameAxis("commutator of an axis with itself");
  ExactC2 a = ExactC2::pauli(i);
  ExactC2 b = ExactC2::pauli(j);
  return a * b - b * a;
}

namespace {
CReal expectation(const C2State& s, const C2Matrix& m) {
  // <s|M|s>
  CReal v0 = m.e[0] * s.amp[0] + m.e[1] * s.amp[1];
  CReal v1 = m.e[2] * s.amp[0] + m.e[3] * s.amp[1];
  return s.amp[0].conj() * v0 + s.amp[1].conj() * v1;
}
}  // namespace

UncertaintyBound uncertainty_bound(const C2State& state, const C2Matrix& a, const C2Matrix& b) {
  Real tol = Real::epsilon_at(5);
  if (!a.is_hermitian(tol) || !b.is_hermitian(tol)) throw NotHermitian("observable");
  if ((state.norm2() - Real(1)).abs() > tol) throw NotNormalized("state");

  auto variance = [&](const C2Matrix& m) {
    Real mean = expectation(state, m).re;
    Real mean_sq = expectation(state, m * m).re;
    Real var = mean_sq - mean * mean;
    if (var.is_negative()) var = Real(0);  // rounding guard at the working precision
    return var;
  };
  Real lhs = (variance(a) * variance(b)).sqrt();
  CReal comm = expectation(state, a * b - b * a);
  Real rhs = (comm.norm2()).sqrt() / Real(2);
  return {lhs, rhs};
}

}  // namespace ftr
