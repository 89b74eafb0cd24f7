#include "ftr/numeric.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

#include "ftr/errors.hpp"

namespace ftr {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(const std::string& decimal) {
  if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
    mpz_clear(v_);
    mpz_init(v_);
    throw Error("invalid integer literal: " + decimal);
  }
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_add(r.v_, a.v_, b.v_);
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_sub(r.v_, a.v_, b.v_);
  return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_mul(r.v_, a.v_, b.v_);
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r;
  mpz_neg(r.v_, v_);
  return r;
}

BigInt BigInt::shifted_left(unsigned long e) const {
  BigInt r;
  mpz_mul_2exp(r.v_, v_, e);
  return r;
}

BigInt BigInt::factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.v_, n);
  return r;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.v_, n, k);
  return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.v_, base.v_, e);
  return r;
}

std::string BigInt::to_string() const {
  char* s = mpz_get_str(nullptr, 10, v_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

// -------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_init(v_);
  mpq_set_si(v_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(v_, v_, d);
  mpq_clear(d);
  mpq_canonicalize(v_);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.sign() == 0) throw Error("rational with zero denominator");
  mpq_init(v_);
  mpq_set_num(v_, num.raw());
  mpq_set_den(v_, den.raw());
  mpq_canonicalize(v_);
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.v_, a.v_, b.v_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.v_, a.v_, b.v_);
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.v_, a.v_, b.v_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("rational division by zero");
  Rational r;
  mpq_div(r.v_, a.v_, b.v_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_, v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

BigInt Rational::num() const {
  BigInt r;
  mpz_set(r.raw(), mpq_numref(v_));
  return r;
}

BigInt Rational::den() const {
  BigInt r;
  mpz_set(r.raw(), mpq_denref(v_));
  return r;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

Rational Rational::parse(const std::string& text) {
  Rational r;
  if (mpq_set_str(r.v_, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(r.v_)) == 0) {
    throw Error("invalid rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(r.v_)) < 0) {
    mpz_neg(mpq_numref(r.v_), mpq_numref(r.v_));
    mpz_neg(mpq_denref(r.v_), mpq_denref(r.v_));
  }
  mpq_canonicalize(r.v_);
  return r;
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, v_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

// ------------------------------------------------------------------ Real

namespace {
std::atomic<unsigned> g_working_digits{50};

mpfr_prec_t bits_for(unsigned digits) {
  // digits * log2(10), plus guard bits so chained operations keep the
  // advertised decimal precision.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 64;
}
}  // namespace

void Real::set_working_digits(unsigned digits) {
  if (digits < 20) throw ConfigError("working precision must be at least 20 digits");
  g_working_digits.store(digits);
}

unsigned Real::working_digits() { return g_working_digits.load(); }

mpfr_prec_t Real::working_bits() { return bits_for(g_working_digits.load()); }

Real::Real(const std::string& decimal) {
  mpfr_init2(v_, working_bits());
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(v_)) {
    mpfr_clear(v_);
    mpfr_init2(v_, working_bits());
    throw Error("invalid decimal literal: " + decimal);
  }
}

Real Real::from_double(double d) {
  Real r;
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw Error("division by zero");
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r;
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  if (is_negative()) throw NegativeBase("sqrt of negative value");
  Real r;
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::exp() const {
  Real r;
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::log() const {
  if (sign() <= 0) throw DomainError("log of non-positive value");
  Real r;
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sin() const {
  Real r;
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::cos() const {
  Real r;
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::pow_int(long e) const {
  Real r;
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

Real Real::pow(const Rational& q) const {
  if (q.is_zero()) return Real(1);
  if (q.is_integer()) {
    BigInt n = q.num();
    if (mpz_fits_slong_p(n.raw())) return pow_int(mpz_get_si(n.raw()));
  }
  if (is_negative()) throw NegativeBase("rational power of negative value");
  if (is_zero()) {
    if (q.sign() < 0) throw DomainError("zero to a negative power");
    return Real(0);
  }
  // x^(n/d) = root_d(x)^n when d is small, else exp((n/d) ln x).
  BigInt den = q.den();
  if (den.fits_ulong() && den.to_ulong() <= 64 && q.num().fits_ulong()) {
    Real root;
    mpfr_rootn_ui(root.v_, v_, den.to_ulong(), MPFR_RNDN);
    Real r;
    mpfr_pow_ui(r.v_, root.v_, q.num().to_ulong(), MPFR_RNDN);
    return r;
  }
  Real e = Real(q) * log();
  return e.exp();
}

std::string Real::to_string(unsigned sig) const {
  if (sig == 0) sig = working_digits();
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(sig), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real Real::epsilon_at(unsigned margin) {
  unsigned d = working_digits();
  unsigned long e = d > margin ? d - margin : 1;
  Real ten(10);
  Real r;
  mpfr_pow_ui(r.raw(), ten.raw(), e, MPFR_RNDN);
  return Real(1) / r;
}

Real rel_diff(const Real& a, const Real& b) {
  Real num = (a - b).abs();
  Real den = a.abs() > b.abs() ? a.abs() : b.abs();
  if (den.is_zero()) return Real(0);
  return num / den;
}

}  // namespace ftr
