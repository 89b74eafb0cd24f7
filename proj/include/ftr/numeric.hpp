#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace ftr {

class Rational;
class Real;

/// Arbitrary-precision nonnegative-or-signed integer on top of GMP.
/// Exact; used for microstate counts and the 204*2^256 scale integers.
class BigInt {
 public:
  BigInt() { mpz_init(v_); }
  BigInt(long n) { mpz_init_set_si(v_, n); }  // NOLINT: deliberate implicit
  explicit BigInt(const std::string& decimal);
  BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~BigInt() { mpz_clear(v_); }

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

  BigInt operator-() const;
  /// this * 2^e, exact.
  BigInt shifted_left(unsigned long e) const;
  static BigInt factorial(unsigned long n);
  static BigInt binomial(unsigned long n, unsigned long k);
  static BigInt pow(const BigInt& base, unsigned long e);

  bool fits_ulong() const { return mpz_fits_ulong_p(v_) != 0; }
  unsigned long to_ulong() const { return mpz_get_ui(v_); }
  int sign() const { return mpz_sgn(v_); }
  size_t digits10() const { return mpz_sizeinbase(v_, 10); }
  std::string to_string() const;

  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

 private:
  mpz_t v_;
};

/// Exact rational (GMP mpq), always canonical: gcd(|num|,den)=1, den>0.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {  // NOLINT: deliberate implicit
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }

  Rational reciprocal() const;
  BigInt num() const;
  BigInt den() const;
  bool is_integer() const;
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }
  /// Parses "p", "-p", "p/q", "-p/q".
  static Rational parse(const std::string& text);
  std::string to_string() const;
  double to_double() const { return mpq_get_d(v_); }

  mpq_srcptr raw() const { return v_; }

 private:
  mpq_t v_;
};

/// Real value at an explicit working precision (MPFR).
///
/// The working precision is process-global, expressed in decimal digits
/// (default 50) and mapped to bits with guard headroom. Every value and
/// every operation result is held at that precision; narrowing never
/// happens silently.
class Real {
 public:
  static void set_working_digits(unsigned digits);
  static unsigned working_digits();
  static mpfr_prec_t working_bits();

  Real() { mpfr_init2(v_, working_bits()); mpfr_set_zero(v_, 1); }
  Real(long n) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, n, MPFR_RNDN); }  // NOLINT
  explicit Real(const std::string& decimal);
  explicit Real(const BigInt& z) {
    mpfr_init2(v_, working_bits());
    mpfr_set_z(v_, z.raw(), MPFR_RNDN);
  }
  explicit Real(const Rational& q) {
    mpfr_init2(v_, working_bits());
    mpfr_set_q(v_, q.raw(), MPFR_RNDN);
  }
  static Real from_double(double d);
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, working_bits()); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  Real abs() const;
  Real sqrt() const;        // requires value >= 0
  Real exp() const;
  Real log() const;         // requires value > 0
  Real sin() const;
  Real cos() const;
  /// value^q with exact rational exponent; negative base allowed only for
  /// integer q.
  Real pow(const Rational& q) const;
  Real pow_int(long e) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  bool is_positive() const { return mpfr_sgn(v_) > 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Shortest honest rendering with `sig` significant digits ("%.*Rg").
  std::string to_string(unsigned sig = 0) const;

  static Real pi();
  /// 10^-(working_digits - margin); the standard comparison slack.
  static Real epsilon_at(unsigned margin);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// |a-b| / max(|a|,|b|); 0 when both are 0.
Real rel_diff(const Real& a, const Real& b);

}  // namespace ftr
