#pragma once

#include <optional>
#include <string>

#include "ftr/numeric.hpp"

namespace ftr {

/// Dimension signature over cgs-Gaussian base units, with exact rational
/// exponents of mass (g), length (cm), time (s), charge (esu) and
/// temperature (K).
///
/// Charge is kept as its own slot for display but is reducible: one esu is
/// g^1/2 cm^3/2 s^-1, so compatibility tests compare the reduced signature.
/// Temperature is carried for the Boltzmann-chain quantities (k_B, T).
///
/// An optional single-integer length power rides along as the
/// dimension-index used by the scale-free bookkeeping; it survives
/// multiplication (indices add) and is dropped when it cannot be kept exact.
struct DimSig {
  Rational mass;
  Rational length;
  Rational time;
  Rational charge;
  Rational temperature;
  std::optional<long> dim_index;

  DimSig() = default;
  DimSig(Rational m, Rational l, Rational t, Rational q = Rational(0),
         Rational th = Rational(0))
      : mass(std::move(m)),
        length(std::move(l)),
        time(std::move(t)),
        charge(std::move(q)),
        temperature(std::move(th)) {}

  static DimSig dimensionless() { return DimSig(); }
  static DimSig of_mass() { return DimSig(1, 0, 0); }
  static DimSig of_length() { return DimSig(0, 1, 0); }
  static DimSig of_time() { return DimSig(0, 0, 1); }
  static DimSig of_charge() { return DimSig(0, 0, 0, 1); }
  static DimSig of_temperature() { return DimSig(0, 0, 0, 0, 1); }
  static DimSig of_energy() { return DimSig(1, 2, -2); }
  static DimSig of_momentum() { return DimSig(1, 1, -1); }
  static DimSig of_inverse_volume() { return DimSig(0, -3, 0); }

  /// Exponents with the charge slot folded into mass/length/time.
  struct Reduced {
    Rational mass, length, time, temperature;
    bool operator==(const Reduced& o) const {
      return mass == o.mass && length == o.length && time == o.time &&
             temperature == o.temperature;
    }
  };
  Reduced reduced() const;

  /// Physical compatibility: reduced signatures equal.
  bool compatible(const DimSig& o) const { return reduced() == o.reduced(); }
  bool is_dimensionless() const;

  DimSig operator+(const DimSig& o) const;  // exponents of a product
  DimSig operator-(const DimSig& o) const;  // exponents of a quotient
  DimSig scaled(const Rational& r) const;   // exponents of a power

  /// Dot-separated unit expression, e.g. "cm3.g-1.s-2"; "1" when
  /// dimensionless.
  std::string to_string() const;
};

/// Parsed unit expression: a pure magnitude factor (relative to the cgs base)
/// plus a dimension signature.
struct UnitFactor {
  Real factor;
  DimSig dims;
};

/// Parses a dot-separated product of named units with integer or rational
/// exponents ("cm3.g-1.s-2", "g1/2.cm3/2.s-1", "km.s-1.Mpc-1", "1").
/// Throws Error on unknown unit names or malformed exponents.
UnitFactor parse_unit_expr(const std::string& expr);

}  // namespace ftr
