#pragma once

#include <string>

#include "ftr/dimension.hpp"
#include "ftr/numeric.hpp"

namespace ftr {

/// A magnitude at working precision tied to an exact dimension signature.
/// The universal carrier of every physical value in this project.
struct Quantity {
  Real magnitude;
  DimSig dims;
  std::string label;

  Quantity() = default;
  Quantity(Real mag, DimSig d, std::string lbl = {})
      : magnitude(std::move(mag)), dims(std::move(d)), label(std::move(lbl)) {}

  /// "value unit" with `sig` significant digits.
  std::string to_string(unsigned sig = 6) const;
};

Quantity qmul(const Quantity& a, const Quantity& b);
Quantity qdiv(const Quantity& a, const Quantity& b);
/// Throws DimensionMismatch when the reduced signatures differ; such a
/// mismatch signals a formula-transcription bug upstream.
Quantity qadd(const Quantity& a, const Quantity& b);
Quantity qsub(const Quantity& a, const Quantity& b);
/// Magnitude^r with the exponents scaled exactly. NegativeBase for a
/// non-integer exponent on a negative magnitude.
Quantity qpow(const Quantity& a, const Rational& r);
Quantity qsqrt(const Quantity& a);
Quantity qscale(const Rational& r, const Quantity& a);
Quantity qscale(const Real& r, const Quantity& a);
Quantity qneg(const Quantity& a);

inline bool same_dims(const Quantity& a, const Quantity& b) {
  return a.dims.compatible(b.dims);
}

/// Convenience constructors for common carriers.
Quantity make_quantity(const std::string& decimal, const std::string& unit_expr,
                       std::string label = {});
Quantity dimensionless(Real v);

}  // namespace ftr
