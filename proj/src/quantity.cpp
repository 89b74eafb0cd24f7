#include "ftr/quantity.hpp"

#include "ftr/errors.hpp"

namespace ftr {

std::string Quantity::to_string(unsigned sig) const {
  std::string unit = dims.to_string();
  if (unit == "1") return magnitude.to_string(sig);
  return magnitude.to_string(sig) + " " + unit;
}

Quantity qmul(const Quantity& a, const Quantity& b) {
  return {a.magnitude * b.magnitude, a.dims + b.dims, {}};
}

Quantity qdiv(const Quantity& a, const Quantity& b) {
  return {a.magnitude / b.magnitude, a.dims - b.dims, {}};
}

Quantity qadd(const Quantity& a, const Quantity& b) {
  if (!a.dims.compatible(b.dims)) {
    throw DimensionMismatch(a.dims.to_string() + " + " + b.dims.to_string());
  }
  return {a.magnitude + b.magnitude, a.dims, {}};
}

Quantity qsub(const Quantity& a, const Quantity& b) {
  if (!a.dims.compatible(b.dims)) {
    throw DimensionMismatch(a.dims.to_string() + " - " + b.dims.to_string());
  }
  return {a.magnitude - b.magnitude, a.dims, {}};
}

Quantity qpow(const Quantity& a, const Rational& r) {
  if (a.magnitude.is_negative() && !r.is_integer()) {
    throw NegativeBase("qpow(" + a.to_string() + ", " + r.to_string() + ")");
  }
  return {a.magnitude.pow(r), a.dims.scaled(r), {}};
}

Quantity qsqrt(const Quantity& a) { return qpow(a, Rational(1, 2)); }

Quantity qscale(const Rational& r, const Quantity& a) {
  return {a.magnitude * Real(r), a.dims, {}};
}

Quantity qscale(const Real& r, const Quantity& a) { return {r * a.magnitude, a.dims, {}}; }

Quantity qneg(const Quantity& a) { return {-a.magnitude, a.dims, {}}; }

Quantity make_quantity(const std::string& decimal, const std::string& unit_expr,
                       std::string label) {
  UnitFactor u = parse_unit_expr(unit_expr);
  return {Real(decimal) * u.factor, u.dims, std::move(label)};
}

Quantity dimensionless(Real v) { return {std::move(v), DimSig::dimensionless(), {}}; }

}  // namespace ftr
