#include "ftr/dimension.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "ftr/errors.hpp"

namespace ftr {

DimSig::Reduced DimSig::reduced() const {
  // esu = g^1/2 cm^3/2 s^-1
  Rational half(1, 2), three_half(3, 2);
  return Reduced{mass + charge * half, length + charge * three_half, time - charge,
                 temperature};
}

bool DimSig::is_dimensionless() const {
  Reduced r = reduced();
  Rational zero(0);
  return r.mass == zero && r.length == zero && r.time == zero && r.temperature == zero;
}

namespace {
std::optional<long> combine_index(const std::optional<long>& a, const std::optional<long>& b,
                                  int sign_b) {
  if (a && b) return *a + sign_b * *b;
  return std::nullopt;
}
}  // namespace

DimSig DimSig::operator+(const DimSig& o) const {
  DimSig r(mass + o.mass, length + o.length, time + o.time, charge + o.charge,
           temperature + o.temperature);
  r.dim_index = combine_index(dim_index, o.dim_index, +1);
  return r;
}

DimSig DimSig::operator-(const DimSig& o) const {
  DimSig r(mass - o.mass, length - o.length, time - o.time, charge - o.charge,
           temperature - o.temperature);
  r.dim_index = combine_index(dim_index, o.dim_index, -1);
  return r;
}

DimSig DimSig::scaled(const Rational& r) const {
  DimSig s(mass * r, length * r, time * r, charge * r, temperature * r);
  if (dim_index) {
    Rational scaled_index = Rational(*dim_index) * r;
    if (scaled_index.is_integer() && mpz_fits_slong_p(scaled_index.num().raw())) {
      s.dim_index = mpz_get_si(scaled_index.num().raw());
    }
  }
  return s;
}

std::string DimSig::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const char* unit, const Rational& e) {
    if (e.is_zero()) return;
    if (!first) out << '.';
    first = false;
    out << unit;
    if (e != Rational(1)) out << e.to_string();
  };
  Rational zero(0);
  bool pure_charge = !charge.is_zero() && mass == zero && length == zero && time == zero;
  if (pure_charge) {
    emit("esu", charge);
    emit("K", temperature);
  } else {
    // Mixed signatures print with the charge folded in; esu carries
    // half-integer g/cm exponents.
    Reduced r = reduced();
    emit("g", r.mass);
    emit("cm", r.length);
    emit("s", r.time);
    emit("K", r.temperature);
  }
  if (first) return "1";
  return out.str();
}

namespace {

struct UnitDef {
  const char* magnitude;  // decimal factor relative to the cgs base
  DimSig dims;
};

const std::map<std::string, UnitDef>& unit_registry() {
  static const std::map<std::string, UnitDef> table = [] {
    std::map<std::string, UnitDef> t;
    t["1"] = {"1", DimSig::dimensionless()};
    t["g"] = {"1", DimSig::of_mass()};
    t["cm"] = {"1", DimSig::of_length()};
    t["s"] = {"1", DimSig::of_time()};
    t["esu"] = {"1", DimSig::of_charge()};
    t["K"] = {"1", DimSig::of_temperature()};
    t["kg"] = {"1e3", DimSig::of_mass()};
    t["m"] = {"1e2", DimSig::of_length()};
    t["km"] = {"1e5", DimSig::of_length()};
    // Fixed parsec conversion; the recession rows depend on this value.
    t["Mpc"] = {"3.0857e24", DimSig::of_length()};
    t["erg"] = {"1", DimSig::of_energy()};
    t["J"] = {"1e7", DimSig::of_energy()};
    t["dyn"] = {"1", DimSig(1, 1, -2)};
    t["Hz"] = {"1", DimSig(0, 0, -1)};
    t["eV"] = {"1.602176634e-12", DimSig::of_energy()};
    t["keV"] = {"1.602176634e-9", DimSig::of_energy()};
    t["MeV"] = {"1.602176634e-6", DimSig::of_energy()};
    t["GeV"] = {"1.602176634e-3", DimSig::of_energy()};
    return t;
  }();
  return table;
}

void split_token(const std::string& tok, std::string& name, std::string& expo) {
  size_t i = 0;
  while (i < tok.size() && (std::isalpha(static_cast<unsigned char>(tok[i])) != 0)) ++i;
  // "1" as a whole token means dimensionless
  if (i == 0 && tok == "1") {
    name = "1";
    expo.clear();
    return;
  }
  name = tok.substr(0, i);
  expo = tok.substr(i);
}

}  // namespace

UnitFactor parse_unit_expr(const std::string& expr) {
  if (expr.empty()) throw Error("empty unit expression");
  UnitFactor out{Real(1), DimSig::dimensionless()};
  std::stringstream ss(expr);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty()) throw Error("empty unit factor in: " + expr);
    std::string name, expo;
    split_token(tok, name, expo);
    auto it = unit_registry().find(name);
    if (it == unit_registry().end()) throw Error("unknown unit: " + name);
    Rational e(1);
    if (!expo.empty()) {
      try {
        e = Rational::parse(expo);
      } catch (const Error&) {
        throw Error("bad exponent '" + expo + "' in: " + expr);
      }
    }
    out.dims = out.dims + it->second.dims.scaled(e);
    Real mag{std::string(it->second.magnitude)};
    out.factor = out.factor * mag.pow(e);
  }
  return out;
}

}  // namespace ftr
