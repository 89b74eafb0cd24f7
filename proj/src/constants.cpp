#include "ftr/constants.hpp"

#include <fstream>
#include <sstream>

#include "ftr/errors.hpp"

namespace ftr {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperEra1946: return "paper-era-1946";
    case Provenance::Modern: return "modern";
    case Provenance::User: return "user";
  }
  return "user";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "paper-era-1946") return Provenance::PaperEra1946;
  if (s == "modern") return Provenance::Modern;
  if (s == "user") return Provenance::User;
  throw Error("unknown provenance tag: " + s);
}

ConstantSet ConstantSet::load(std::istream& in) {
  ConstantSet set;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::string name, decimal, unit, prov;
    if (!(ss >> name)) continue;  // blank or comment-only line
    if (!(ss >> decimal >> unit >> prov)) {
      throw ParseError(lineno, "expected 'name value unit provenance', got: " + body);
    }
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing token: " + extra);
    Provenance p;
    Quantity q;
    try {
      p = provenance_from_string(prov);
      q = make_quantity(decimal, unit, name);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    if (set.entries_.count(name) != 0) throw DuplicateName(name);
    if (set.provenance_set_ && p != set.provenance_) {
      throw ParseError(lineno, "mixed provenance tags in one dataset");
    }
    set.provenance_ = p;
    set.provenance_set_ = true;
    set.entries_[name] = Entry{std::move(q), decimal, unit, p};
    set.order_.push_back(name);
  }
  return set;
}

ConstantSet ConstantSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open constants dataset: " + path);
  return load(in);
}

void ConstantSet::serialize(std::ostream& out) const {
  for (const auto& name : order_) {
    const Entry& e = entries_.at(name);
    out << name << ' ' << e.decimal_text << ' ' << e.unit_text << ' '
        << to_string(e.provenance) << '\n';
  }
}

const Quantity& ConstantSet::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingConstant(name);
  return it->second.quantity;
}

void ConstantSet::add(const std::string& name, Quantity q, std::string decimal_text,
                      std::string unit_text, Provenance prov) {
  if (entries_.count(name) != 0) throw DuplicateName(name);
  if (!provenance_set_) {
    provenance_ = prov;
    provenance_set_ = true;
  }
  entries_[name] = Entry{std::move(q), std::move(decimal_text), std::move(unit_text), prov};
  order_.push_back(name);
}

ConstantSet ConstantSet::without(const std::string& name) const {
  ConstantSet out;
  out.provenance_ = provenance_;
  out.provenance_set_ = provenance_set_;
  for (const auto& n : order_) {
    if (n == name) continue;
    out.entries_[n] = entries_.at(n);
    out.order_.push_back(n);
  }
  return out;
}

Quantity ConstantSet::hbar() const {
  if (has("hbar")) return get("hbar");
  Quantity h = get("h");
  Real two_pi = Real(2) * Real::pi();
  return {h.magnitude / two_pi, h.dims, "hbar"};
}

Quantity ConstantSet::faraday_h() const {
  if (has("faraday_h")) return get("faraday_h");
  return qdiv(get("e"), qmul(get("m_h"), get("c")));
}

const Rational& bond_factor() {
  static const Rational beta(137, 136);
  return beta;
}

NaturalValue natural_value(const Quantity& q, const ConstantSet& basis) {
  DimSig::Reduced dims = q.dims.reduced();
  Real c = basis.get("c").magnitude;        // cm/s
  Real hbar = basis.hbar().magnitude;       // erg s

  // 1 s       -> s^1
  // 1 cm      -> (1/c) s^1
  // 1 g       -> (c^2/hbar) s^-1
  // 1 K       -> (k_B/hbar) s^-1
  Real value = q.magnitude;
  Rational power = dims.time;

  value = value * (Real(1) / c).pow(dims.length);
  power = power + dims.length;

  value = value * (c * c / hbar).pow(dims.mass);
  power = power - dims.mass;

  if (!dims.temperature.is_zero()) {
    Real k_B = basis.get("k_B").magnitude;
    value = value * (k_B / hbar).pow(dims.temperature);
    power = power - dims.temperature;
  }
  return {value, power};
}

}  // namespace ftr
