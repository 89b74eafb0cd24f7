#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ftr/quantity.hpp"

namespace ftr {

enum class Provenance { PaperEra1946, Modern, User };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Named, provenance-tagged collection of quantities, ingested from a
/// dataset file (one entry per line: name value unit-expression provenance).
///
/// Each entry keeps its original decimal and unit text so a serialize/load
/// round trip reproduces every magnitude bit-exactly.
class ConstantSet {
 public:
  struct Entry {
    Quantity quantity;
    std::string decimal_text;
    std::string unit_text;
    Provenance provenance;
  };

  ConstantSet() = default;

  static ConstantSet load(std::istream& in);
  static ConstantSet load_file(const std::string& path);
  void serialize(std::ostream& out) const;

  /// Throws MissingConstant when absent.
  const Quantity& get(const std::string& name) const;
  bool has(const std::string& name) const { return entries_.count(name) != 0; }
  /// Throws DuplicateName if the name exists.
  void add(const std::string& name, Quantity q, std::string decimal_text,
           std::string unit_text, Provenance prov);
  /// Copy with one entry removed (for failure-path tests and what-ifs).
  ConstantSet without(const std::string& name) const;

  Provenance provenance() const { return provenance_; }
  size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

  /// hbar entry if present, else h / 2*pi.
  Quantity hbar() const;
  /// Faraday constant for hydrogen: entry "faraday_h" if present, else
  /// e / (m_h c).
  Quantity faraday_h() const;

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;  // original file order for serialization
  Provenance provenance_ = Provenance::User;
  bool provenance_set_ = false;
};

/// The exact conversion ratio between the theoretical and observational
/// systems: 137/136.
const Rational& bond_factor();

/// Value of a quantity expressed purely in powers of seconds with
/// c = 1, hbar = 1 (and k_B = 1 when a temperature dimension is present).
struct NaturalValue {
  Real value;
  Rational power;  // exponent i of s^i
};

/// Throws MissingConstant when the basis lacks a needed constant.
NaturalValue natural_value(const Quantity& q, const ConstantSet& basis);

}  // namespace ftr
