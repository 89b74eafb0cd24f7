#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ftr {

/// Permutation of the labels 1..8 (stored 0-based). Mates are the pairs
/// (1,2)(3,4)(5,6)(7,8).
class Perm8 {
 public:
  Perm8();  // identity
  explicit Perm8(const std::array<std::uint8_t, 8>& images);
  /// From one-based cycle notation, e.g. "(1 3 2 4)(5 7 6 8)".
  static Perm8 from_cycles(const std::string& text);
  /// The spouse swap (1 2)(3 4)(5 6)(7 8).
  static Perm8 mate_swap();

  std::uint8_t apply(std::uint8_t i) const { return img_[i]; }
  friend Perm8 compose(const Perm8& p, const Perm8& q);  // (p*q)(i) = p(q(i))
  Perm8 inverse() const;
  bool operator==(const Perm8& o) const { return img_ == o.img_; }
  bool operator!=(const Perm8& o) const { return !(*this == o); }
  bool operator<(const Perm8& o) const { return img_ < o.img_; }

  /// Number of fixed points: names guessed correctly when truth is the
  /// identity labeling.
  int score() const;
  /// One-based cycle notation including singletons, "(1)(2)(3 4)...".
  std::string cycles() const;

  const std::array<std::uint8_t, 8>& images() const { return img_; }

 private:
  std::array<std::uint8_t, 8> img_;
};

/// P(mate(i)) = mate(P(i)) for all labels.
bool is_mate_respecting(const Perm8& p);

/// [P,Q] = P Q P^-1 Q^-1 equals the spouse swap.
bool commutator_is_T(const Perm8& p, const Perm8& q);

enum class Gender { Boy, Girl, Neither };

/// Boy: P^2 = I. Girl: P^2 = T. Throws NotMateRespecting otherwise the
/// classification is meaningless.
Gender classify(const Perm8& p);

struct FamilyMember {
  Perm8 guess;
  Gender gender;
};

using Family = std::vector<FamilyMember>;

struct ZooSolution {
  std::size_t max_size = 0;
  int boys = 0;
  int girls = 0;
  std::vector<Family> families;      // every maximum-size family
  std::size_t candidate_boys = 0;    // mate-respecting involutions (incl. identity)
  std::size_t candidate_girls = 0;
};

/// Exhaustive search over all 40320 permutations. With require_mixed the
/// families must contain at least one boy and one girl.
ZooSolution max_family(bool require_mixed);

}  // namespace ftr
