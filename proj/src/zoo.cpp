#include "ftr/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ftr/errors.hpp"

namespace ftr {

Perm8::Perm8() { std::iota(img_.begin(), img_.end(), 0); }

Perm8::Perm8(const std::array<std::uint8_t, 8>& images) : img_(images) {
  std::array<bool, 8> seen{};
  for (std::uint8_t v : img_) {
    if (v >= 8 || seen[v]) throw Error("not a permutation of 8 labels");
    seen[v] = true;
  }
}

Perm8 Perm8::from_cycles(const std::string& text) {
  std::array<std::uint8_t, 8> img{};
  std::iota(img.begin(), img.end(), 0);
  std::vector<int> cycle;
  auto close_cycle = [&] {
    for (size_t i = 0; i < cycle.size(); ++i) {
      img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
    cycle.clear();
  };
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '(') {
      cycle.clear();
      ++i;
    } else if (ch == ')') {
      close_cycle();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      int v = ch - '0';
      if (v < 1 || v > 8) throw Error("cycle label out of 1..8");
      cycle.push_back(v - 1);
      ++i;
    } else if (ch == ' ' || ch == ',') {
      ++i;
    } else {
      throw Error("bad cycle notation: " + text);
    }
  }
  return Perm8(img);
}

Perm8 Perm8::mate_swap() { return from_cycles("(1 2)(3 4)(5 6)(7 8)"); }

Perm8 compose(const Perm8& p, const Perm8& q) {
  std::array<std::uint8_t, 8> img{};
  for (int i = 0; i < 8; ++i) img[i] = p.img_[q.img_[i]];
  return Perm8(img);
}

Perm8 Perm8::inverse() const {
  std::array<std::uint8_t, 8> img{};
  for (int i = 0; i < 8; ++i) img[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm8(img);
}

int Perm8::score() const {
  int n = 0;
  for (int i = 0; i < 8; ++i) {
    if (img_[i] == i) ++n;
  }
  return n;
}

std::string Perm8::cycles() const {
  std::array<bool, 8> seen{};
  std::ostringstream out;
  for (int i = 0; i < 8; ++i) {
    if (seen[i]) continue;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << (j + 1);
      seen[j] = true;
      j = img_[j];
    } while (j != i);
    out << ')';
  }
  return out.str();
}

namespace {
inline std::uint8_t mate(std::uint8_t i) { return i ^ 1U; }
}  // namespace

bool is_mate_respecting(const Perm8& p) {
  for (std::uint8_t i = 0; i < 8; ++i) {
    if (p.apply(mate(i)) != mate(p.apply(i))) return false;
  }
  return true;
}

bool commutator_is_T(const Perm8& p, const Perm8& q) {
  Perm8 comm = compose(compose(p, q), compose(p.inverse(), q.inverse()));
  return comm == Perm8::mate_swap();
}

Gender classify(const Perm8& p) {
  if (!is_mate_respecting(p)) throw NotMateRespecting(p.cycles());
  Perm8 sq = compose(p, p);
  if (sq == Perm8()) return Gender::Boy;
  if (sq == Perm8::mate_swap()) return Gender::Girl;
  return Gender::Neither;
}

namespace {

struct Candidate {
  Perm8 perm;
  Gender gender;
};

std::vector<Candidate> enumerate_candidates() {
  std::vector<Candidate> out;
  std::array<std::uint8_t, 8> img{};
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm8 p{img};
    if (!is_mate_respecting(p)) continue;
    Gender g = classify(p);
    if (g == Gender::Neither) continue;
    out.push_back({p, g});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

void grow(const std::vector<Candidate>& cand, const std::vector<std::vector<bool>>& compat,
          std::vector<size_t>& current, size_t next, ZooSolution& best, bool require_mixed) {
  auto mixed = [&](const std::vector<size_t>& ids) {
    bool boy = false, girl = false;
    for (size_t id : ids) {
      (cand[id].gender == Gender::Boy ? boy : girl) = true;
    }
    return boy && girl;
  };

  if (!current.empty() && (!require_mixed || mixed(current))) {
    if (current.size() > best.max_size) {
      best.max_size = current.size();
      best.families.clear();
    }
    if (current.size() == best.max_size) {
      Family f;
      for (size_t id : current) f.push_back({cand[id].perm, cand[id].gender});
      best.families.push_back(std::move(f));
    }
  }
  for (size_t i = next; i < cand.size(); ++i) {
    bool ok = true;
    for (size_t id : current) {
      if (!compat[id][i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(i);
    grow(cand, compat, current, i + 1, best, require_mixed);
    current.pop_back();
  }
}

}  // namespace

ZooSolution max_family(bool require_mixed) {
  std::vector<Candidate> cand = enumerate_candidates();

  ZooSolution sol;
  for (const Candidate& c : cand) {
    (c.gender == Gender::Boy ? sol.candidate_boys : sol.candidate_girls) += 1;
  }

  std::vector<std::vector<bool>> compat(cand.size(), std::vector<bool>(cand.size(), false));
  for (size_t i = 0; i < cand.size(); ++i) {
    for (size_t j = i + 1; j < cand.size(); ++j) {
      bool c = commutator_is_T(cand[i].perm, cand[j].perm);
      compat[i][j] = c;
      compat[j][i] = c;
    }
  }

  std::vector<size_t> current;
  grow(cand, compat, current, 0, sol, require_mixed);

  if (!sol.families.empty()) {
    int boys = 0, girls = 0;
    for (const FamilyMember& m : sol.families.front()) {
      (m.gender == Gender::Boy ? boys : girls) += 1;
    }
    sol.boys = boys;
    sol.girls = girls;
  }
  return sol;
}

}  // namespace ftr
