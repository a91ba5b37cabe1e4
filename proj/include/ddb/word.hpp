#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ddb/ints.hpp"

namespace ddb {

// One run of equal letters: generator index and a non-zero exponent.
struct Syllable {
  std::size_t gen = 0;
  Int exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in abstract generators, stored as exponent runs.
// Canonical form: no zero exponents and adjacent syllables use distinct
// generators; the empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word generator(std::size_t gen, Int exp = 1) {
    Word w;
    if (exp != 0) w.sylls_.push_back({gen, std::move(exp)});
    return w;
  }

  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool is_identity() const { return sylls_.empty(); }
  std::size_t syllable_count() const { return sylls_.size(); }

  // Letter count (sum of |exponent|).
  Int length() const {
    Int n = 0;
    for (const auto& s : sylls_) n += abs(s.exp);
    return n;
  }

  bool uses(std::size_t gen) const {
    for (const auto& s : sylls_)
      if (s.gen == gen) return true;
    return false;
  }

  // 1 + largest generator index appearing, 0 for the identity.
  std::size_t min_generator_count() const {
    std::size_t n = 0;
    for (const auto& s : sylls_) n = std::max(n, s.gen + 1);
    return n;
  }

  Word inverse() const {
    std::vector<Syllable> rev;
    rev.reserve(sylls_.size());
    for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
      rev.push_back({it->gen, -it->exp});
    Word w;
    w.sylls_ = std::move(rev);  // still reduced
    return w;
  }

  Word pow(const Int& n) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend Word free_reduce(const std::vector<Syllable>& raw);

 private:
  std::vector<Syllable> sylls_;
};

// Free-group normal form of an arbitrary syllable sequence: merges adjacent
// runs of the same generator and drops cancelled ones. Idempotent and
// length-non-increasing.
inline Word free_reduce(const std::vector<Syllable>& raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  Word w;
  w.sylls_ = std::move(out);
  return w;
}

inline Word operator*(const Word& u, const Word& v) {
  std::vector<Syllable> cat = u.sylls_;
  cat.insert(cat.end(), v.sylls_.begin(), v.sylls_.end());
  return free_reduce(cat);
}

// A cyclically reduced conjugate of a freely reduced word. Already
// cyclically reduced words are returned unchanged (no rotation is applied).
inline Word cyclic_reduce(const Word& w) {
  std::vector<Syllable> s(w.syllables());
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    Int merged = s.front().exp + s.back().exp;
    std::size_t g = s.front().gen;
    s.pop_back();
    s.erase(s.begin());
    if (merged != 0) s.push_back({g, std::move(merged)});
  }
  return free_reduce(s);
}

inline Word Word::pow(const Int& n) const {
  if (n == 0 || sylls_.empty()) return Word();
  if (sylls_.size() == 1) return generator(sylls_[0].gen, sylls_[0].exp * n);
  constexpr long long kMaxPowFactor = 1 << 20;
  long long m = to_long_checked(n, "word power");
  if (m > kMaxPowFactor || m < -kMaxPowFactor)
    throw Error("word power: exponent too large to expand");
  const Word base = m < 0 ? inverse() : *this;
  if (m < 0) m = -m;
  Word acc;
  for (long long i = 0; i < m; ++i) acc = acc * base;
  return acc;
}

}  // namespace ddb
