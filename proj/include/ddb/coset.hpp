#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ddb/presentation.hpp"

namespace ddb {

// Cap on the number of cosets a single enumeration may define. Hitting the
// cap yields an incomplete table ("unknown"), never a claim of infiniteness.
struct EnumLimit {
  std::size_t max_cosets = 1'000'000;
};

namespace detail {

struct TcLimit {};

// Letter sequence of a word: column 2g for generator g, 2g+1 for its inverse.
inline std::vector<std::uint32_t> word_columns(const Word& w) {
  constexpr long long kMaxRun = 1 << 20;
  std::vector<std::uint32_t> cols;
  for (const auto& s : w.syllables()) {
    long long e = to_long_checked(s.exp, "coset tracing");
    if (e > kMaxRun || e < -kMaxRun)
      throw Error("coset tracing: relator exponent too large to expand");
    std::uint32_t col = static_cast<std::uint32_t>(2 * s.gen + (e < 0 ? 1 : 0));
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) cols.push_back(col);
  }
  return cols;
}

// HLT-style enumerator: relators are scanned and filled at every live coset
// in increasing order, remaining row gaps are filled by definition, and
// coincidences are merged eagerly through a union-find with path
// compression. Deterministic for fixed input.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgens,
                  std::size_t cap)
      : stride_(2 * p.generator_count()), cap_(cap ? cap : 1) {
    for (const auto& r : p.relators()) relators_.push_back(word_columns(r));
    for (const auto& w : subgens) {
      auto cols = word_columns(w);
      if (!cols.empty()) subgroup_.push_back(std::move(cols));
    }
    add_coset();
  }

  bool enumerate() {
    try {
      for (const auto& w : subgroup_) scan_and_fill(0, w);
      for (std::size_t c = 0; c < nrows_; ++c) {
        if (!live(c)) continue;
        for (const auto& r : relators_) {
          scan_and_fill(c, r);
          if (!live(c)) break;
        }
        if (!live(c)) continue;
        for (std::size_t x = 0; x < stride_; ++x)
          if (raw(c, x) < 0) define(c, x);
      }
      return true;
    } catch (const TcLimit&) {
      return false;
    }
  }

  std::size_t live_count() const { return nlive_; }

  // live cosets in index order, entries resolved to representatives
  std::vector<std::int32_t> compact(std::size_t& count_out) {
    std::vector<std::int32_t> remap(nrows_, -1);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < nrows_; ++c)
      if (live(c)) remap[c] = next++;
    std::vector<std::int32_t> out(static_cast<std::size_t>(next) * stride_, -1);
    for (std::size_t c = 0; c < nrows_; ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < stride_; ++x) {
        std::int32_t v = raw(c, x);
        out[static_cast<std::size_t>(remap[c]) * stride_ + x] =
            v < 0 ? -1 : remap[static_cast<std::size_t>(find(v))];
      }
    }
    count_out = static_cast<std::size_t>(next);
    return out;
  }

 private:
  std::size_t stride_;
  std::size_t cap_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> rep_;
  std::vector<std::int32_t> dead_;
  std::size_t dead_head_ = 0;
  std::size_t nrows_ = 0;
  std::size_t nlive_ = 0;

  static std::uint32_t inv(std::uint32_t col) { return col ^ 1u; }

  std::int32_t find(std::int32_t c) {
    while (rep_[static_cast<std::size_t>(c)] != c) {
      rep_[static_cast<std::size_t>(c)] =
          rep_[static_cast<std::size_t>(rep_[static_cast<std::size_t>(c)])];
      c = rep_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  bool live(std::size_t c) {
    return find(static_cast<std::int32_t>(c)) == static_cast<std::int32_t>(c);
  }

  std::int32_t& raw_ref(std::size_t c, std::size_t x) {
    return tab_[c * stride_ + x];
  }
  std::int32_t raw(std::size_t c, std::size_t x) const {
    return tab_[c * stride_ + x];
  }

  // entry resolved to a live representative (with path update)
  std::int32_t get(std::size_t c, std::size_t x) {
    std::int32_t v = raw(c, x);
    if (v < 0) return -1;
    std::int32_t r = find(v);
    if (r != v) raw_ref(c, x) = r;
    return r;
  }

  std::int32_t add_coset() {
    if (nrows_ >= cap_) throw TcLimit{};
    tab_.resize(tab_.size() + stride_, -1);
    rep_.push_back(static_cast<std::int32_t>(nrows_));
    ++nlive_;
    return static_cast<std::int32_t>(nrows_++);
  }

  std::int32_t define(std::size_t c, std::size_t x) {
    std::int32_t b = add_coset();
    raw_ref(c, x) = b;
    raw_ref(static_cast<std::size_t>(b), inv(static_cast<std::uint32_t>(x))) =
        static_cast<std::int32_t>(c);
    return b;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[static_cast<std::size_t>(b)] = a;
    --nlive_;
    dead_.push_back(b);
  }

  // Transfers every row of each dead coset onto its representative,
  // queueing any induced coincidences, until the queue drains.
  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (dead_head_ < dead_.size()) {
      std::int32_t g = dead_[dead_head_++];
      for (std::size_t x = 0; x < stride_; ++x) {
        std::int32_t d = raw(static_cast<std::size_t>(g), x);
        if (d < 0) continue;
        std::int32_t mu = find(g);
        std::int32_t nu = find(d);
        std::int32_t fwd = get(static_cast<std::size_t>(mu), x);
        if (fwd < 0)
          raw_ref(static_cast<std::size_t>(mu), x) = nu;
        else if (fwd != nu)
          merge(fwd, nu);
        mu = find(mu);
        nu = find(nu);
        std::uint32_t xi = inv(static_cast<std::uint32_t>(x));
        std::int32_t bwd = get(static_cast<std::size_t>(nu), xi);
        if (bwd < 0)
          raw_ref(static_cast<std::size_t>(nu), xi) = mu;
        else if (bwd != mu)
          merge(bwd, mu);
      }
    }
    dead_.clear();
    dead_head_ = 0;
  }

  void scan_and_fill(std::size_t start, const std::vector<std::uint32_t>& w) {
    std::int32_t f = find(static_cast<std::int32_t>(start));
    std::int32_t b = f;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        std::int32_t nxt = get(static_cast<std::size_t>(f),
                               w[static_cast<std::size_t>(i)]);
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        std::int32_t nxt = get(static_cast<std::size_t>(b),
                               inv(w[static_cast<std::size_t>(j)]));
        if (nxt < 0) break;
        b = nxt;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        raw_ref(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) = b;
        raw_ref(static_cast<std::size_t>(b),
                inv(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
    }
  }
};

}  // namespace detail

// Result of a Todd-Coxeter enumeration over a subgroup. When complete, rows
// are the subgroup cosets (row 0 the subgroup itself), each generator acts
// as a permutation of rows, and the table is closed under all relators.
class CosetTable {
 public:
  CosetTable(Presentation p, std::vector<Word> subgroup_gens,
             EnumLimit limit = {})
      : pres_(std::move(p)), subgens_(std::move(subgroup_gens)) {
    for (const auto& w : subgens_)
      if (w.min_generator_count() > pres_.generator_count())
        throw Error("coset enumeration: subgroup word uses undeclared generator");
    detail::CosetEnumerator enumerator(pres_, subgens_, limit.max_cosets);
    complete_ = enumerator.enumerate();
    tab_ = enumerator.compact(count_);
  }

  const Presentation& presentation() const { return pres_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }
  bool complete() const { return complete_; }
  std::size_t coset_count() const { return count_; }

  // coset * generator (or its inverse); table must be complete
  std::size_t action(std::size_t coset, std::size_t gen,
                     bool inverse = false) const {
    require_complete();
    if (coset >= count_ || gen >= pres_.generator_count())
      throw Error("coset table: index out of range");
    return static_cast<std::size_t>(
        tab_[coset * 2 * pres_.generator_count() + 2 * gen + (inverse ? 1 : 0)]);
  }

  std::size_t trace(std::size_t start, const Word& w) const {
    require_complete();
    if (w.min_generator_count() > pres_.generator_count())
      throw Error("coset table: word uses undeclared generator");
    std::size_t c = start;
    for (std::uint32_t col : detail::word_columns(w))
      c = static_cast<std::size_t>(
          tab_[c * 2 * pres_.generator_count() + col]);
    return c;
  }

  // rows in column order g0, g0^-1, g1, g1^-1, ...; -1 marks gaps of an
  // incomplete enumeration
  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(count_);
    const std::size_t stride = 2 * pres_.generator_count();
    for (std::size_t c = 0; c < count_; ++c) {
      out[c].reserve(stride);
      for (std::size_t x = 0; x < stride; ++x)
        out[c].push_back(tab_[c * stride + x]);
    }
    return out;
  }

 private:
  void require_complete() const {
    if (!complete_) throw Error("coset table: enumeration did not complete");
  }

  Presentation pres_;
  std::vector<Word> subgens_;
  std::vector<std::int32_t> tab_;
  std::size_t count_ = 0;
  bool complete_ = false;
};

inline CosetTable todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_gens,
                               EnumLimit limit = {}) {
  return CosetTable(p, subgroup_gens, limit);
}

// Order of the presented group: coset count over the trivial subgroup, or
// nullopt when the enumeration hits its cap.
inline std::optional<std::uint64_t> group_order(const Presentation& p,
                                                EnumLimit limit = {}) {
  CosetTable t(p, {}, limit);
  if (!t.complete()) return std::nullopt;
  return t.coset_count();
}

// Equality of u and v in the presented group, decided in the regular
// representation of a completed trivial-subgroup table.
inline std::optional<bool> words_equal(const CosetTable& regular,
                                       const Word& u, const Word& v) {
  if (!regular.complete() || !regular.subgroup_generators().empty())
    return std::nullopt;
  return regular.trace(0, u) == regular.trace(0, v);
}

inline std::optional<bool> words_equal(const Presentation& p, const Word& u,
                                       const Word& v, EnumLimit limit = {}) {
  CosetTable t(p, {}, limit);
  if (!t.complete()) return std::nullopt;
  return words_equal(t, u, v);
}

}  // namespace ddb
