#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ddb/coset.hpp"

namespace ddb {

class Perm {
 public:
  explicit Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw Error("perm: not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t degree) {
    std::vector<std::uint32_t> img(degree);
    for (std::size_t i = 0; i < degree; ++i)
      img[i] = static_cast<std::uint32_t>(i);
    return Perm(std::move(img));
  }

  // one-line cycle input, e.g. Perm::cycle(5, {0,1,2}) is (0 1 2) on 5 points
  static Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& pts) {
    auto p = identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
      p.img_[pts[i]] = pts[(i + 1) % pts.size()];
    return Perm(std::move(p.img_));
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::size_t i) const { return img_[i]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<std::uint32_t> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      inv[img_[i]] = static_cast<std::uint32_t>(i);
    Perm p(std::vector<std::uint32_t>{});
    p.img_ = std::move(inv);
    return p;
  }

  // composition: (p * q)(i) = p(q(i))
  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw Error("perm: degree mismatch");
    std::vector<std::uint32_t> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = p.img_[q.img_[i]];
    Perm r(std::vector<std::uint32_t>{});
    r.img_ = std::move(img);
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;

  struct Hash {
    std::size_t operator()(const Perm& p) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : p.img_) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

 private:
  std::vector<std::uint32_t> img_;
};

inline Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

struct PermGroup {
  std::size_t degree = 1;
  std::vector<Perm> generators;
};

// Generator permutations acting on the cosets of a completed table; over the
// trivial subgroup this is the regular representation.
inline PermGroup perm_rep(const CosetTable& t) {
  if (!t.complete()) throw Error("perm_rep: incomplete coset table");
  PermGroup g;
  g.degree = t.coset_count();
  for (std::size_t gen = 0; gen < t.presentation().generator_count(); ++gen) {
    std::vector<std::uint32_t> img(g.degree);
    for (std::size_t c = 0; c < g.degree; ++c)
      img[c] = static_cast<std::uint32_t>(t.action(c, gen));
    g.generators.emplace_back(std::move(img));
  }
  return g;
}

// Full element set generated by `gens` (breadth-first product closure).
inline std::vector<Perm> element_closure(std::size_t degree,
                                         const std::vector<Perm>& gens,
                                         std::size_t cap = 20000) {
  std::unordered_set<Perm, Perm::Hash> seen;
  std::vector<Perm> elements;
  auto push = [&](const Perm& p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap) throw LimitError("element closure cap exceeded");
      elements.push_back(p);
      return true;
    }
    return false;
  };
  push(Perm::identity(degree));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Perm cur = elements[head];
    for (const auto& g : gens) push(cur * g);
  }
  return elements;
}

inline std::vector<Perm> element_closure(const PermGroup& g,
                                         std::size_t cap = 20000) {
  return element_closure(g.degree, g.generators, cap);
}

// Order of the derived subgroup, materialized as the normal closure of the
// generators' commutators (closed under conjugation by group generators).
inline std::size_t derived_subgroup_order(const PermGroup& g,
                                          std::size_t cap = 20000) {
  std::vector<Perm> seeds;
  for (const auto& a : g.generators)
    for (const auto& b : g.generators) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seeds.push_back(c);
    }
  while (true) {
    std::vector<Perm> elements = element_closure(g.degree, seeds, cap);
    std::unordered_set<Perm, Perm::Hash> members(elements.begin(),
                                                 elements.end());
    bool stable = true;
    for (const auto& h : elements) {
      for (const auto& x : g.generators) {
        Perm conj = x.inverse() * h * x;
        if (!members.count(conj)) {
          seeds.push_back(conj);
          stable = false;
        }
      }
      if (!stable) break;
    }
    if (stable) return elements.size();
  }
}

// Perfectness check by comparing the derived subgroup's order with the full
// element count. The trivial group is vacuously perfect.
inline bool is_perfect(const PermGroup& g, std::size_t cap = 20000) {
  return derived_subgroup_order(g, cap) == element_closure(g, cap).size();
}

}  // namespace ddb
