#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ddb/int_matrix.hpp"

namespace ddb {

// Invariant factors of a finitely generated abelian group, in canonical
// form: factors d1 | d2 | ... with 1-entries dropped and one trailing 0 per
// infinite cyclic summand.
class InvariantFactors {
 public:
  InvariantFactors() = default;

  explicit InvariantFactors(std::vector<Int> factors)
      : factors_(std::move(factors)) {
    canonicalize();
  }

  const std::vector<Int>& factors() const { return factors_; }

  std::size_t free_rank() const {
    std::size_t n = 0;
    for (const auto& f : factors_)
      if (f == 0) ++n;
    return n;
  }

  bool is_trivial() const { return factors_.empty(); }

  // Group order; nullopt when a factor is 0 (infinite group).
  std::optional<Int> order() const {
    Int n = 1;
    for (const auto& f : factors_) {
      if (f == 0) return std::nullopt;
      n *= f;
    }
    return n;
  }

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) =
      default;

 private:
  void canonicalize() {
    for (auto& f : factors_) {
      if (f < 0) f = -f;
    }
    // enforce d_i | d_{i+1} among nonzero entries (bubble gcd/lcm sweep)
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
        Int &a = factors_[i], &b = factors_[i + 1];
        if (a == 0 && b != 0) {
          std::swap(a, b);  // zeros trail
          changed = true;
        } else if (a != 0 && b != 0 && b % a != 0) {
          Int g = gcd(a, b);
          Int l = a / g * b;
          a = g;
          b = l;
          changed = true;
        }
      }
    }
    std::erase(factors_, Int(1));
  }

  std::vector<Int> factors_;
};

// Smith normal form of an integer matrix, reported as the invariant factors
// of the cokernel of its transpose (one column per generator, one row per
// relation). Pivot choice: smallest nonzero |entry|, ties broken by lowest
// row then column, so the output path is deterministic.
inline InvariantFactors smith_normal_form(const IntMatrix& input) {
  IntMatrix w = input;
  const std::size_t rows = w.rows(), cols = w.cols();
  std::vector<Int> diag;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(a, j), w.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, a), w.at(i, b));
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // locate the smallest nonzero |pivot| in the trailing submatrix
      std::size_t pi = rows, pj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Int& v = w.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (pi == rows || av < best) {
            best = std::move(av);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // submatrix is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = w.at(i, t) / w.at(t, t);
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j)
            w.at(i, j) -= q * w.at(t, j);
        if (w.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = w.at(t, j) / w.at(t, t);
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i)
            w.at(i, j) -= q * w.at(i, t);
        if (w.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix for the factor chain
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (w.at(i, j) % w.at(t, t) != 0) {
            for (std::size_t c = t; c < cols; ++c) w.at(t, c) += w.at(i, c);
            divides = false;
          }
      if (divides) break;
    }
    if (w.at(t, t) == 0) break;
    diag.push_back(abs(w.at(t, t)));
  }

  const std::size_t rank = diag.size();
  for (std::size_t i = rank; i < cols; ++i) diag.push_back(0);
  return InvariantFactors(std::move(diag));
}

inline InvariantFactors h1_invariants(const Presentation& p) {
  return smith_normal_form(relation_matrix(p));
}

// True iff the abelian group has Z/2 as a quotient: some factor is 0 or even.
inline bool surjects_onto_z2(const InvariantFactors& f) {
  for (const auto& d : f.factors())
    if (d == 0 || d % 2 == 0) return true;
  return false;
}

// True iff the group is finite of odd order (the trivial group counts).
inline bool is_finite_odd(const InvariantFactors& f) {
  for (const auto& d : f.factors())
    if (d == 0 || d % 2 == 0) return false;
  return true;
}

}  // namespace ddb
