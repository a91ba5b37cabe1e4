#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ddb/presentation.hpp"
#include "ddb/quaternion.hpp"

namespace ddb {

enum class SpaceFormFamily { Cyclic, Prism, BinT, BinO, BinI };

inline const char* family_name(SpaceFormFamily f) {
  switch (f) {
    case SpaceFormFamily::Cyclic: return "Cyclic";
    case SpaceFormFamily::Prism: return "Prism";
    case SpaceFormFamily::BinT: return "BinT";
    case SpaceFormFamily::BinO: return "BinO";
    case SpaceFormFamily::BinI: return "BinI";
  }
  return "?";
}

// Symbolic fundamental-group datum of a spherical space form: a base family
// (cyclic/lens, prism, or binary polyhedral) times a cyclic factor of
// coprime order.
struct SpaceFormDescriptor {
  SpaceFormFamily family = SpaceFormFamily::Cyclic;
  Int m = 1;      // Cyclic: group order
  Int q = 1;      // Cyclic: lens rotation parameter, gcd(m, q) = 1
  Int alpha = 1;  // Prism: gcd(alpha, beta) = 1, alpha may be negative
  Int beta = 1;   // Prism: beta >= 1
  Int cofactor = 1;

  static SpaceFormDescriptor cyclic(Int m, Int q, Int cofactor = 1) {
    SpaceFormDescriptor d;
    d.family = SpaceFormFamily::Cyclic;
    d.m = std::move(m);
    d.q = std::move(q);
    d.cofactor = std::move(cofactor);
    d.validate();
    return d;
  }

  static SpaceFormDescriptor prism(Int alpha, Int beta, Int cofactor = 1) {
    SpaceFormDescriptor d;
    d.family = SpaceFormFamily::Prism;
    d.alpha = std::move(alpha);
    d.beta = std::move(beta);
    d.cofactor = std::move(cofactor);
    d.validate();
    return d;
  }

  static SpaceFormDescriptor binary(SpaceFormFamily f, Int cofactor = 1) {
    SpaceFormDescriptor d;
    d.family = f;
    d.cofactor = std::move(cofactor);
    d.validate();
    return d;
  }

  Int base_order() const {
    switch (family) {
      case SpaceFormFamily::Cyclic: return m;
      case SpaceFormFamily::Prism: return 4 * abs(alpha) * beta;
      case SpaceFormFamily::BinT: return 24;
      case SpaceFormFamily::BinO: return 48;
      case SpaceFormFamily::BinI: return 120;
    }
    return 0;
  }

  Int order() const { return base_order() * cofactor; }

  void validate() const {
    if (cofactor < 1) throw Error("descriptor: cofactor must be >= 1");
    switch (family) {
      case SpaceFormFamily::Cyclic:
        if (m < 1 || q < 1) throw Error("descriptor: cyclic needs m, q >= 1");
        if (gcd(m, q) != 1) throw Error("descriptor: cyclic needs gcd(m, q) = 1");
        break;
      case SpaceFormFamily::Prism:
        if (beta < 1) throw Error("descriptor: prism needs beta >= 1");
        if (alpha == 0) throw Error("descriptor: prism needs alpha != 0");
        if (gcd(abs(alpha), beta) != 1)
          throw Error("descriptor: prism needs gcd(alpha, beta) = 1");
        break;
      default:
        break;
    }
    if (gcd(base_order(), cofactor) != 1)
      throw Error("descriptor: cofactor must be coprime to the base order");
  }

  std::string label() const {
    std::string s;
    switch (family) {
      case SpaceFormFamily::Cyclic:
        s = "Cyclic(" + m.str() + "," + q.str() + ")";
        break;
      case SpaceFormFamily::Prism:
        s = "Prism(" + alpha.str() + "," + beta.str() + ")";
        break;
      default:
        s = family_name(family);
        break;
    }
    if (cofactor > 1) s += " x C" + cofactor.str();
    return s;
  }

  friend bool operator==(const SpaceFormDescriptor&,
                         const SpaceFormDescriptor&) = default;
};

// Canonical presentation of the descriptor's group. A nontrivial cofactor
// adjoins a central generator c with c^cofactor.
inline Presentation catalog_presentation(const SpaceFormDescriptor& d) {
  d.validate();
  std::vector<std::string> names;
  std::vector<Word> relators;
  switch (d.family) {
    case SpaceFormFamily::Cyclic: {
      names = {"a"};
      relators.push_back(Word::generator(0, d.m));
      break;
    }
    case SpaceFormFamily::Prism: {
      names = {"a", "b"};
      Word a = Word::generator(0), b = Word::generator(1);
      relators.push_back(a * b * a.inverse() * b);
      relators.push_back(Word::generator(0, 2 * d.beta) *
                         Word::generator(1, -d.alpha));
      break;
    }
    case SpaceFormFamily::BinT:
    case SpaceFormFamily::BinO:
    case SpaceFormFamily::BinI: {
      names = {"s", "t"};
      Int k = d.family == SpaceFormFamily::BinT   ? 3
              : d.family == SpaceFormFamily::BinO ? 4
                                                  : 5;
      Word s = Word::generator(0), t = Word::generator(1);
      relators.push_back(Word::generator(0, k) * Word::generator(1, -3));
      relators.push_back(Word::generator(1, 3) * (s * t).pow(2).inverse());
      break;
    }
  }
  if (d.cofactor > 1) {
    std::size_t c = names.size();
    names.push_back("c");
    relators.push_back(Word::generator(c, d.cofactor));
    for (std::size_t g = 0; g < c; ++g) {
      Word gw = Word::generator(g), cw = Word::generator(c);
      relators.push_back(gw * cw * gw.inverse() * cw.inverse());
    }
  }
  return Presentation(std::move(names), std::move(relators));
}

// Exact unit-quaternion generators realizing the group inside Sp(1), where
// the coordinates stay in Q, Q(sqrt 2) or Q(sqrt 5): the quaternion group,
// the binary polyhedral groups, and the binary dihedral groups Prism(n, 1)
// for n in {2, 3, 4, 5}. Other descriptors are presentation-only.
inline std::optional<std::vector<Quaternion>> quaternion_generators(
    const SpaceFormDescriptor& d) {
  d.validate();
  if (d.cofactor != 1) return std::nullopt;
  const Rational h(1, 2);
  const Rational nh(-1, 2);
  const QuadExt inv_sqrt2(0, Rational(1, 2), 2);        // sqrt(2)/2
  const QuadExt phi_half(Rational(1, 4), Rational(1, 4), 5);
  const QuadExt inv_phi_half(Rational(-1, 4), Rational(1, 4), 5);
  const Quaternion omega(nh, h, h, h);

  switch (d.family) {
    case SpaceFormFamily::BinT:
      return std::vector<Quaternion>{omega, Quaternion::i()};
    case SpaceFormFamily::BinO:
      return std::vector<Quaternion>{
          omega, Quaternion(inv_sqrt2, inv_sqrt2, 0, 0)};
    case SpaceFormFamily::BinI:
      return std::vector<Quaternion>{
          omega, Quaternion(phi_half, h, inv_phi_half, 0)};
    case SpaceFormFamily::Prism: {
      if (d.beta != 1) return std::nullopt;
      if (d.alpha == 2)
        return std::vector<Quaternion>{Quaternion::i(), Quaternion::j()};
      if (d.alpha == 3)
        return std::vector<Quaternion>{
            Quaternion(h, h, h, h),
            Quaternion(0, inv_sqrt2, -inv_sqrt2, 0)};
      if (d.alpha == 4)
        return std::vector<Quaternion>{
            Quaternion(inv_sqrt2, inv_sqrt2, 0, 0), Quaternion::j()};
      if (d.alpha == 5)
        return std::vector<Quaternion>{
            Quaternion(phi_half, h, inv_phi_half, 0), Quaternion::k()};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

struct CatalogEntry {
  SpaceFormDescriptor descriptor;
  Int order;
  std::vector<std::string> coincidences;
};

namespace detail {

inline Int mod_inverse(Int a, const Int& m) {
  Int t = 0, new_t = 1, r = m, new_r = a % m;
  if (new_r < 0) new_r += m;
  while (new_r != 0) {
    Int quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return t;
}

// smallest q' equivalent to q under the lens identifications q' = +-q^{+-1}
inline Int lens_canonical_q(const Int& m, const Int& q) {
  if (m <= 2) return q;
  auto norm = [&](Int x) {
    x %= m;
    if (x <= 0) x += m;
    return x;
  };
  Int qq = norm(q);
  Int qi = mod_inverse(qq, m);
  Int best = qq;
  for (const Int& cand : {qq, norm(-qq), qi, norm(-qi)}) best = std::min(best, cand);
  return best;
}

}  // namespace detail

// All descriptors of total group order <= max_order. Known group
// coincidences (lens parameter identifications, cyclic groups in prism or
// product disguise) are flagged, not collapsed.
inline std::vector<CatalogEntry> enumerate_descriptors(const Int& max_order) {
  if (max_order < 1) throw Error("enumerate_descriptors: max_order must be >= 1");
  std::vector<CatalogEntry> out;

  auto cofactors_for = [&](const Int& base) {
    std::vector<Int> cs;
    for (Int c = 1; base * c <= max_order; ++c)
      if (gcd(base, c) == 1) cs.push_back(c);
    return cs;
  };

  for (Int m = 1; m <= max_order; ++m) {
    for (Int q = 1; q <= m; ++q) {
      if (gcd(m, q) != 1) continue;
      for (const Int& c : cofactors_for(m)) {
        CatalogEntry e{SpaceFormDescriptor::cyclic(m, q, c), m * c, {}};
        Int canon = detail::lens_canonical_q(m, q);
        if (canon != q)
          e.coincidences.push_back("lens-equivalent to Cyclic(" + m.str() +
                                   "," + canon.str() + ")");
        if (c > 1)
          e.coincidences.push_back("group is cyclic of order " + Int(m * c).str());
        out.push_back(std::move(e));
      }
    }
  }

  for (Int alpha = 1; 4 * alpha <= max_order; ++alpha) {
    for (Int beta = 1; 4 * alpha * beta <= max_order; ++beta) {
      if (gcd(alpha, beta) != 1) continue;
      Int base = 4 * alpha * beta;
      for (const Int& c : cofactors_for(base)) {
        CatalogEntry e{SpaceFormDescriptor::prism(alpha, beta, c), base * c, {}};
        if (alpha == 1)
          e.coincidences.push_back("group is cyclic of order " +
                                   Int(base * c).str());
        out.push_back(std::move(e));
      }
    }
  }

  for (auto fam :
       {SpaceFormFamily::BinT, SpaceFormFamily::BinO, SpaceFormFamily::BinI}) {
    Int base = SpaceFormDescriptor::binary(fam).base_order();
    if (base > max_order) continue;
    for (const Int& c : cofactors_for(base))
      out.push_back({SpaceFormDescriptor::binary(fam, c), base * c, {}});
  }

  std::sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
    auto key = [](const CatalogEntry& e) {
      return std::make_tuple(e.order, static_cast<int>(e.descriptor.family),
                             e.descriptor.m, e.descriptor.q, e.descriptor.alpha,
                             e.descriptor.beta, e.descriptor.cofactor);
    };
    return key(x) < key(y);
  });
  return out;
}

}  // namespace ddb
