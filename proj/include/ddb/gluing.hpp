#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddb/coset.hpp"
#include "ddb/parser.hpp"
#include "ddb/smith.hpp"

namespace ddb {

enum class LeafType { Sphere2, Torus2 };
enum class BaseType { Point, RP2, Circle, Torus2, KleinBottle };

inline const char* leaf_name(LeafType t) {
  return t == LeafType::Sphere2 ? "S2" : "T2";
}

inline const char* base_name(BaseType b) {
  switch (b) {
    case BaseType::Point: return "pt";
    case BaseType::RP2: return "RP2";
    case BaseType::Circle: return "S1";
    case BaseType::Torus2: return "T2";
    case BaseType::KleinBottle: return "K";
  }
  return "?";
}

// One disk-bundle side of a decomposition with boundary S^2 or T^2. Only
// the five bundle types that occur over these leaves are admissible; the
// fiber sphere dimension is determined by the pair.
struct SideDescriptor {
  LeafType leaf;
  BaseType base;
  int fiber_sphere_dim;

  static SideDescriptor make(LeafType leaf, BaseType base) {
    int ell = -1;
    if (leaf == LeafType::Sphere2) {
      if (base == BaseType::Point) ell = 2;
      if (base == BaseType::RP2) ell = 0;
    } else {
      if (base == BaseType::Circle) ell = 1;
      if (base == BaseType::Torus2) ell = 0;
      if (base == BaseType::KleinBottle) ell = 0;
    }
    if (ell < 0)
      throw Error(std::string("no ") + base_name(base) + " disk bundle with boundary " +
                  leaf_name(leaf));
    return {leaf, base, ell};
  }

  friend bool operator==(const SideDescriptor&, const SideDescriptor&) = default;
};

// Torus gluing matrix acting on pi_1(T^2) = Z^2; orientation-preserving
// gluings have determinant +1.
struct GluingMatrix {
  Int alpha = 1, beta = 0, gamma = 0, delta = 1;

  Int det() const { return alpha * delta - beta * gamma; }

  std::string str() const {
    return "[" + alpha.str() + "," + beta.str() + ";" + gamma.str() + "," +
           delta.str() + "]";
  }

  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

// Canonical representative modulo the gluing diffeomorphisms that extend
// over the solid-torus side: reflecting the second boundary coordinate
// converts determinant -1 to +1.
inline GluingMatrix matrix_orbit_reduce(const GluingMatrix& m) {
  Int d = m.det();
  if (d == 1) return m;
  if (d == -1) return {m.alpha, m.beta, -m.gamma, -m.delta};
  throw Error("gluing matrix must have determinant +-1");
}

struct GluingDatum {
  SideDescriptor side_minus;
  SideDescriptor side_plus;
  GluingMatrix matrix;  // used only for torus leaves

  GluingDatum(SideDescriptor minus, SideDescriptor plus, GluingMatrix mat = {})
      : side_minus(minus), side_plus(plus), matrix(std::move(mat)) {
    if (side_minus.leaf != side_plus.leaf)
      throw Error("gluing: the two sides must share the leaf");
    if (side_minus.leaf == LeafType::Torus2) {
      if (matrix.det() != 1)
        throw Error("gluing: torus gluing matrix must have determinant 1");
      // a torus gluing with two double-cover sides has no place here: the
      // resulting group is infinite, outside the positively curved setting
      if (side_minus.fiber_sphere_dim == 0 && side_plus.fiber_sphere_dim == 0)
        throw Error("gluing: torus gluings need a circle side");
    }
  }
};

inline Presentation leaf_presentation(LeafType t) {
  if (t == LeafType::Sphere2) return Presentation({}, {});
  Word b = Word::generator(0), c = Word::generator(1);
  return Presentation({"b", "c"}, {b * c * b.inverse() * c.inverse()});
}

namespace detail {

inline std::vector<std::string> disjoint_names(
    const std::vector<std::string>& first, const std::vector<std::string>& second) {
  std::vector<std::string> names = first;
  for (const auto& n : second) {
    std::string candidate = n;
    int suffix = 2;
    while (std::find(names.begin(), names.end(), candidate) != names.end())
      candidate = n + "_" + std::to_string(suffix++);
    names.push_back(candidate);
  }
  return names;
}

inline Word shift_word(const Word& w, std::size_t offset) {
  std::vector<Syllable> s;
  s.reserve(w.syllable_count());
  for (const auto& syl : w.syllables()) s.push_back({syl.gen + offset, syl.exp});
  return free_reduce(s);
}

}  // namespace detail

// Pushout presentation of the union of two disk bundles along their common
// boundary leaf: the plus target's generators (listed first) and the minus
// target's, all target relators, and one identification relator
// to_plus(g) * to_minus(g)^-1 per leaf generator g.
inline Presentation svk_pushout(const Presentation& leaf_pres,
                                const GroupHom& to_minus,
                                const GroupHom& to_plus) {
  if (to_minus.source != leaf_pres || to_plus.source != leaf_pres)
    throw Error("svk_pushout: both maps must have the leaf as source");

  const std::size_t offset = to_plus.target.generator_count();
  std::vector<std::string> names = detail::disjoint_names(
      to_plus.target.generator_names(), to_minus.target.generator_names());

  std::vector<Word> relators = to_plus.target.relators();
  for (const auto& r : to_minus.target.relators())
    relators.push_back(detail::shift_word(r, offset));
  for (std::size_t g = 0; g < leaf_pres.generator_count(); ++g) {
    Word glue = to_plus.images[g] *
                detail::shift_word(to_minus.images[g], offset).inverse();
    relators.push_back(std::move(glue));
  }
  return Presentation(std::move(names), std::move(relators));
}

enum class Pi1Kind {
  Trivial,
  Cyclic,
  PrismGroup,
  FreeAbelianRank,
  Z2FreeProductZ2,
  Other
};

struct Pi1Class {
  Pi1Kind kind = Pi1Kind::Other;
  Int n = 0;           // Cyclic order
  Int alpha = 0;       // PrismGroup parameters
  Int beta = 0;
  std::size_t rank = 0;  // FreeAbelianRank

  static Pi1Class trivial() { return {Pi1Kind::Trivial}; }
  static Pi1Class cyclic(Int n) { return {Pi1Kind::Cyclic, std::move(n)}; }
  static Pi1Class prism(Int a, Int b) {
    return {Pi1Kind::PrismGroup, 0, std::move(a), std::move(b)};
  }
  static Pi1Class free_abelian(std::size_t rank) {
    return {Pi1Kind::FreeAbelianRank, 0, 0, 0, rank};
  }
  static Pi1Class z2_free_z2() { return {Pi1Kind::Z2FreeProductZ2}; }
  static Pi1Class other() { return {Pi1Kind::Other}; }

  std::string str() const {
    switch (kind) {
      case Pi1Kind::Trivial: return "Trivial";
      case Pi1Kind::Cyclic: return "Cyclic(" + n.str() + ")";
      case Pi1Kind::PrismGroup:
        return "PrismGroup(" + alpha.str() + "," + beta.str() + ")";
      case Pi1Kind::FreeAbelianRank:
        return "FreeAbelianRank(" + std::to_string(rank) + ")";
      case Pi1Kind::Z2FreeProductZ2: return "Z2FreeProductZ2";
      case Pi1Kind::Other: return "Other";
    }
    return "Other";
  }

  friend bool operator==(const Pi1Class&, const Pi1Class&) = default;
};

enum class OrderKind { Finite, Infinite, Unknown };

struct OrderInfo {
  OrderKind kind = OrderKind::Unknown;
  std::uint64_t value = 0;

  static OrderInfo finite(std::uint64_t n) { return {OrderKind::Finite, n}; }
  static OrderInfo infinite() { return {OrderKind::Infinite, 0}; }
  static OrderInfo unknown() { return {OrderKind::Unknown, 0}; }

  std::string str() const {
    if (kind == OrderKind::Finite) return std::to_string(value);
    return kind == OrderKind::Infinite ? "infinite" : "unknown";
  }

  friend bool operator==(const OrderInfo&, const OrderInfo&) = default;
};

struct Pi1Report {
  Presentation presentation;
  InvariantFactors invariants;
  OrderInfo order;
  Pi1Class classification;
  bool abelian = false;
  std::vector<std::string> certificate;
};

// Machine-checked certificate that the Klein-bottle-side pushout group is
// the prism group with the matrix's (alpha, beta): the prism relators are
// verified in the pushout group and the pushout relators (with the extra
// generator rewritten as d^{2 delta} e^{-gamma}) are verified in the prism
// group, each by tracing in the regular representation.
struct PrismCertificate {
  Int alpha;  // normalized so beta >= 1; sign of alpha is preserved
  Int beta;
  std::uint64_t order = 0;
  std::vector<std::string> checks;
  bool valid = false;
};

inline Presentation prism_presentation_de(const Int& alpha, const Int& beta) {
  Word d = Word::generator(0), e = Word::generator(1);
  return Presentation({"d", "e"},
                      {d * e * d.inverse() * e,
                       Word::generator(0, 2 * beta) * Word::generator(1, -alpha)});
}

inline std::optional<PrismCertificate> recognize_prism(const Presentation& pushout,
                                                       const GluingMatrix& m,
                                                       EnumLimit limit = {}) {
  if (pushout.generator_count() != 3)
    throw Error("recognize_prism: expected the three-generator pushout");
  if (m.det() != 1) throw Error("recognize_prism: matrix must have determinant 1");
  if (m.alpha == 0 || m.beta == 0)
    throw Error("recognize_prism: degenerate matrix belongs to the abelian branch");

  PrismCertificate cert;
  cert.alpha = m.beta > 0 ? m.alpha : -m.alpha;
  cert.beta = m.beta > 0 ? m.beta : -m.beta;

  const auto& names = pushout.generator_names();
  const Presentation prism = prism_presentation_de(cert.alpha, cert.beta);

  CosetTable pushout_tab(pushout, {}, limit);
  CosetTable prism_tab(prism, {}, limit);
  if (!pushout_tab.complete() || !prism_tab.complete()) return std::nullopt;

  bool ok = true;
  auto check = [&](const CosetTable& tab, const Word& lhs, const Word& rhs,
                   const std::vector<std::string>& ns, const char* where) {
    bool eq = *words_equal(tab, lhs, rhs);
    ok = ok && eq;
    cert.checks.push_back(std::string(where) + ": " + to_text(lhs, ns) + " = " +
                          to_text(rhs, ns) + (eq ? " verified" : " FAILED"));
  };

  // pushout relators force the prism relator d^{2 beta} = e^{alpha}
  check(pushout_tab, Word::generator(1, 2 * m.beta), Word::generator(2, m.alpha),
        names, "pushout");

  // conversely, with a := d^{2 delta} e^{-gamma} the prism relators give back
  // a^alpha = d^2 and a^beta = e
  Word expr_prism =
      Word::generator(0, 2 * m.delta) * Word::generator(1, -m.gamma);
  check(prism_tab, expr_prism.pow(m.alpha), Word::generator(0, 2),
        prism.generator_names(), "prism");
  check(prism_tab, expr_prism.pow(m.beta), Word::generator(1),
        prism.generator_names(), "prism");

  // eliminating the extra generator preserves the group order
  Word expr_pushout =
      Word::generator(1, 2 * m.delta) * Word::generator(2, -m.gamma);
  Presentation eliminated = tietze_eliminate(pushout, 0, expr_pushout);
  auto n_pushout = pushout_tab.coset_count();
  auto n_prism = prism_tab.coset_count();
  auto n_elim = group_order(eliminated, limit);
  if (!n_elim) return std::nullopt;
  bool orders_agree = n_pushout == n_prism && n_prism == *n_elim;
  ok = ok && orders_agree;
  cert.checks.push_back("orders: pushout " + std::to_string(n_pushout) +
                        ", eliminated " + std::to_string(*n_elim) + ", prism " +
                        std::to_string(n_prism) +
                        (orders_agree ? " agree" : " DISAGREE"));

  cert.order = n_pushout;
  cert.valid = ok;
  return cert;
}

enum class TorusSublattice { FirstSquared, SecondSquared, Diagonal };

// pi_1 of the double disk bundle glued along T^2 with the circle side as the
// plus side. The matrix precomposes the plus projection: b and c map to
// a^alpha and a^beta. The minus side map depends on the base: the trivial
// circle bundle projection, an index-2 torus sublattice (choice exposed, as
// the bundle does not fix it), or the Klein bottle's index-2 inclusion
// b -> d^2, c -> e.
inline Pi1Report torus_gluing_pi1(const GluingMatrix& m,
                                  const SideDescriptor& side_minus,
                                  TorusSublattice choice = TorusSublattice::FirstSquared,
                                  EnumLimit limit = {}) {
  if (side_minus.leaf != LeafType::Torus2)
    throw Error("torus_gluing_pi1: minus side must have torus leaf");
  if (m.det() != 1) throw Error("torus_gluing_pi1: matrix must have determinant 1");

  const Presentation leaf = leaf_presentation(LeafType::Torus2);
  const Presentation plus({"a"}, {});
  GroupHom to_plus(leaf, plus,
                   {Word::generator(0, m.alpha), Word::generator(0, m.beta)});

  Word d = Word::generator(0), e = Word::generator(1);
  std::optional<GroupHom> to_minus;
  switch (side_minus.base) {
    case BaseType::Circle:
      to_minus.emplace(leaf, Presentation({"d"}, {}),
                       std::vector<Word>{Word::generator(0), Word()});
      break;
    case BaseType::Torus2: {
      Presentation torus({"d", "e"}, {d * e * d.inverse() * e.inverse()});
      std::vector<Word> images;
      switch (choice) {
        case TorusSublattice::FirstSquared:
          images = {Word::generator(0, 2), e};
          break;
        case TorusSublattice::SecondSquared:
          images = {d, Word::generator(1, 2)};
          break;
        case TorusSublattice::Diagonal:
          images = {d * e, Word::generator(1, 2)};
          break;
      }
      to_minus.emplace(leaf, std::move(torus), std::move(images));
      break;
    }
    case BaseType::KleinBottle:
      to_minus.emplace(leaf, Presentation({"d", "e"}, {d * e * d.inverse() * e}),
                       std::vector<Word>{Word::generator(0, 2), e});
      break;
    default:
      throw Error("torus_gluing_pi1: minus base must be S1, T2 or K");
  }

  Pi1Report report;
  report.presentation = svk_pushout(leaf, *to_minus, to_plus);
  report.invariants = h1_invariants(report.presentation);

  if (side_minus.base == BaseType::KleinBottle) {
    if (m.beta == 0) {
      // alpha = +-1, the group degenerates to Z
      report.classification = Pi1Class::free_abelian(1);
      report.order = OrderInfo::infinite();
      report.abelian = true;
      return report;
    }
    if (m.alpha == 0) {
      // beta = +-1, the group degenerates to Z/2 * Z/2
      report.classification = Pi1Class::z2_free_z2();
      report.order = OrderInfo::infinite();
      report.abelian = false;
      return report;
    }
    auto cert = recognize_prism(report.presentation, m, limit);
    if (!cert) {
      report.classification = Pi1Class::other();
      report.order = OrderInfo::unknown();
      return report;
    }
    report.classification = Pi1Class::prism(cert->alpha, cert->beta);
    report.order = OrderInfo::finite(cert->order);
    report.certificate = cert->checks;
    if (!cert->valid)
      throw Error("torus_gluing_pi1: prism certificate failed verification");
    auto h1_order = report.invariants.order();
    report.abelian = h1_order && *h1_order == Int(cert->order);
    if (cert->alpha < 0) {
      // sign-flip coincidence, flagged when the cheap invariants agree
      Presentation mirror = prism_presentation_de(-cert->alpha, cert->beta);
      auto mirror_order = group_order(mirror, limit);
      if (mirror_order && *mirror_order == cert->order &&
          h1_invariants(mirror) == report.invariants)
        report.certificate.push_back(
            "note: Prism(" + cert->alpha.str() + "," + cert->beta.str() +
            ") matches Prism(" + Int(-cert->alpha).str() + "," +
            cert->beta.str() + ") in order and abelianization");
    }
    return report;
  }

  report.abelian = true;  // the group is generated by the commuting minus side
  const auto& factors = report.invariants.factors();
  if (report.invariants.free_rank() > 0) {
    report.order = OrderInfo::infinite();
    bool all_free = report.invariants.free_rank() == factors.size();
    report.classification = all_free
                                ? Pi1Class::free_abelian(factors.size())
                                : Pi1Class::other();
    return report;
  }

  auto order = group_order(report.presentation, limit);
  if (!order) {
    report.order = OrderInfo::unknown();
    report.classification = Pi1Class::other();
    return report;
  }
  report.order = OrderInfo::finite(*order);
  if (*order == 1)
    report.classification = Pi1Class::trivial();
  else if (factors.size() == 1)
    report.classification = Pi1Class::cyclic(factors[0]);
  else
    report.classification = Pi1Class::other();
  return report;
}

enum class SphereGluingManifold { S3, RP3, RP3ConnSumRP3 };

inline const char* manifold_name(SphereGluingManifold m) {
  switch (m) {
    case SphereGluingManifold::S3: return "S^3";
    case SphereGluingManifold::RP3: return "RP^3";
    case SphereGluingManifold::RP3ConnSumRP3: return "RP^3 # RP^3";
  }
  return "?";
}

// With a sphere leaf the gluing map is irrelevant and only three side pairs
// exist: two balls give S^3, one tautological side gives RP^3, two give
// RP^3 # RP^3.
inline SphereGluingManifold classify_sphere_leaf(const SideDescriptor& side_minus,
                                                 const SideDescriptor& side_plus) {
  if (side_minus.leaf != LeafType::Sphere2 || side_plus.leaf != LeafType::Sphere2)
    throw Error("classify_sphere_leaf: both sides must have sphere leaf");
  int rp2_sides = (side_minus.base == BaseType::RP2 ? 1 : 0) +
                  (side_plus.base == BaseType::RP2 ? 1 : 0);
  switch (rp2_sides) {
    case 0: return SphereGluingManifold::S3;
    case 1: return SphereGluingManifold::RP3;
    default: return SphereGluingManifold::RP3ConnSumRP3;
  }
}

}  // namespace ddb
