#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ddb/word.hpp"

namespace ddb {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!((s[0] >= 'a' && s[0] <= 'z') || (s[0] >= 'A' && s[0] <= 'Z')))
    return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// A finite presentation: ordered generator names plus relator words.
// Relators are normalized on construction (free + cyclic reduction, trivial
// ones dropped), so equal presentations compare equal structurally.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators)
      : names_(std::move(generator_names)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
      if (!is_identifier(n))
        throw Error("presentation: invalid generator name '" + n + "'");
      if (!seen.insert(n).second)
        throw Error("presentation: duplicate generator name '" + n + "'");
    }
    for (auto& r : relators) {
      if (r.min_generator_count() > names_.size())
        throw Error("presentation: relator uses undeclared generator index");
      Word reduced = cyclic_reduce(r);
      if (!reduced.is_identity()) relators_.push_back(std::move(reduced));
    }
  }

  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t generator_count() const { return names_.size(); }
  const std::vector<Word>& relators() const { return relators_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// A map between presentations given by one image word per source generator.
// Whether the images actually preserve relators is not an invariant here;
// it can be certified afterwards by coset enumeration on finite targets.
struct GroupHom {
  Presentation source;
  Presentation target;
  std::vector<Word> images;

  GroupHom(Presentation src, Presentation tgt, std::vector<Word> imgs)
      : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != source.generator_count())
      throw Error("hom: need exactly one image per source generator");
    for (const auto& w : images) {
      if (w.min_generator_count() > target.generator_count())
        throw Error("hom: image word uses undeclared target generator");
    }
  }
};

inline GroupHom identity_hom(const Presentation& p) {
  std::vector<Word> imgs;
  imgs.reserve(p.generator_count());
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    imgs.push_back(Word::generator(g));
  return GroupHom(p, p, std::move(imgs));
}

// Substitutes every generator of w by its image and freely reduces.
inline Word apply_hom(const GroupHom& h, const Word& w) {
  if (w.min_generator_count() > h.source.generator_count())
    throw Error("apply_hom: word uses generator outside the source");
  Word out;
  for (const auto& s : w.syllables()) out = out * h.images[s.gen].pow(s.exp);
  return out;
}

// Removes generator `gen`, substituting `expr` (a word over the remaining
// generators, in the indexing of p) for it in every relator. Relators are
// re-reduced and trivial ones dropped. The caller is responsible for having
// a relator equivalent to gen * expr^-1, which is what makes the result
// isomorphic to the input.
inline Presentation tietze_eliminate(const Presentation& p, std::size_t gen,
                                     const Word& expr) {
  if (gen >= p.generator_count())
    throw Error("tietze_eliminate: no such generator");
  if (expr.uses(gen))
    throw Error("tietze_eliminate: substitute mentions the eliminated generator");
  if (expr.min_generator_count() > p.generator_count())
    throw Error("tietze_eliminate: substitute uses undeclared generator");

  auto reindex = [gen](const Word& w) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (const auto& s : w.syllables())
      out.push_back({s.gen > gen ? s.gen - 1 : s.gen, s.exp});
    return free_reduce(out);
  };

  std::vector<Word> relators;
  relators.reserve(p.relators().size());
  for (const auto& r : p.relators()) {
    Word substituted;
    for (const auto& s : r.syllables()) {
      substituted = substituted *
                    (s.gen == gen ? expr.pow(s.exp) : Word::generator(s.gen, s.exp));
    }
    relators.push_back(reindex(substituted));
  }

  std::vector<std::string> names = p.generator_names();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(gen));
  return Presentation(std::move(names), std::move(relators));
}

}  // namespace ddb
