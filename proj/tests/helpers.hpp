#pragma once

#include <random>
#include <vector>

#include "ddb/ddb.hpp"

namespace tst {

inline ddb::Word gen(std::size_t g, long long e = 1) {
  return ddb::Word::generator(g, ddb::Int(e));
}

inline ddb::Word word(std::initializer_list<std::pair<std::size_t, long long>> sylls) {
  std::vector<ddb::Syllable> raw;
  for (const auto& [g, e] : sylls) raw.push_back({g, ddb::Int(e)});
  return ddb::free_reduce(raw);
}

inline ddb::InvariantFactors ifs(std::initializer_list<long long> fs) {
  std::vector<ddb::Int> v;
  for (long long f : fs) v.emplace_back(f);
  return ddb::InvariantFactors(std::move(v));
}

inline std::vector<ddb::Syllable> random_raw(std::mt19937& rng,
                                             std::size_t ngens,
                                             std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick_gen(0, ngens - 1);
  std::uniform_int_distribution<int> pick_exp(-3, 3);
  std::vector<ddb::Syllable> raw;
  for (std::size_t i = 0; i < len; ++i)
    raw.push_back({pick_gen(rng), ddb::Int(pick_exp(rng))});
  return raw;
}

inline ddb::Word random_word(std::mt19937& rng, std::size_t ngens,
                             std::size_t len) {
  return ddb::free_reduce(random_raw(rng, ngens, len));
}

}  // namespace tst
