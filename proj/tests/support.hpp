#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cactus/words.hpp"

namespace cactus::test {

// Visits every word over J_n's generators of length <= max_length,
// shortest first.
inline void for_each_word(int n, std::size_t max_length,
                          const std::function<void(const Word&)>& visit) {
  const auto gens = all_generators(n);
  std::vector<Generator> letters;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      letters.clear();
      for (auto i : idx) letters.push_back(gens[i]);
      visit(Word(n, letters));
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == gens.size()) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
}

inline Word w3(std::initializer_list<std::pair<int, int>> letters) {
  return make_word(3, letters);
}

}  // namespace cactus::test
