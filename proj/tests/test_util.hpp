#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "pancake/perm.hpp"
#include "pancake/text_format.hpp"

namespace pancake::test {

inline std::vector<SequenceEntry> corpus() {
  std::ifstream in(std::string(PANCAKE_TEST_DATA) + "/published_sequences.txt");
  return parse_sequence_file(in, "published_sequences.txt");
}

/// Fixed per-test seed, overridden by PANCAKE_TEST_SEED when set.
inline std::uint32_t seed(std::uint32_t fallback) {
  const char* env = std::getenv("PANCAKE_TEST_SEED");
  return env ? static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10)) : fallback;
}

inline SignedPerm random_perm(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  for (int& x : v)
    if (rng() & 1) x = -x;
  return SignedPerm(std::move(v));
}

inline FlipSequence S(const char* text) { return parse_sequence(text); }
inline SignedPerm P(const char* text) { return parse_stack(text); }

}  // namespace pancake::test
