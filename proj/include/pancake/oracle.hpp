#pragma once

// Exact distances in the burnt pancake graph for small n, by breadth-first
// search over all 2^n n! signed permutations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pancake/perm.hpp"
#include "pancake/potential.hpp"

namespace pancake {

/// rank(|image|) * 2^n + sign bits (bit i set when image[i] < 0), with the
/// Lehmer rank of the unsigned permutation.
using EncodedState = std::uint32_t;

inline constexpr int kOracleMaxN = 8;

/// 2^n n!. Throws UnsupportedN outside 1..kOracleMaxN.
std::uint32_t state_count(int n);
EncodedState encode(const SignedPerm& s);
SignedPerm decode(EncodedState code, int n);

class GodTable {
 public:
  GodTable(int n, std::vector<std::uint8_t> dist);

  int n() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(dist_.size()); }
  int operator[](EncodedState code) const { return dist_[code]; }
  int distance(const SignedPerm& s) const;
  /// Largest distance, the god number of the graph.
  int diameter() const;
  const std::vector<std::uint8_t>& raw() const { return dist_; }

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
};

/// Layered BFS from I_n; each layer scans all states in an OpenMP loop.
/// jobs = 0 uses the OpenMP default. Throws UnsupportedN for n outside 2..8.
GodTable god_table(int n, int jobs = 0);
/// Queue-based single-threaded reference.
GodTable god_table_serial(int n);

/// A shortest w with apply_sequence(s, w) = I_n.
FlipSequence minimal_sequence(const GodTable& table, const SignedPerm& s);

/// Plain BFS distance from `from` to `to`, independent of any table.
int bfs_distance(const SignedPerm& from, const SignedPerm& to);

struct IdentityReport {
  int n = 0;
  int g_minus_identity = 0;  // g(-I_n)
  int g_minus_fn = 0;        // g(-f_n)
  int bound = 0;             // floor((3n+3)/2)
  bool cohen_blum = false;   // g(-I_n) = 1 + g(-f_n)
  bool above_bound = false;  // g(-I_n) >= bound
  bool minimal_sorts = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

IdentityReport check_identities(const GodTable& table);

struct PotentialReport {
  std::uint64_t states = 0;
  std::uint64_t violations = 0;
  std::optional<SignedPerm> first_violation;
};

/// Checks 4 g(S) >= potential(I_n) - potential(S) for every state.
PotentialReport check_potential_bound(const GodTable& table, Plate plate);

}  // namespace pancake
