#pragma once

// Exhaustive searches for fortuitous sequences.
//
// Every searcher has a parallel driver (frontier split, OpenMP over
// subtrees) and a single-threaded reference; both return the same
// lexicographically sorted result set.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pancake/perm.hpp"

namespace pancake {

enum class SearchMode { PalindromicOdd, Triple, Patchwork };

/// Symmetry flags, combinable with |.
enum Symmetry : unsigned {
  kNoSymmetry = 0,
  kDouble = 1,             // f^-1 = -f
  kPalCenterNminus1 = 2,   // f = -f_n o f o f_n
  kPalCenterN = 4,         // f = f_n o f^-1 o f_n
};

enum class Emit { First, All };

/// Pre-assignment f(arg) = value.
struct Hint {
  int arg;
  int value;
};

struct SearchConfig {
  int n = 0;
  SearchMode mode = SearchMode::Patchwork;
  unsigned symmetry = kNoSymmetry;
  std::vector<Hint> hints;
  Emit emit = Emit::All;
  double budget_seconds = 0;  // 0 = unlimited
  int jobs = 0;               // 0 = OpenMP default
};

struct SearchResult {
  std::vector<FlipSequence> sequences;  // extraction order, sorted, unique
  bool complete = true;                 // false when the budget ran out
  std::uint64_t nodes = 0;
};

SearchResult search(const SearchConfig& cfg);
SearchResult search_serial(const SearchConfig& cfg);

/// Shorthands for search() with the given mode.
SearchResult search_palindromic_odd(int n, Emit emit = Emit::All);
SearchResult search_triple(int n, unsigned symmetry = kNoSymmetry, Emit emit = Emit::All);
SearchResult search_patchwork(int n, unsigned symmetry = kNoSymmetry,
                              std::vector<Hint> hints = {}, Emit emit = Emit::All);

/// Named hint tables: "even-family", "double", "pal-n1", "pal-n",
/// "generalized-odd", "triple". Throws InvalidArgument for unknown names or unsuitable n.
std::vector<Hint> hint_preset(std::string_view name, int n);
std::vector<std::string_view> hint_preset_names();

/// Partial signed permutation over ±1..±n. Setting f(i) = j also records
/// f(-i) = -j and both inverse entries; undo() rolls back to a mark.
class PartialPerm {
 public:
  explicit PartialPerm(int n = 0);

  int n() const { return n_; }
  /// 0 when unknown.
  int f(int i) const { return fwd_[i + n_]; }
  int inv(int j) const { return inv_[j + n_]; }
  bool known(int i) const { return f(i) != 0; }
  /// false when i or j is already bound elsewhere.
  bool set(int i, int j);
  std::size_t mark() const { return journal_.size(); }
  void undo(std::size_t mark);
  int assigned() const { return static_cast<int>(journal_.size()); }
  bool complete() const { return assigned() == n_; }
  SignedPerm to_perm() const;

 private:
  int n_;
  std::vector<int> fwd_;
  std::vector<int> inv_;
  std::vector<int> journal_;  // positive arguments, in assignment order
};

/// d(i) = sgn(i) (-1)^i.
inline int sign_rule(int i) {
  const int parity = (i % 2 == 0) ? 1 : -1;
  return i > 0 ? parity : -parity;
}

}  // namespace pancake
