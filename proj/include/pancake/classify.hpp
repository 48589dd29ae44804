#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pancake/canonical.hpp"
#include "pancake/perm.hpp"

namespace pancake {

enum class SeqClass {
  Sorting,
  OddFortuitous,
  GeneralizedOddFortuitous,
  EvenFortuitous,
  Palindromic,
  Triple,
  Double,
};

std::string_view to_string(SeqClass c);
std::optional<SeqClass> parse_seq_class(std::string_view name);

struct Certificate {
  int n = 0;
  bool sorts = false;
  int length = 0;
  int bound = 0;  // 0 when n < 2
  std::set<SeqClass> classes;
  std::vector<std::vector<int>> phases;  // flips between the separators n
  std::optional<Checkpoint> checkpoint;
  std::optional<int> central_flip;  // recorded for Palindromic
  std::vector<std::string> failures;

  bool has(SeqClass c) const { return classes.count(c) != 0; }
};

bool verify_sorts(const FlipSequence& seq);

/// Never throws on a well-formed FlipSequence; negative findings go to failures.
Certificate classify(const FlipSequence& seq);

/// c when seq = (n) w (c) w~ with |w| >= 1 and seq sorts -I.
std::optional<int> palindromic_center(const FlipSequence& seq);

/// The center c of a palindromic sorting sequence, and whether it is n-1
/// (odd n) or n (even n).
struct CentralFlip {
  int center;
  bool lemma_holds;
};
std::optional<CentralFlip> central_flip_check(const FlipSequence& seq);

}  // namespace pancake
