#pragma once

// Closed-form checkpoint families and the results table.
//
//   Odd3Mod4  n >= 15, n = 3 mod 4  [-8 -9 w -12 -13 -2 -3 1-n -n 5 4 7 6 -10 -11 1]
//   Odd1Mod4  n >= 25, n = 1 mod 4  [-8 -9 n-3 n-2 n-7 n-6 -12 -13 -2 -3 w 5 4 1-n -n w' 5-n 4-n 7 6 -10 -11 1]
//   Even      n >= 26, n even       [-n 11 10 -21 -20 -23 -22 -2 -3 -18 -19 w 13 12 -15 -14 8 9 5 4 w' n-2 n-1 7 6 -17 -16 1]

#include <optional>
#include <string>
#include <vector>

#include "pancake/canonical.hpp"
#include "pancake/classify.hpp"
#include "pancake/perm.hpp"

namespace pancake {

enum class PatternFamily { Odd3Mod4, Odd1Mod4, Even };

std::string_view to_string(PatternFamily f);
std::optional<PatternFamily> family_of(int n);

/// Throws UnsupportedN outside every family.
SignedPerm pattern_stack(int n);
Checkpoint pattern_checkpoint(int n);

/// extract(pattern_checkpoint(n)), in extraction order n s1 n s2 [n s3].
FlipSequence generate(int n);

/// The rotation used for published listings: n s3 n s1 n s2 for Odd3Mod4
/// (the palindromic form n u n-1 u~), n s2 n s1 for Even, unchanged for Odd1Mod4.
FlipSequence listing_order(const FlipSequence& extracted, PatternFamily family);
FlipSequence generate_listing(int n);

/// Sequences that seed the splice route besides generate(): a strict
/// palindromic 23 and the two searched even sequences for 26 and 28.
const FlipSequence& splice_seed(int n);
bool has_splice_seed(int n);

/// {15, 19, 23} and 25..n_max.
std::vector<int> table_sizes(int n_max);

struct TableRow {
  int n = 0;
  FlipSequence sequence;
  Certificate certificate;
  std::optional<FlipSequence> spliced;  // second route through compose
  std::optional<Certificate> spliced_certificate;
  std::string splice_note;  // route description or failure message

  bool verified() const;
};

struct TableOptions {
  bool splice = false;
  int jobs = 0;  // 0 = OpenMP default
};

/// Rows ordered by n. Generation fans out over n with OpenMP; splice chains
/// (one per residue class) run in parallel after that.
std::vector<TableRow> table(int n_max, const TableOptions& opts = {});
/// Single-threaded reference for table().
std::vector<TableRow> table_serial(int n_max, bool splice = false);

}  // namespace pancake
