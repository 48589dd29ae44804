#pragma once

// Text forms:
//   stack     [v1 v2 ... vn]
//   sequence  [n=N] (f1 f2 ... fm)[^k]
// Commas between numbers are accepted and ignored. Without n=, n is the first
// flip. Sequence files hold one sequence per line, optionally followed by
// `: Class !Class ...` claims; `#` starts a comment.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pancake/classify.hpp"
#include "pancake/perm.hpp"

namespace pancake {

SignedPerm parse_stack(std::string_view text);
FlipSequence parse_sequence(std::string_view text);

std::string format_stack(const SignedPerm& s);
/// Canonical form: single spaces, n= only when n differs from the first flip.
std::string format_sequence(const FlipSequence& w);
std::string format_flips(std::span<const int> flips);

struct Claim {
  SeqClass cls;
  bool expected;  // false for !Class
};

struct SequenceEntry {
  FlipSequence seq;
  std::vector<Claim> claims;
  int line = 0;
};

/// One sequence line with optional claims. Throws ParseError.
SequenceEntry parse_sequence_line(std::string_view line);
std::string format_sequence_line(const FlipSequence& w, const std::vector<Claim>& claims);

/// Skips blank and comment lines; errors carry "<source>:<line>: ".
std::vector<SequenceEntry> parse_sequence_file(std::istream& in, std::string_view source);

}  // namespace pancake
