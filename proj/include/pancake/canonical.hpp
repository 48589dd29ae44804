#pragma once

// Checkpoints and greedy extraction.
//
// The checkpoint of a sequence n s1 n s2 [n s3] is the stack reached from -I
// after n s1. Every flip after the checkpoint's phase separator creates an
// adjacency, and at most one flip can do so, so the checkpoint determines the
// whole sequence.

#include <optional>
#include <string>
#include <vector>

#include "pancake/perm.hpp"

namespace pancake {

enum class CheckpointKind { TwoClanStack, OddPatchwork, EvenPatchwork };

struct Checkpoint {
  SignedPerm stack;
  CheckpointKind kind;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Structural inspection only. TwoClanStack wins over OddPatchwork when both fit.
std::optional<CheckpointKind> checkpoint_kind(const SignedPerm& stack);
/// Throws NotFortuitousShape when the stack fits no kind.
Checkpoint make_checkpoint(SignedPerm stack);

/// Stack after the prefix of seq ending before its second flip n.
/// Throws NotFortuitousShape when seq does not start with n or has no second n.
SignedPerm checkpoint_stack(const FlipSequence& seq);
Checkpoint checkpoint_of(const FlipSequence& seq);

struct GreedyRun {
  std::vector<int> flips;
  SignedPerm final_stack;
};

/// With top t, flips so that 1-t lands directly under -t; stops when 1-t is
/// not found below the top (this covers t = 1 and t = -n).
GreedyRun greedy_adjacency_sort(SignedPerm stack);

/// Rebuilds n s1 n s2 [n s3] from a checkpoint stack (three phases for odd n,
/// two for even). Throws ExtractionStuck, WrongLength or DoesNotSort.
FlipSequence extract(const SignedPerm& stack);
FlipSequence extract(const Checkpoint& cp);

/// f_n ∘ C^-1 ∘ f_n, the checkpoint of n s~1 n s~3 n s~2 (odd) or n s~1 n s~2 (even).
Checkpoint mirror_checkpoint(const Checkpoint& cp);

/// The four greedy runs: s1 from -C^-1 (after flip n), s~1 from -C, the later
/// phases from C, and their reversals from C^-1. `diagnostics` lists every
/// disagreement; empty means all four agree.
struct CrossCheck {
  std::vector<int> s1;
  std::vector<int> s1_reversed;
  std::vector<std::vector<int>> later;
  std::vector<std::vector<int>> later_reversed;
  std::vector<std::string> diagnostics;

  bool consistent() const { return diagnostics.empty(); }
};

CrossCheck cross_check(const Checkpoint& cp);

std::string_view to_string(CheckpointKind kind);

}  // namespace pancake
