#pragma once

// Splicing two fortuitous sequences through their checkpoints.

#include "pancake/canonical.hpp"
#include "pancake/perm.hpp"

namespace pancake {

/// Checkpoint of compose_odd(a, b): b's top clan (-x, -x-1) is replaced by
/// a's checkpoint without its bottom 1, magnitudes shifted by x-2. Throws
/// ShapeMismatch when b's top piece is not such a clan.
SignedPerm compose_odd_checkpoint(const SignedPerm& a, const SignedPerm& b);
/// Fortuitous for n1 + n2 - 3.
FlipSequence compose_odd(const FlipSequence& a, const FlipSequence& b);

/// Checkpoint of compose_even(a, b): b's top singleton -n2 is replaced by a's
/// checkpoint without its bottom 1, magnitudes shifted by n2-2.
SignedPerm compose_even_checkpoint(const SignedPerm& a, const SignedPerm& b);
/// Fortuitous for n1 + n2 - 2.
FlipSequence compose_even(const FlipSequence& a, const FlipSequence& b);

}  // namespace pancake
