#pragma once

// Signed permutations of {±1..±n} and prefix-flip sequences.
//
// A SignedPerm doubles as a stack listing: position 1 is the top, position n
// the bottom, and a negative value is a pancake lying burnt side up. As a map,
// S(i) is the value at position i and S(-i) = -S(i).
//
// Physical flipping acts on the right: flipping the top k pancakes of stack T
// yields T ∘ f_k, so applying w = (w1 .. wm) gives T ∘ f_w1 ∘ ... ∘ f_wm.

#include <cstddef>
#include <span>
#include <vector>

#include "pancake/error.hpp"

namespace pancake {

class SignedPerm {
 public:
  SignedPerm() = default;
  /// Validates that |image| is a permutation of 1..n.
  explicit SignedPerm(std::vector<int> image);

  static SignedPerm identity(int n);
  static SignedPerm minus_identity(int n);
  /// The permutation of flip f_k inside an n-stack: [-k .. -1 k+1 .. n].
  static SignedPerm reversal(int k, int n);

  int size() const { return static_cast<int>(image_.size()); }
  /// Value at signed argument i, 1 <= |i| <= n.
  int operator()(int i) const { return i > 0 ? image_[i - 1] : -image_[-i - 1]; }
  /// Value at 1-based stack position.
  int at(int position) const { return image_[position - 1]; }
  int top() const { return image_.front(); }
  int bottom() const { return image_.back(); }
  std::span<const int> image() const { return image_; }

  bool is_identity() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  struct Unchecked {};
  SignedPerm(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;

  friend SignedPerm flip(const SignedPerm&, int);
  friend SignedPerm compose(const SignedPerm&, const SignedPerm&);
  friend SignedPerm invert(const SignedPerm&);
  friend SignedPerm negate(const SignedPerm&);
  friend SignedPerm unchecked_perm(std::vector<int>);
};

/// Wraps an image already known to be a signed permutation (hot paths).
SignedPerm unchecked_perm(std::vector<int> image);

bool is_signed_permutation(std::span<const int> image);

/// Reverses and negates the top k entries in place. No range checking.
inline void flip_prefix(std::span<int> stack, int k) {
  int* lo = stack.data();
  int* hi = stack.data() + k - 1;
  for (; lo < hi; ++lo, --hi) {
    const int t = *lo;
    *lo = -*hi;
    *hi = -t;
  }
  if (lo == hi) *lo = -*lo;
}

SignedPerm flip(const SignedPerm& stack, int k);
/// (p ∘ q)(i) = p(q(i)).
SignedPerm compose(const SignedPerm& p, const SignedPerm& q);
SignedPerm invert(const SignedPerm& p);
SignedPerm negate(const SignedPerm& p);

class FlipSequence {
 public:
  FlipSequence() = default;
  /// Every flip must lie in 1..n.
  FlipSequence(int n, std::vector<int> flips);

  int n() const { return n_; }
  std::size_t length() const { return flips_.size(); }
  bool empty() const { return flips_.empty(); }
  std::span<const int> flips() const { return flips_; }
  int operator[](std::size_t i) const { return flips_[i]; }

  friend bool operator==(const FlipSequence&, const FlipSequence&) = default;
  friend auto operator<=>(const FlipSequence&, const FlipSequence&) = default;

 private:
  int n_ = 0;
  std::vector<int> flips_;
};

/// Folds flip over w in listed order; the first listed flip is applied first.
SignedPerm apply_sequence(SignedPerm stack, const FlipSequence& w);
/// The permutation E with apply_sequence(T, w) == compose(T, E) for all T.
SignedPerm effect(const FlipSequence& w);
/// apply_sequence(-I_n, w) == I_n.
bool sorts(const FlipSequence& w);

FlipSequence reverse_seq(const FlipSequence& w);
/// Moves the first k flips to the end; 0 <= k < |w| (k = 0 allowed on empty w).
FlipSequence rotate_seq(const FlipSequence& w, std::size_t k);
/// w repeated `times` times.
FlipSequence repeat_seq(const FlipSequence& w, int times);

}  // namespace pancake
