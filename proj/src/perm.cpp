#include "pancake/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace pancake {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotFortuitousShape: return "NotFortuitousShape";
    case ErrorKind::ExtractionStuck: return "ExtractionStuck";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::DoesNotSort: return "DoesNotSort";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
  }
  return "Unknown";
}

bool is_signed_permutation(std::span<const int> image) {
  const auto n = image.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : image) {
    const auto m = static_cast<std::size_t>(std::abs(v));
    if (m == 0 || m > n || seen[m]) return false;
    seen[m] = true;
  }
  return true;
}

SignedPerm::SignedPerm(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty())
    throw Error(ErrorKind::InvalidArgument, "signed permutation must have n >= 1");
  if (!is_signed_permutation(image_))
    throw Error(ErrorKind::InvalidArgument,
                "magnitudes are not a permutation of 1..n");
}

SignedPerm unchecked_perm(std::vector<int> image) {
  return SignedPerm(std::move(image), SignedPerm::Unchecked{});
}

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return SignedPerm(std::move(v), Unchecked{});
}

SignedPerm SignedPerm::minus_identity(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = -(i + 1);
  return SignedPerm(std::move(v), Unchecked{});
}

SignedPerm SignedPerm::reversal(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorKind::InvalidArgument,
                "flip size " + std::to_string(k) + " outside 1.." + std::to_string(n));
  return flip(identity(n), k);
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

SignedPerm flip(const SignedPerm& stack, int k) {
  if (k < 1 || k > stack.size())
    throw Error(ErrorKind::InvalidArgument,
                "flip size " + std::to_string(k) + " outside 1.." +
                    std::to_string(stack.size()));
  std::vector<int> v = stack.image_;
  flip_prefix(v, k);
  return SignedPerm(std::move(v), SignedPerm::Unchecked{});
}

SignedPerm compose(const SignedPerm& p, const SignedPerm& q) {
  if (p.size() != q.size())
    throw Error(ErrorKind::SizeMismatch, "compose: sizes differ");
  std::vector<int> v(q.image_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(q.image_[i]);
  return SignedPerm(std::move(v), SignedPerm::Unchecked{});
}

SignedPerm invert(const SignedPerm& p) {
  std::vector<int> v(p.image_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int x = p.image_[i];
    const int arg = static_cast<int>(i) + 1;
    if (x > 0)
      v[x - 1] = arg;
    else
      v[-x - 1] = -arg;
  }
  return SignedPerm(std::move(v), SignedPerm::Unchecked{});
}

SignedPerm negate(const SignedPerm& p) {
  std::vector<int> v = p.image_;
  for (int& x : v) x = -x;
  return SignedPerm(std::move(v), SignedPerm::Unchecked{});
}

FlipSequence::FlipSequence(int n, std::vector<int> flips)
    : n_(n), flips_(std::move(flips)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "sequence needs n >= 1");
  for (int k : flips_)
    if (k < 1 || k > n_)
      throw Error(ErrorKind::InvalidArgument,
                  "flip " + std::to_string(k) + " outside 1.." + std::to_string(n_));
}

SignedPerm apply_sequence(SignedPerm stack, const FlipSequence& w) {
  if (stack.size() != w.n())
    throw Error(ErrorKind::SizeMismatch, "apply_sequence: stack and sequence sizes differ");
  std::vector<int> v(stack.image().begin(), stack.image().end());
  for (int k : w.flips()) flip_prefix(v, k);
  return unchecked_perm(std::move(v));
}

SignedPerm effect(const FlipSequence& w) {
  return apply_sequence(SignedPerm::identity(w.n()), w);
}

bool sorts(const FlipSequence& w) {
  if (w.n() < 1) return false;
  return apply_sequence(SignedPerm::minus_identity(w.n()), w).is_identity();
}

FlipSequence reverse_seq(const FlipSequence& w) {
  std::vector<int> f(w.flips().rbegin(), w.flips().rend());
  return FlipSequence(w.n(), std::move(f));
}

FlipSequence rotate_seq(const FlipSequence& w, std::size_t k) {
  if (w.empty() && k == 0) return w;
  if (k >= w.length())
    throw Error(ErrorKind::InvalidArgument, "rotation offset out of range");
  std::vector<int> f(w.flips().begin(), w.flips().end());
  std::rotate(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k), f.end());
  return FlipSequence(w.n(), std::move(f));
}

FlipSequence repeat_seq(const FlipSequence& w, int times) {
  std::vector<int> f;
  f.reserve(w.length() * static_cast<std::size_t>(std::max(times, 0)));
  for (int t = 0; t < times; ++t) f.insert(f.end(), w.flips().begin(), w.flips().end());
  return FlipSequence(w.n(), std::move(f));
}

}  // namespace pancake
