#include "pancake/compose.hpp"

#include <cstdlib>

namespace pancake {

namespace {

int shift_magnitude(int v, int by) { return v > 0 ? v + by : v - by; }

}  // namespace

SignedPerm compose_odd_checkpoint(const SignedPerm& a, const SignedPerm& b) {
  const int n1 = a.size();
  const int n2 = b.size();
  if (n1 % 2 == 0 || n2 % 2 == 0 || n1 < 3 || n2 < 3)
    throw Error(ErrorKind::ShapeMismatch, "odd splice needs two odd checkpoints");
  if (a.bottom() != 1 || b.bottom() != 1)
    throw Error(ErrorKind::ShapeMismatch, "checkpoint bottom must be 1");
  const int x = -b.top();
  if (x <= 1 || b.at(2) != -x - 1)
    throw Error(ErrorKind::ShapeMismatch, "top piece of the second checkpoint is not a clan (-x, -x-1)");

  std::vector<int> out;
  out.reserve(n1 + n2 - 3);
  for (int p = 1; p < n1; ++p) out.push_back(shift_magnitude(a.at(p), x - 2));
  for (int p = 3; p <= n2; ++p) {
    const int v = b.at(p);
    out.push_back(std::abs(v) >= x + 2 ? shift_magnitude(v, n1 - 3) : v);
  }
  return SignedPerm(std::move(out));
}

SignedPerm compose_even_checkpoint(const SignedPerm& a, const SignedPerm& b) {
  const int n1 = a.size();
  const int n2 = b.size();
  if (n1 % 2 == 1 || n2 % 2 == 1)
    throw Error(ErrorKind::ShapeMismatch, "even splice needs two even checkpoints");
  if (a.bottom() != 1 || b.bottom() != 1)
    throw Error(ErrorKind::ShapeMismatch, "checkpoint bottom must be 1");
  if (b.top() != -n2) throw Error(ErrorKind::ShapeMismatch, "second checkpoint top is not -n");

  std::vector<int> out;
  out.reserve(n1 + n2 - 2);
  for (int p = 1; p < n1; ++p) out.push_back(shift_magnitude(a.at(p), n2 - 2));
  for (int p = 2; p <= n2; ++p) out.push_back(b.at(p));
  return SignedPerm(std::move(out));
}

FlipSequence compose_odd(const FlipSequence& a, const FlipSequence& b) {
  return extract(compose_odd_checkpoint(checkpoint_stack(a), checkpoint_stack(b)));
}

FlipSequence compose_even(const FlipSequence& a, const FlipSequence& b) {
  return extract(compose_even_checkpoint(checkpoint_stack(a), checkpoint_stack(b)));
}

}  // namespace pancake
