#include "pancake/canonical.hpp"

#include <algorithm>

#include "pancake/potential.hpp"

namespace pancake {

std::string_view to_string(CheckpointKind kind) {
  switch (kind) {
    case CheckpointKind::TwoClanStack: return "TwoClanStack";
    case CheckpointKind::OddPatchwork: return "OddPatchwork";
    case CheckpointKind::EvenPatchwork: return "EvenPatchwork";
  }
  return "Unknown";
}

namespace {

// Pieces of two at positions (first, first+1) for first = start, start+2, ...
// up to position n-1, with no boundary between pieces. Returns false on any
// violation; sets all_clans when every piece is a clan.
bool two_pieces(const SignedPerm& s, int start, bool& all_clans) {
  const int n = s.size();
  all_clans = true;
  for (int p = start; p < n; p += 2) {
    const BoundaryKind inner = boundary_kind(s.at(p), s.at(p + 1));
    if (inner == BoundaryKind::Neither) return false;
    if (inner != BoundaryKind::AntiAdjacency) all_clans = false;
    if (p > 1 && boundary_kind(s.at(p - 1), s.at(p)) != BoundaryKind::Neither) return false;
  }
  return boundary_kind(s.at(n - 1), s.at(n)) == BoundaryKind::Neither;
}

}  // namespace

std::optional<CheckpointKind> checkpoint_kind(const SignedPerm& stack) {
  const int n = stack.size();
  if (n < 2 || stack.bottom() != 1) return std::nullopt;
  bool all_clans = false;
  if (n % 2 == 1) {
    if (!two_pieces(stack, 1, all_clans)) return std::nullopt;
    if (all_clans && stack.top() < 0 && stack.top() % 2 == 0) return CheckpointKind::TwoClanStack;
    return CheckpointKind::OddPatchwork;
  }
  if (stack.top() != -n) return std::nullopt;
  if (n == 2) return CheckpointKind::EvenPatchwork;
  if (!two_pieces(stack, 2, all_clans)) return std::nullopt;
  return CheckpointKind::EvenPatchwork;
}

Checkpoint make_checkpoint(SignedPerm stack) {
  const auto kind = checkpoint_kind(stack);
  if (!kind) throw Error(ErrorKind::NotFortuitousShape, "stack is not a patchwork of 2-pieces over 1");
  return Checkpoint{std::move(stack), *kind};
}

SignedPerm checkpoint_stack(const FlipSequence& seq) {
  const int n = seq.n();
  if (seq.empty() || seq[0] != n)
    throw Error(ErrorKind::NotFortuitousShape, "sequence does not start with flip n");
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = -(i + 1);
  flip_prefix(s, n);
  for (std::size_t i = 1; i < seq.length(); ++i) {
    if (seq[i] == n) return unchecked_perm(std::move(s));
    flip_prefix(s, seq[i]);
  }
  throw Error(ErrorKind::NotFortuitousShape, "sequence has a single flip n");
}

Checkpoint checkpoint_of(const FlipSequence& seq) { return make_checkpoint(checkpoint_stack(seq)); }

GreedyRun greedy_adjacency_sort(SignedPerm stack) {
  std::vector<int> s(stack.image().begin(), stack.image().end());
  const int n = static_cast<int>(s.size());
  // where[v + n] = 0-based position of value v
  std::vector<int> where(2 * n + 1, -1);
  for (int i = 0; i < n; ++i) where[s[i] + n] = i;
  GreedyRun run;
  for (;;) {
    const int want = 1 - s[0];
    if (want < -n || want > n || want == 0) break;
    const int j = where[want + n];
    if (j < 1) break;
    // flip the top j entries; 1-t sits at 0-based index j
    flip_prefix(s, j);
    for (int i = 0; i < j; ++i) {
      where[s[i] + n] = i;
      where[-s[i] + n] = -1;
    }
    run.flips.push_back(j);
  }
  run.final_stack = unchecked_perm(std::move(s));
  return run;
}

FlipSequence extract(const SignedPerm& stack) {
  const int n = stack.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "extraction needs n >= 2");
  const SignedPerm id = SignedPerm::identity(n);

  std::vector<int> seq{n};
  GreedyRun first = greedy_adjacency_sort(flip(negate(invert(stack)), n));
  if (first.final_stack != id)
    throw Error(ErrorKind::ExtractionStuck, "first phase stops before reaching the identity");
  seq.insert(seq.end(), first.flips.begin(), first.flips.end());

  SignedPerm cur = stack;
  const int later = n % 2 == 1 ? 2 : 1;
  for (int phase = 0; phase < later; ++phase) {
    seq.push_back(n);
    GreedyRun run = greedy_adjacency_sort(flip(cur, n));
    seq.insert(seq.end(), run.flips.begin(), run.flips.end());
    cur = std::move(run.final_stack);
  }
  if (cur != id) throw Error(ErrorKind::ExtractionStuck, "last phase stops before reaching the identity");
  if (static_cast<int>(seq.size()) != lower_bound(n))
    throw Error(ErrorKind::WrongLength, "extracted " + std::to_string(seq.size()) +
                                            " flips, bound is " + std::to_string(lower_bound(n)));
  FlipSequence out(n, std::move(seq));
  if (!sorts(out)) throw Error(ErrorKind::DoesNotSort, "extracted sequence does not sort -I");
  return out;
}

FlipSequence extract(const Checkpoint& cp) { return extract(cp.stack); }

Checkpoint mirror_checkpoint(const Checkpoint& cp) {
  const int n = cp.stack.size();
  const SignedPerm fn = SignedPerm::reversal(n, n);
  return make_checkpoint(compose(fn, compose(invert(cp.stack), fn)));
}

CrossCheck cross_check(const Checkpoint& cp) {
  const int n = cp.stack.size();
  const SignedPerm id = SignedPerm::identity(n);
  const SignedPerm fn = SignedPerm::reversal(n, n);
  const int later = n % 2 == 1 ? 2 : 1;
  CrossCheck cc;

  GreedyRun a = greedy_adjacency_sort(flip(negate(invert(cp.stack)), n));
  cc.s1 = a.flips;
  if (a.final_stack != id) cc.diagnostics.push_back("s1 run from -C^-1 does not reach I");

  GreedyRun b = greedy_adjacency_sort(negate(cp.stack));
  cc.s1_reversed = b.flips;
  if (b.final_stack != fn) cc.diagnostics.push_back("reversed s1 run from -C does not reach f_n");

  SignedPerm cur = cp.stack;
  for (int phase = 0; phase < later; ++phase) {
    GreedyRun r = greedy_adjacency_sort(flip(cur, n));
    cc.later.push_back(r.flips);
    cur = std::move(r.final_stack);
  }
  if (cur != id) cc.diagnostics.push_back("later phases from C do not reach I");

  cur = invert(cp.stack);
  for (int phase = 0; phase < later; ++phase) {
    if (phase > 0) cur = flip(cur, n);
    GreedyRun r = greedy_adjacency_sort(cur);
    cc.later_reversed.push_back(r.flips);
    cur = std::move(r.final_stack);
  }
  if (cur != fn) cc.diagnostics.push_back("reversed later phases from C^-1 do not reach f_n");

  auto reversed = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  if (reversed(cc.s1_reversed) != cc.s1) cc.diagnostics.push_back("s1 disagrees with reversed s1");
  for (int i = 0; i < later; ++i)
    if (reversed(cc.later_reversed[later - 1 - i]) != cc.later[i])
      cc.diagnostics.push_back("phase " + std::to_string(i + 2) + " disagrees with its reversal");
  return cc;
}

}  // namespace pancake
