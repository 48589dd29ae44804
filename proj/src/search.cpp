#include "pancake/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <set>

#include <omp.h>

#include "pancake/canonical.hpp"
#include "pancake/classify.hpp"
#include "pancake/potential.hpp"

namespace pancake {

// ---------------------------------------------------------------- PartialPerm

PartialPerm::PartialPerm(int n) : n_(n), fwd_(2 * n + 1, 0), inv_(2 * n + 1, 0) {}

bool PartialPerm::set(int i, int j) {
  if (f(i) != 0 || inv(j) != 0) return f(i) == j;
  fwd_[i + n_] = j;
  fwd_[-i + n_] = -j;
  inv_[j + n_] = i;
  inv_[-j + n_] = -i;
  journal_.push_back(std::abs(i));
  return true;
}

void PartialPerm::undo(std::size_t mark) {
  while (journal_.size() > mark) {
    const int i = journal_.back();
    journal_.pop_back();
    const int j = fwd_[i + n_];
    fwd_[i + n_] = fwd_[-i + n_] = 0;
    inv_[j + n_] = inv_[-j + n_] = 0;
  }
}

SignedPerm PartialPerm::to_perm() const {
  std::vector<int> v(n_);
  for (int i = 1; i <= n_; ++i) v[i - 1] = f(i);
  return SignedPerm(std::move(v));
}

namespace {

using Clock = std::chrono::steady_clock;

int mirror_n(int x, int n) { return x > 0 ? x - n - 1 : x + n + 1; }

// ---------------------------------------------------------------- driver

struct Sink {
  bool first_only = false;
  std::vector<FlipSequence> found;
  std::atomic<bool>* expired = nullptr;
  std::atomic<long>* best = nullptr;  // lowest subtree index holding a hit (First)
  long index = -1;
  bool limited = false;
  Clock::time_point deadline{};
  std::uint64_t nodes = 0;

  // Counts a node; true means stop exploring.
  bool tick() {
    ++nodes;
    if (limited && (nodes & 4095) == 0 && Clock::now() > deadline) expired->store(true);
    if (expired->load(std::memory_order_relaxed)) return true;
    if (first_only && !found.empty()) return true;
    if (first_only && best && best->load(std::memory_order_relaxed) < index) return true;
    return false;
  }
};

template <class S>
struct Frontier {
  int split_depth = 0;
  std::vector<S> snaps;
  // Hits found above the split depth, tagged with the snapshot count at the
  // time, so DFS order can be rebuilt.
  std::vector<std::pair<std::size_t, FlipSequence>> early;
};

// Mixin for searchers: emission and snapshotting.
template <class S>
struct SearcherBase {
  Sink* sink = nullptr;
  Frontier<S>* frontier = nullptr;
  int resume_depth = 0;

  void emit(FlipSequence seq) {
    if (frontier)
      frontier->early.emplace_back(frontier->snaps.size(), std::move(seq));
    else
      sink->found.push_back(std::move(seq));
  }
  // True when the node was parked in the frontier instead of explored.
  bool park(int depth) {
    if (!frontier || depth != frontier->split_depth) return false;
    S copy = static_cast<S&>(*this);
    copy.frontier = nullptr;
    copy.resume_depth = depth;
    frontier->snaps.push_back(std::move(copy));
    return true;
  }
  bool emitted_enough() const {
    return sink->first_only && (!sink->found.empty() || (frontier && !frontier->early.empty()));
  }
};

std::vector<FlipSequence> canonical(std::vector<FlipSequence> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void init_sink(Sink& s, const SearchConfig& cfg, std::atomic<bool>& expired, Clock::time_point start) {
  s.first_only = cfg.emit == Emit::First;
  s.expired = &expired;
  s.limited = cfg.budget_seconds > 0;
  s.deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(cfg.budget_seconds));
}

template <class S>
SearchResult run_serial(S root, const SearchConfig& cfg) {
  std::atomic<bool> expired{false};
  Sink sink;
  init_sink(sink, cfg, expired, Clock::now());
  root.sink = &sink;
  root.frontier = nullptr;
  root.start();
  SearchResult r;
  r.nodes = sink.nodes;
  r.complete = !expired.load();
  if (sink.first_only && !sink.found.empty()) sink.found.resize(1);
  r.sequences = canonical(std::move(sink.found));
  return r;
}

template <class S>
SearchResult run_parallel(S root, const SearchConfig& cfg) {
  const int jobs = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
  const auto start = Clock::now();
  std::atomic<bool> expired{false};
  Sink top;
  init_sink(top, cfg, expired, start);

  // Deepen the split until there is enough work per thread.
  Frontier<S> fr;
  for (int depth = 1; depth <= 12; ++depth) {
    fr = Frontier<S>{};
    fr.split_depth = depth;
    top.found.clear();
    S r = root;
    r.sink = &top;
    r.frontier = &fr;
    r.start();
    if (fr.snaps.size() >= static_cast<std::size_t>(8 * jobs) || fr.snaps.empty()) break;
    if (cfg.emit == Emit::First && !fr.early.empty()) break;
  }

  const long count = static_cast<long>(fr.snaps.size());
  std::vector<std::vector<FlipSequence>> hits(fr.snaps.size());
  std::vector<std::uint64_t> nodes(fr.snaps.size(), 0);
  std::atomic<long> best{LONG_MAX};
  if (cfg.emit == Emit::First && !fr.early.empty()) best = static_cast<long>(fr.early.front().first) - 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < count; ++i) {
    if (cfg.emit == Emit::First && best.load() < i) continue;
    Sink sink;
    init_sink(sink, cfg, expired, start);
    sink.best = &best;
    sink.index = i;
    S s = fr.snaps[i];
    s.sink = &sink;
    s.frontier = nullptr;
    s.resume();
    nodes[i] = sink.nodes;
    if (!sink.found.empty()) {
      hits[i] = std::move(sink.found);
      if (cfg.emit == Emit::First) {
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }

  SearchResult r;
  r.complete = !expired.load();
  r.nodes = top.nodes;
  for (auto k : nodes) r.nodes += k;
  if (cfg.emit == Emit::First) {
    // DFS order: early hits tagged k come before snapshot k.
    std::size_t e = 0;
    for (std::size_t k = 0; k <= fr.snaps.size(); ++k) {
      if (e < fr.early.size() && fr.early[e].first == k) {
        r.sequences = {fr.early[e].second};
        return r;
      }
      if (k < fr.snaps.size() && !hits[k].empty()) {
        r.sequences = {hits[k].front()};
        return r;
      }
    }
    return r;
  }
  std::vector<FlipSequence> all;
  for (auto& [k, seq] : fr.early) all.push_back(seq);
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  r.sequences = canonical(std::move(all));
  return r;
}

bool has_class(const FlipSequence& seq, SeqClass a, SeqClass b) {
  const Certificate c = classify(seq);
  return c.has(a) && c.has(b);
}

// ---------------------------------------------------------------- palindromic odd

// s1 = w (n-1) w~ of length (n-1)/2; each flip breaks an anti-adjacency.
struct PalinSearcher : SearcherBase<PalinSearcher> {
  int n = 0;
  int m = 0;
  std::vector<int> s;  // current stack, 0-based
  std::vector<int> q;  // flips so far, starting with n

  explicit PalinSearcher(int n_) : n(n_), m((n_ + 1) / 2), s(n_), q{n_} {
    for (int i = 0; i < n; ++i) s[i] = -(i + 1);
    flip_prefix(s, n);
  }

  void start() { node(); }
  void resume() { node(); }

  void node() {
    const int k = static_cast<int>(q.size());
    if (sink->tick() || emitted_enough()) return;
    if (park(k)) return;
    if (k == m) {
      if (s[0] >= 0) return;
      try {
        FlipSequence seq = extract(unchecked_perm(s));
        if (has_class(seq, SeqClass::OddFortuitous, SeqClass::Sorting)) emit(std::move(seq));
      } catch (const Error&) {
      }
      return;
    }
    const int j = m - k;
    auto try_flip = [&](int i) {
      if (s[i] != s[i - 1] - 1) return;
      q.push_back(i);
      flip_prefix(s, i);
      node();
      flip_prefix(s, i);
      q.pop_back();
    };
    if (j <= k) {
      try_flip(j < k ? q[j] : n - 1);
    } else {
      for (int i = 2; i < n; i += 2) {
        try_flip(i);
        if (emitted_enough()) return;
      }
    }
  }
};

// ---------------------------------------------------------------- triple

struct TripleSearcher : SearcherBase<TripleSearcher> {
  int n = 0;
  unsigned symmetry = 0;
  PartialPerm pp;
  bool root_ok = true;
  std::vector<std::pair<int, int>> work;

  TripleSearcher(int n_, unsigned sym, const std::vector<Hint>& hints)
      : n(n_), symmetry(sym), pp(n_) {
    root_ok = propagate(n, 1);
    for (const Hint& h : hints) root_ok = root_ok && propagate(h.arg, h.value);
  }

  bool in_range(int x) const { return x != 0 && std::abs(x) <= n; }

  bool clan_boundary_ok(int a) const {
    // Piece boundaries sit below even positions.
    for (int p : {a - 1, a}) {
      if (p < 2 || p % 2 != 0 || p + 1 > n) continue;
      const int u = pp.f(p);
      const int l = pp.f(p + 1);
      if (u != 0 && l != 0 && l == u - 1) return false;
    }
    return true;
  }

  bool propagate(int i, int j) {
    work.clear();
    work.emplace_back(i, j);
    while (!work.empty()) {
      const auto [x, y] = work.back();
      work.pop_back();
      if (!in_range(x) || !in_range(y)) return false;
      if (pp.f(x) == y) continue;
      if (pp.f(x) != 0 || pp.inv(y) != 0) return false;
      if (sign_rule(y) != sign_rule(x)) return false;
      if (std::abs(y) == 1 && std::abs(x) != n) return false;
      if ((x == 1 && y > 0) || (x == -1 && y < 0)) return false;
      pp.set(x, y);
      if (!clan_boundary_ok(std::abs(x))) return false;
      if (std::abs(x) != n) work.emplace_back(x - sign_rule(x), y + sign_rule(y));
      if (const int z = pp.f(y); z != 0) work.emplace_back(z, x);
      if (const int z = pp.inv(x); z != 0) work.emplace_back(y, z);
      if (symmetry & kPalCenterN) work.emplace_back(mirror_n(y, n), mirror_n(x, n));
    }
    return true;
  }

  void start() {
    if (root_ok) node(0);
  }
  void resume() { node(resume_depth); }

  void leaf() {
    const SignedPerm f = pp.to_perm();
    for (int i = 1; i <= n; ++i)
      if (f(f(f(i))) != i) return;
    if (checkpoint_kind(f) != CheckpointKind::TwoClanStack) return;
    try {
      FlipSequence seq = extract(f);
      if (has_class(seq, SeqClass::OddFortuitous, SeqClass::Triple)) emit(std::move(seq));
    } catch (const Error&) {
    }
  }

  void branch(int x, int y, int depth) {
    const std::size_t m = pp.mark();
    if (propagate(x, y)) node(depth + 1);
    pp.undo(m);
  }

  void node(int depth) {
    if (sink->tick() || emitted_enough()) return;
    if (park(depth)) return;
    if (pp.complete()) {
      leaf();
      return;
    }
    int oi = 0;
    int oj = 0;
    for (int i = 1; i <= n && oi == 0; ++i) {
      const int j = pp.f(i);
      if (j != 0 && pp.f(j) == 0) {
        oi = i;
        oj = j;
      }
    }
    if (oi != 0) {
      for (int a = 1; a <= n; ++a) {
        if (pp.f(a) != 0 || pp.inv(a) != 0) continue;
        const int k = sign_rule(a) == sign_rule(oi) ? a : -a;
        const std::size_t m = pp.mark();
        if (propagate(oj, k) && propagate(k, oi)) node(depth + 1);
        pp.undo(m);
        if (emitted_enough()) return;
      }
      return;
    }
    int p = 1;
    while (pp.f(p) != 0) ++p;
    for (int a = 1; a <= n; ++a) {
      if (pp.f(a) != 0 || pp.inv(a) != 0) continue;
      branch(p, sign_rule(a) == sign_rule(p) ? a : -a, depth);
      if (emitted_enough()) return;
    }
  }
};

// ---------------------------------------------------------------- patchwork

// One of the four stacks whose greedy runs spell s1, s1~, the later phases
// and their reversals. The stack is X o g with X = f or f^-1; sym holds g.
struct Process {
  bool reads_inv = false;
  int stop_top = 0;   // greedy halts here and the run is complete
  int dead_top = 0;   // greedy halts here and the run has failed
  enum Force { None, Identity, Fn } force = None;
  std::vector<int> sym;     // 1-based
  std::vector<int> pos_of;  // |sym value| -> position
  int length = 0;
  bool done = false;

  void flip(int k) {
    flip_prefix(std::span<int>(sym.data() + 1, sym.size() - 1), k);
    for (int p = 1; p <= k; ++p) pos_of[std::abs(sym[p])] = p;
  }
};

struct PatchworkSearcher : SearcherBase<PatchworkSearcher> {
  int n = 0;
  int bound = 0;
  bool odd = false;
  unsigned symmetry = 0;
  PartialPerm pp;
  std::array<Process, 4> proc;  // P1f, P1b, P2f, P2b
  struct Undo {
    int proc;
    int flip;  // 0 = the run was marked done
  };
  std::vector<Undo> log;
  std::vector<std::pair<int, int>> work;
  bool root_ok = true;

  PatchworkSearcher(int n_, unsigned sym, const std::vector<Hint>& hints)
      : n(n_), bound(lower_bound(n_)), odd(n_ % 2 == 1), symmetry(sym), pp(n_) {
    auto init = [&](Process& pr, bool reads_inv, auto sym_of) {
      pr.reads_inv = reads_inv;
      pr.sym.assign(n + 1, 0);
      pr.pos_of.assign(n + 1, 0);
      for (int p = 1; p <= n; ++p) {
        pr.sym[p] = sym_of(p);
        pr.pos_of[std::abs(pr.sym[p])] = p;
      }
    };
    init(proc[0], true, [&](int p) { return n + 1 - p; });
    proc[0].stop_top = 1;
    proc[0].dead_top = -n;
    proc[0].force = Process::Identity;
    init(proc[1], false, [](int p) { return -p; });
    proc[1].stop_top = -n;
    proc[1].dead_top = 1;
    proc[1].force = Process::Fn;
    init(proc[2], false, [&](int p) { return p - n - 1; });
    init(proc[3], true, [](int p) { return p; });
    if (odd) {
      proc[2].stop_top = -n;
      proc[2].dead_top = 1;
      proc[3].stop_top = 1;
      proc[3].dead_top = -n;
    } else {
      proc[2].stop_top = 1;
      proc[2].dead_top = -n;
      proc[2].force = Process::Identity;
      proc[3].stop_top = -n;
      proc[3].dead_top = 1;
      proc[3].force = Process::Fn;
    }
    root_ok = propagate(n, 1);
    if (!odd) root_ok = root_ok && propagate(1, -n);
    for (const Hint& h : hints) root_ok = root_ok && propagate(h.arg, h.value);
  }

  // Position partner inside a 2-piece, 0 for singletons.
  int pos_partner(int a) const {
    if (a == n) return 0;
    if (odd) return a % 2 == 1 ? a + 1 : a - 1;
    if (a == 1) return 0;
    return a % 2 == 0 ? a + 1 : a - 1;
  }
  // Value partner {2m, 2m+1}, same sign; 0 for singleton values.
  int val_partner(int v) const {
    const int a = std::abs(v);
    if (a == 1 || (!odd && a == n)) return 0;
    const int b = a ^ 1;
    return v > 0 ? b : -b;
  }

  bool boundaries_ok(int a) const {
    for (int p : {a - 1, a}) {
      if (p < 1 || p >= n || pos_partner(p) == p + 1) continue;
      const int u = pp.f(p);
      const int l = pp.f(p + 1);
      if (u != 0 && l != 0 && (l == u + 1 || l == u - 1)) return false;
    }
    return true;
  }

  bool propagate(int i, int j) {
    work.clear();
    work.emplace_back(i, j);
    while (!work.empty()) {
      const auto [x, y] = work.back();
      work.pop_back();
      if (x == 0 || y == 0 || std::abs(x) > n || std::abs(y) > n) return false;
      if (pp.f(x) == y) continue;
      if (pp.f(x) != 0 || pp.inv(y) != 0) return false;
      const int px = pos_partner(std::abs(x));
      const int vy = val_partner(y);
      if ((px == 0) != (vy == 0)) return false;
      pp.set(x, y);
      if (!boundaries_ok(std::abs(x))) return false;
      if (px != 0) work.emplace_back(x > 0 ? px : -px, vy);
      if (symmetry & kDouble) work.emplace_back(y, -x);
      if (symmetry & kPalCenterNminus1) work.emplace_back(mirror_n(x, n), -mirror_n(y, n));
      if (symmetry & kPalCenterN) work.emplace_back(mirror_n(y, n), mirror_n(x, n));
    }
    return true;
  }

  int value_at(const Process& pr, int p) const {
    return pr.reads_inv ? pp.inv(pr.sym[p]) : pp.f(pr.sym[p]);
  }
  // Assignment making value_at(pr, p) == v.
  bool bind(const Process& pr, int p, int v) {
    return pr.reads_inv ? propagate(v, pr.sym[p]) : propagate(pr.sym[p], v);
  }
  bool value_free(const Process& pr, int p) const { return value_at(pr, p) == 0; }

  bool lengths_ok() const {
    const int l1 = std::max(proc[0].length, proc[1].length);
    if (proc[0].done && proc[1].length > proc[0].length) return false;
    if (proc[1].done && proc[0].length > proc[1].length) return false;
    if (odd) return 3 + l1 + proc[2].length + proc[3].length <= bound;
    if (proc[2].done && proc[3].length > proc[2].length) return false;
    if (proc[3].done && proc[2].length > proc[3].length) return false;
    return 2 + l1 + std::max(proc[2].length, proc[3].length) <= bound;
  }

  void do_flip(int i, int k) {
    proc[i].flip(k);
    ++proc[i].length;
    log.push_back({i, k});
  }

  void rollback(std::size_t pmark, std::size_t lmark) {
    while (log.size() > lmark) {
      const Undo u = log.back();
      log.pop_back();
      if (u.flip == 0) {
        proc[u.proc].done = false;
      } else {
        proc[u.proc].flip(u.flip);
        --proc[u.proc].length;
      }
    }
    pp.undo(pmark);
  }

  bool finish(int i) {
    Process& pr = proc[i];
    pr.done = true;
    log.push_back({i, 0});
    if (pr.force == Process::None) return true;
    for (int p = 1; p <= n; ++p) {
      const int target = pr.force == Process::Identity ? p : p - n - 1;
      if (!bind(pr, p, target)) return false;
    }
    return true;
  }

  enum class Step { Moved, Blocked, Dead };

  Step step(int i) {
    Process& pr = proc[i];
    const int t = value_at(pr, 1);
    if (t == 0) return Step::Blocked;
    if (t == pr.dead_top) return Step::Dead;
    if (t == pr.stop_top) return finish(i) ? Step::Moved : Step::Dead;
    const int want = 1 - t;
    const int arg = pr.reads_inv ? pp.f(want) : pp.inv(want);
    if (arg == 0) return Step::Blocked;
    const int j = pr.pos_of[std::abs(arg)];
    if (pr.sym[j] != arg) return Step::Dead;  // 1-t lies burnt side the wrong way
    do_flip(i, j - 1);
    return lengths_ok() ? Step::Moved : Step::Dead;
  }

  bool advance() {
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < 4; ++i) {
        while (!proc[i].done) {
          const Step s = step(i);
          if (s == Step::Dead) return false;
          if (s == Step::Blocked) break;
          moved = true;
        }
      }
    }
    return true;
  }

  void start() {
    if (root_ok) node(0);
  }
  void resume() { node(resume_depth); }

  void leaf() {
    const SignedPerm f = pp.to_perm();
    const auto kind = checkpoint_kind(f);
    if (!kind || (odd != (*kind != CheckpointKind::EvenPatchwork))) return;
    try {
      FlipSequence seq = extract(f);
      const SeqClass want = odd ? SeqClass::GeneralizedOddFortuitous : SeqClass::EvenFortuitous;
      if (has_class(seq, want, SeqClass::Sorting)) emit(std::move(seq));
    } catch (const Error&) {
    }
  }

  // Branch options as (process, position) targets or plain (arg, value) pairs.
  void node(int depth) {
    if (sink->tick() || emitted_enough()) return;
    const std::size_t pmark = pp.mark();
    const std::size_t lmark = log.size();
    if (!advance()) {
      rollback(pmark, lmark);
      return;
    }
    if (park(depth)) {
      rollback(pmark, lmark);
      return;
    }
    if (pp.complete()) {
      leaf();
      rollback(pmark, lmark);
      return;
    }

    // Prefer the run whose next adjacency needs the fewest unknown choices.
    int best = -1;
    int best_count = INT_MAX;
    for (int i = 0; i < 4; ++i) {
      const Process& pr = proc[i];
      if (pr.done || value_at(pr, 1) == 0) continue;
      int count = 0;
      for (int p = 2; p <= n; ++p) count += value_free(pr, p);
      if (count < best_count) {
        best = i;
        best_count = count;
      }
    }

    auto try_bind = [&](auto&& assign) {
      const std::size_t pm = pp.mark();
      const std::size_t lm = log.size();
      if (assign()) node(depth + 1);
      rollback(pm, lm);
    };

    if (best >= 0) {
      const Process& pr = proc[best];
      const int want = 1 - value_at(pr, 1);
      for (int p = 2; p <= n && !emitted_enough(); ++p)
        if (value_free(pr, p)) try_bind([&] { return bind(proc[best], p, want); });
    } else {
      int top_proc = -1;
      for (int i = 0; i < 4 && top_proc < 0; ++i)
        if (!proc[i].done) top_proc = i;
      if (top_proc >= 0) {
        const Process& pr = proc[top_proc];
        for (int a = 1; a <= n && !emitted_enough(); ++a)
          for (int v : {a, -a}) {
            const bool free = pr.reads_inv ? pp.f(v) == 0 : pp.inv(v) == 0;
            if (free) try_bind([&] { return bind(proc[top_proc], 1, v); });
          }
      } else {
        int x = 1;
        while (pp.f(x) != 0) ++x;
        for (int a = 1; a <= n && !emitted_enough(); ++a)
          for (int v : {a, -a})
            if (pp.inv(v) == 0) try_bind([&] { return propagate(x, v); });
      }
    }
    rollback(pmark, lmark);
  }
};

// ---------------------------------------------------------------- dispatch

void check_n(const SearchConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 255)
    throw Error(ErrorKind::InvalidArgument, "search supports 2 <= n <= 255");
  switch (cfg.mode) {
    case SearchMode::PalindromicOdd:
      if (cfg.n % 4 != 3)
        throw Error(ErrorKind::InvalidArgument, "palindromic odd search needs n = 3 mod 4");
      break;
    case SearchMode::Triple:
      if (cfg.n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "triple search needs odd n");
      break;
    case SearchMode::Patchwork:
      break;
  }
}

template <class Run>
SearchResult dispatch(const SearchConfig& cfg, Run run) {
  check_n(cfg);
  switch (cfg.mode) {
    case SearchMode::PalindromicOdd: return run(PalinSearcher(cfg.n));
    case SearchMode::Triple: return run(TripleSearcher(cfg.n, cfg.symmetry, cfg.hints));
    case SearchMode::Patchwork: return run(PatchworkSearcher(cfg.n, cfg.symmetry, cfg.hints));
  }
  return {};
}

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  return dispatch(cfg, [&](auto root) { return run_parallel(std::move(root), cfg); });
}

SearchResult search_serial(const SearchConfig& cfg) {
  return dispatch(cfg, [&](auto root) { return run_serial(std::move(root), cfg); });
}

SearchResult search_palindromic_odd(int n, Emit emit) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = SearchMode::PalindromicOdd;
  cfg.emit = emit;
  return search(cfg);
}

SearchResult search_triple(int n, unsigned symmetry, Emit emit) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = SearchMode::Triple;
  cfg.symmetry = symmetry;
  cfg.emit = emit;
  return search(cfg);
}

SearchResult search_patchwork(int n, unsigned symmetry, std::vector<Hint> hints, Emit emit) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = SearchMode::Patchwork;
  cfg.symmetry = symmetry;
  cfg.hints = std::move(hints);
  cfg.emit = emit;
  return search(cfg);
}

// ---------------------------------------------------------------- hint presets

std::vector<std::string_view> hint_preset_names() {
  return {"even-family", "double", "pal-n1", "pal-n", "generalized-odd", "triple"};
}

std::vector<Hint> hint_preset(std::string_view name, int n) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, std::string(name) + " preset needs " + what);
  };
  std::vector<Hint> h;
  if (name == "even-family") {
    need(n % 2 == 0 && n >= 26, "even n >= 26");
    h = {{2, 11}, {-4, 21}, {-6, 23}, {-8, 2}, {-10, 18}, {1 - n, 16}, {n - 3, 6}, {n - 5, n - 1}};
  } else if (name == "double") {
    need(n % 4 == 2 && n >= 30, "n = 2 mod 4, n >= 30");
    h = {{2, 8}, {n / 2 + 8, 4}, {6, n / 2}, {n / 2 + 1, n / 2 + 3}, {n / 2 + 5, n - 1}};
  } else if (name == "pal-n1") {
    need(n % 2 == 0 && n >= 30, "even n >= 30");
    h = {{2, n / 2 - 2}, {6, -2}, {10, 3 - n}, {n - 3, n != 34 ? 8 : 10}};
  } else if (name == "pal-n") {
    need(n % 2 == 0 && n >= 34, "even n >= 34");
    const int r = (n / 2) % 4;
    h = {{2, 7}, {4, 11}, {7 - n, 13}, {r + 7, -3}, {r + 9, 14}};
  } else if (name == "generalized-odd") {
    need(n % 2 == 1 && n >= 15, "odd n >= 15");
    h = {{-1, 8}, {1 - n, 11}, {n - 3, 6}};
    if (n % 4 == 3) {
      h.insert(h.end(), {{n - 5, 4}, {7 - n, n}, {9 - n, 3}, {11 - n, 13}});
      for (int i = 0; n + i > 15; i -= 4) {
        h.push_back({13 - n - i, 16 - i});
        h.push_back({15 - n - i, 14 - i});
      }
    } else {
      need(n >= 25, "n >= 25 when n = 1 mod 4");
      h.insert(h.end(), {{3, n - 3}, {5, n - 7}, {-7, 12}, {-9, 2}, {n / 2 + 1, 5},
                         {-n / 2 - 4, n}, {5 - n, n - 4}});
      for (int i = 0; i + 24 < n; i += 4) {
        h.push_back({n / 2 + i / 2 + 6, 14 + i});
        h.push_back({n / 2 - i / 2, 16 + i});
      }
    }
  } else if (name == "triple") {
    need(n % 2 == 1 && n >= 17, "odd n >= 17");
    const int m = n | 2;
    h = {{-1, 8}, {4, 12 - m}, {-5, 2}, {-8, n}, {9, 5}, {11, 7 - n}, {m - 15, n - 5}};
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown hint preset '" + std::string(name) + "'");
  }
  return h;
}

}  // namespace pancake
