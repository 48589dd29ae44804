#include "pancake/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <unordered_map>

#include <omp.h>

namespace pancake {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

void require_n(int n, int lo) {
  if (n < lo || n > kOracleMaxN)
    throw Error(ErrorKind::UnsupportedN, "oracle supports " + std::to_string(lo) +
                                             " <= n <= " + std::to_string(kOracleMaxN));
}

// Encoding on a raw image; the hot loops avoid SignedPerm allocation.
EncodedState encode_raw(const int* s, int n) {
  std::uint32_t rank = 0;
  std::uint32_t used = 0;
  std::uint32_t signs = 0;
  for (int i = 0; i < n; ++i) {
    const int a = s[i] < 0 ? -s[i] : s[i];
    if (s[i] < 0) signs |= 1u << i;
    const int smaller_unused = (a - 1) - std::popcount(used & ((1u << (a - 1)) - 1));
    rank = rank * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller_unused);
    used |= 1u << (a - 1);
  }
  return (rank << n) | signs;
}

void decode_raw(EncodedState code, int n, int* s) {
  const std::uint32_t signs = code & ((1u << n) - 1);
  std::uint32_t rank = code >> n;
  int digits[kOracleMaxN];
  for (int i = n - 1; i >= 0; --i) {
    const std::uint32_t base = static_cast<std::uint32_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int k = digits[i];
    int a = 0;
    for (;; ++a)
      if (!(used & (1u << a)) && k-- == 0) break;
    used |= 1u << a;
    s[i] = (signs >> i) & 1u ? -(a + 1) : a + 1;
  }
}

}  // namespace

std::uint32_t state_count(int n) {
  require_n(n, 1);
  std::uint32_t c = 1u << n;
  for (int i = 2; i <= n; ++i) c *= static_cast<std::uint32_t>(i);
  return c;
}

EncodedState encode(const SignedPerm& s) {
  require_n(s.size(), 1);
  return encode_raw(s.image().data(), s.size());
}

SignedPerm decode(EncodedState code, int n) {
  if (code >= state_count(n)) throw Error(ErrorKind::InvalidArgument, "code out of range");
  std::vector<int> s(n);
  decode_raw(code, n, s.data());
  return unchecked_perm(std::move(s));
}

GodTable::GodTable(int n, std::vector<std::uint8_t> dist) : n_(n), dist_(std::move(dist)) {}

int GodTable::distance(const SignedPerm& s) const {
  if (s.size() != n_) throw Error(ErrorKind::SizeMismatch, "stack size differs from table n");
  return dist_[encode(s)];
}

int GodTable::diameter() const { return *std::max_element(dist_.begin(), dist_.end()); }

GodTable god_table(int n, int jobs) {
  require_n(n, 2);
  const std::int64_t total = state_count(n);
  std::vector<std::uint8_t> dist(static_cast<std::size_t>(total), kUnset);
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  dist[encode_raw(id.data(), n)] = 0;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

  for (std::uint8_t level = 0;; ++level) {
    std::int64_t added = 0;
#pragma omp parallel for schedule(static, 4096) num_threads(threads) reduction(+ : added)
    for (std::int64_t code = 0; code < total; ++code) {
      if (dist[code] != level) continue;
      int s[kOracleMaxN];
      decode_raw(static_cast<EncodedState>(code), n, s);
      for (int k = 1; k <= n; ++k) {
        flip_prefix(std::span<int>(s, n), k);
        std::atomic_ref<std::uint8_t> cell(dist[encode_raw(s, n)]);
        std::uint8_t expected = kUnset;
        if (cell.load(std::memory_order_relaxed) == kUnset &&
            cell.compare_exchange_strong(expected, static_cast<std::uint8_t>(level + 1),
                                         std::memory_order_relaxed))
          ++added;
        flip_prefix(std::span<int>(s, n), k);
      }
    }
    if (added == 0) break;
  }
  return GodTable(n, std::move(dist));
}

GodTable god_table_serial(int n) {
  require_n(n, 2);
  std::vector<std::uint8_t> dist(state_count(n), kUnset);
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  std::deque<EncodedState> queue{encode_raw(s.data(), n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    const EncodedState code = queue.front();
    queue.pop_front();
    decode_raw(code, n, s.data());
    for (int k = 1; k <= n; ++k) {
      flip_prefix(s, k);
      const EncodedState next = encode_raw(s.data(), n);
      if (dist[next] == kUnset) {
        dist[next] = static_cast<std::uint8_t>(dist[code] + 1);
        queue.push_back(next);
      }
      flip_prefix(s, k);
    }
  }
  return GodTable(n, std::move(dist));
}

FlipSequence minimal_sequence(const GodTable& table, const SignedPerm& start) {
  const int n = table.n();
  if (start.size() != n) throw Error(ErrorKind::SizeMismatch, "stack size differs from table n");
  std::vector<int> s(start.image().begin(), start.image().end());
  std::vector<int> flips;
  int d = table[encode_raw(s.data(), n)];
  while (d > 0) {
    int k = 1;
    for (; k <= n; ++k) {
      flip_prefix(s, k);
      if (table[encode_raw(s.data(), n)] == d - 1) break;
      flip_prefix(s, k);
    }
    flips.push_back(k);
    --d;
  }
  return FlipSequence(n, std::move(flips));
}

int bfs_distance(const SignedPerm& from, const SignedPerm& to) {
  const int n = from.size();
  if (to.size() != n) throw Error(ErrorKind::SizeMismatch, "stacks differ in size");
  require_n(n, 1);
  const EncodedState goal = encode(to);
  std::unordered_map<EncodedState, int> seen{{encode(from), 0}};
  std::deque<EncodedState> queue{encode(from)};
  std::vector<int> s(n);
  while (!queue.empty()) {
    const EncodedState code = queue.front();
    queue.pop_front();
    const int d = seen[code];
    if (code == goal) return d;
    decode_raw(code, n, s.data());
    for (int k = 1; k <= n; ++k) {
      flip_prefix(s, k);
      const EncodedState next = encode_raw(s.data(), n);
      if (seen.emplace(next, d + 1).second) queue.push_back(next);
      flip_prefix(s, k);
    }
  }
  return -1;
}

IdentityReport check_identities(const GodTable& table) {
  const int n = table.n();
  IdentityReport r;
  r.n = n;
  const SignedPerm minus_id = SignedPerm::minus_identity(n);
  r.g_minus_identity = table.distance(minus_id);
  r.g_minus_fn = table.distance(negate(SignedPerm::reversal(n, n)));
  r.bound = lower_bound(n);
  r.cohen_blum = r.g_minus_identity == 1 + r.g_minus_fn;
  r.above_bound = r.g_minus_identity >= r.bound;
  const FlipSequence w = minimal_sequence(table, minus_id);
  r.minimal_sorts = sorts(w) && static_cast<int>(w.length()) == r.g_minus_identity;
  if (!r.cohen_blum)
    r.failures.push_back("g(-I) = " + std::to_string(r.g_minus_identity) + " but g(-f_n) = " +
                         std::to_string(r.g_minus_fn));
  if (!r.above_bound)
    r.failures.push_back("g(-I) = " + std::to_string(r.g_minus_identity) + " below bound " +
                         std::to_string(r.bound));
  if (!r.minimal_sorts) r.failures.push_back("minimal sequence for -I is not a sorting of length g(-I)");
  return r;
}

PotentialReport check_potential_bound(const GodTable& table, Plate plate) {
  const int n = table.n();
  const int top = potential(SignedPerm::identity(n), plate).total;
  PotentialReport r;
  std::vector<int> s(n);
  for (EncodedState code = 0; code < table.size(); ++code) {
    decode_raw(code, n, s.data());
    const int p = potential_total(s, plate);
    ++r.states;
    if (4 * table[code] < top - p) {
      if (r.violations++ == 0) r.first_violation = unchecked_perm(s);
    }
  }
  return r;
}

}  // namespace pancake
