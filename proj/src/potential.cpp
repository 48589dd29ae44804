#include "pancake/potential.hpp"

#include <array>
#include <string>

namespace pancake {

namespace {

template <class Val>
int pancake_value(const Val& val, int n, int p, bool with_plate) {
  const BoundaryKind left = p > 1 ? boundary_kind(val(p - 1), val(p)) : BoundaryKind::Neither;
  const BoundaryKind right = p < n              ? boundary_kind(val(p), val(p + 1))
                             : with_plate ? plate_boundary(val(n), n)
                                          : BoundaryKind::Neither;
  const int adj = (left == BoundaryKind::Adjacency) + (right == BoundaryKind::Adjacency);
  const int anti = (left == BoundaryKind::AntiAdjacency) + (right == BoundaryKind::AntiAdjacency);
  int v = 0;
  if (adj == 2) v = 3;
  else if (adj == 1) v = 1;
  else if (anti == 2) v = -3;
  else if (anti == 1) v = -1;
  return p == 1 ? 2 * v : v;
}

int plate_value(int bottom, int n) {
  if (bottom == n) return 1;
  if (bottom == 1) return -1;
  return 0;
}

void require_plate_size(int n, Plate plate) {
  if (plate == Plate::Included && n < 2)
    throw Error(ErrorKind::InvalidArgument, "potential with plate needs n >= 2");
}

}  // namespace

BoundaryKind boundary_kind(int upper, int lower) {
  if (lower == upper + 1) return BoundaryKind::Adjacency;
  if (lower == upper - 1) return BoundaryKind::AntiAdjacency;
  return BoundaryKind::Neither;
}

BoundaryKind plate_boundary(int bottom, int n) {
  if (bottom == n) return BoundaryKind::Adjacency;
  if (bottom == 1) return BoundaryKind::AntiAdjacency;
  return BoundaryKind::Neither;
}

Decomposition decompose(const SignedPerm& stack, Plate plate) {
  const int n = stack.size();
  Decomposition d;
  d.boundaries.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) d.boundaries.push_back(boundary_kind(stack.at(i), stack.at(i + 1)));
  if (plate == Plate::Included && n >= 1) d.plate = plate_boundary(stack.bottom(), n);

  int first = 1;
  while (first <= n) {
    int last = first;
    const BoundaryKind run = first < n ? d.boundaries[first - 1] : BoundaryKind::Neither;
    if (run != BoundaryKind::Neither)
      while (last < n && d.boundaries[last - 1] == run) ++last;
    Piece piece{PieceKind::Singleton, first, last, false};
    if (last == n && d.plate != BoundaryKind::Neither &&
        (run == BoundaryKind::Neither || run == d.plate)) {
      piece.on_plate = true;
      piece.kind = d.plate == BoundaryKind::Adjacency ? PieceKind::Block : PieceKind::Clan;
    }
    if (run == BoundaryKind::Adjacency) piece.kind = PieceKind::Block;
    if (run == BoundaryKind::AntiAdjacency) piece.kind = PieceKind::Clan;
    d.pieces.push_back(piece);
    first = last + 1;
  }
  return d;
}

PotentialBreakdown potential(const SignedPerm& stack, Plate plate) {
  const int n = stack.size();
  require_plate_size(n, plate);
  const bool with_plate = plate == Plate::Included;
  auto val = [&](int p) { return stack.at(p); };
  PotentialBreakdown b;
  b.per_pancake.resize(n);
  for (int p = 1; p <= n; ++p) {
    b.per_pancake[p - 1] = pancake_value(val, n, p, with_plate);
    b.total += b.per_pancake[p - 1];
  }
  if (with_plate) b.plate = plate_value(stack.bottom(), n);
  b.total += b.plate;
  return b;
}

int potential_total(std::span<const int> stack, Plate plate) {
  const int n = static_cast<int>(stack.size());
  require_plate_size(n, plate);
  const bool with_plate = plate == Plate::Included;
  auto val = [&](int p) { return stack[p - 1]; };
  int total = 0;
  for (int p = 1; p <= n; ++p) total += pancake_value(val, n, p, with_plate);
  if (with_plate) total += plate_value(stack[n - 1], n);
  return total;
}

int flip_delta(std::span<const int> stack, int k, Plate plate) {
  const int n = static_cast<int>(stack.size());
  if (k < 1 || k > n)
    throw Error(ErrorKind::InvalidArgument, "flip size " + std::to_string(k) + " out of range");
  require_plate_size(n, plate);
  const bool with_plate = plate == Plate::Included;
  auto before = [&](int p) { return stack[p - 1]; };
  auto after = [&](int p) { return p <= k ? -stack[k - p] : stack[p - 1]; };

  std::array<int, 3> pos{1, k, k + 1};
  int count = 3;
  if (k == 1) {
    pos = {1, 2, 0};
    count = 2;
  }
  int delta = 0;
  for (int i = 0; i < count; ++i) {
    const int p = pos[i];
    if (p > n) continue;
    delta += pancake_value(after, n, p, with_plate) - pancake_value(before, n, p, with_plate);
  }
  if (with_plate && k == n) delta += plate_value(after(n), n) - plate_value(before(n), n);
  return delta;
}

int flip_delta(const SignedPerm& stack, int k, Plate plate) {
  return flip_delta(stack.image(), k, plate);
}

int lower_bound(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "lower bound needs n >= 2");
  return (3 * n + 3) / 2;
}

}  // namespace pancake
