#pragma once

// Block/clan decomposition and the integer potential.
//
// A boundary between upper value a and lower value b is an adjacency when
// b = a+1 and an anti-adjacency when b = a-1. The plate under the stack acts
// as value n+1 for adjacencies and 0 for anti-adjacencies.

#include <vector>

#include "pancake/perm.hpp"

namespace pancake {

enum class BoundaryKind { Adjacency, AntiAdjacency, Neither };

BoundaryKind boundary_kind(int upper, int lower);
BoundaryKind plate_boundary(int bottom, int n);

enum class PieceKind { Block, Clan, Singleton };

struct Piece {
  PieceKind kind;
  int first;  // 1-based positions, inclusive
  int last;
  bool on_plate;  // the plate extends this piece
};

struct Decomposition {
  std::vector<BoundaryKind> boundaries;  // boundaries[i-1] sits between positions i and i+1
  BoundaryKind plate = BoundaryKind::Neither;
  std::vector<Piece> pieces;
};

enum class Plate { Excluded, Included };

Decomposition decompose(const SignedPerm& stack, Plate plate = Plate::Included);

struct PotentialBreakdown {
  std::vector<int> per_pancake;  // by position, top already doubled
  int plate = 0;
  int total = 0;
};

/// Throws InvalidArgument for n = 1 with the plate included.
PotentialBreakdown potential(const SignedPerm& stack, Plate plate);
int potential_total(std::span<const int> stack, Plate plate);

/// potential(flip(stack, k)) - potential(stack), computed from the O(1)
/// positions a flip can disturb.
int flip_delta(std::span<const int> stack, int k, Plate plate);
int flip_delta(const SignedPerm& stack, int k, Plate plate);

/// floor((3n+3)/2); n >= 2.
int lower_bound(int n);

}  // namespace pancake
