#pragma once

#include <cstddef>
#include <vector>

#include "ftop/space.hpp"

namespace ftop {

/// Componentwise preorder on pairs. Point (x, y) is named "x_y".
SpacePtr product(const Space& x, const Space& y);

/// Disjoint union with no cross relations. Right-hand names that clash with
/// left-hand ones get primes appended.
SpacePtr coproduct(const Space& x, const Space& y);

/// f x g : X x Y -> B x C
CMap product_map(const CMap& f, const CMap& g);

struct Quotient {
  SpacePtr space;
  CMap projection;
};

/// Quotient by a partition given as lists of point indices. A class is named
/// after its first member in point order; classes are ordered by their first
/// member. Throws std::domain_error if `classes` is not a partition.
Quotient quotient(const SpacePtr& x, const std::vector<std::vector<std::size_t>>& classes);

/// Same quotient, computed the slow way: enumerate the subsets of classes
/// with open preimage, then read the specialization preorder back off that
/// family. Limited to 20 classes.
Quotient quotient_via_open_sets(const SpacePtr& x, const std::vector<std::vector<std::size_t>>& classes);

struct Cylinder {
  SpacePtr space;
  /// Identity on the base copy, p on the top copy.
  CMap to_base;
  /// Indices of the copy of the domain inside `space` (the rest is the base).
  std::vector<std::size_t> top;
  std::vector<std::size_t> base;
};

/// Non-Hausdorff mapping cylinder of p : Y -> B, the pushout of
/// Y x {o->c} <- Y x {c} -> B. Top points keep Y's names, base points keep
/// B's names (primed on clashes).
Cylinder cylinder(const CMap& p);

/// The zigzag t0 <- o0 -> t1 <- o1 -> ... -> tk with k open points.
/// lam(1) is Lambda, lam(2) is M. Throws std::domain_error for k < 1.
SpacePtr lam(int k);

/// Subdivision lam(2k) -> lam(k): t_{2i} -> t_i, everything strictly inside
/// the i-th pair of subintervals goes to o_i.
CMap sub(int k);

}  // namespace ftop
