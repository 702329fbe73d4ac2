#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftop/space.hpp"

namespace ftop {

/// A commutative lifting problem
///
///        f
///     A ---> Y
///   i |      | g
///     v      v
///     X ---> B
///       phi
///
/// Construction checks endpoints and g.f == phi.i.
class Square {
 public:
  Square(CMap i, CMap g, CMap f, CMap phi);

  const CMap& i() const { return i_; }
  const CMap& g() const { return g_; }
  const CMap& f() const { return f_; }
  const CMap& phi() const { return phi_; }

 private:
  CMap i_;
  CMap g_;
  CMap f_;
  CMap phi_;
};

/// All squares from i to g, ordered by phi then f (both in search order).
std::vector<Square> squares(const CMap& i, const CMap& g);
std::size_t count_squares(const CMap& i, const CMap& g);

/// A diagonal h : X -> Y with h.i == f and g.h == phi, trying the least
/// candidate point first.
std::optional<CMap> fill(const Square& sq);

struct LiftCertificate {
  bool holds = false;
  /// Squares examined: all of them when the lifting holds.
  std::size_t squares = 0;
  /// Set iff !holds: the first square, in enumeration order, with no filler.
  std::optional<Square> counterexample;
  /// One filler per square in enumeration order (only when requested).
  std::vector<CMap> fillers;
  /// FNV-1a over the filler assignments in order.
  std::uint64_t digest = 0;
};

struct LiftOptions {
  bool keep_fillers = false;
};

/// Decides i ⧄ g: every square from i to g has a diagonal filler.
LiftCertificate lifts(const CMap& i, const CMap& g, LiftOptions options = {});

/// Same verdict as lifts(i, g).holds without building a certificate.
bool has_lift(const CMap& i, const CMap& g);

}  // namespace ftop
