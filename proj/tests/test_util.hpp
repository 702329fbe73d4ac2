#pragma once

// Brute-force helpers shared by the tests. Nothing here calls the search or
// canonicalization code of the library, so the tests can use them as
// independent oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftop/lifting.hpp"
#include "ftop/space.hpp"

namespace ftop::test {

/// Every function {0..n-1} -> {0..m-1} in lexicographic order.
inline std::vector<std::vector<std::uint8_t>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::uint8_t>> out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint8_t> a(n, 0);
  for (;;) {
    out.push_back(a);
    std::size_t k = 0;
    while (k < n && ++a[k] == m) a[k++] = 0;
    if (k == n) break;
  }
  return out;
}

/// Every set partition of {0..n-1} as lists of blocks.
inline std::vector<std::vector<std::vector<std::size_t>>> partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> block(n, 0);
  // Restricted growth strings.
  auto emit = [&] {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t p = 0; p < n; ++p) {
      if (block[p] >= blocks.size()) blocks.resize(block[p] + 1);
      blocks[block[p]].push_back(p);
    }
    out.push_back(blocks);
  };
  auto rec = [&](auto&& self, std::size_t p, std::size_t used) -> void {
    if (p == n) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[p] = b;
      self(self, p + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline bool naive_monotone(const Space& x, const Space& y, const std::vector<std::uint8_t>& a) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (x.leads_to(p, q) && !y.leads_to(a[p], a[q])) return false;
    }
  }
  return true;
}

/// Bijection test by trying every permutation.
inline bool naive_isomorphic(const Space& a, const Space& b) {
  if (a.size() != b.size() || a.relation_size() != b.relation_size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t p = 0; p < a.size() && ok; ++p) {
      for (std::size_t q = 0; q < a.size() && ok; ++q) ok = a.leads_to(p, q) == b.leads_to(perm[p], perm[q]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Relation-preserving bijections a -> b.
inline std::vector<std::vector<std::size_t>> naive_isomorphisms(const Space& a, const Space& b) {
  std::vector<std::vector<std::size_t>> out;
  if (a.size() != b.size()) return out;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t p = 0; p < a.size() && ok; ++p) {
      for (std::size_t q = 0; q < a.size() && ok; ++q) ok = a.leads_to(p, q) == b.leads_to(perm[p], perm[q]);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// f and g are isomorphic as objects of the arrow category.
inline bool same_arrow(const CMap& f, const CMap& g) {
  for (const auto& alpha : naive_isomorphisms(f.src(), g.src())) {
    for (const auto& beta : naive_isomorphisms(f.dst(), g.dst())) {
      bool ok = true;
      for (std::size_t x = 0; x < f.src().size() && ok; ++x) ok = beta[f(x)] == g(alpha[x]);
      if (ok) return true;
    }
  }
  return false;
}

/// A filler of the square found by scanning all |Y|^|X| assignments.
inline std::optional<std::vector<std::uint8_t>> naive_fill(const Square& sq) {
  const Space& x = sq.i().dst();
  const Space& y = sq.g().src();
  for (const auto& h : all_functions(x.size(), y.size())) {
    bool ok = naive_monotone(x, y, h);
    for (std::size_t a = 0; a < sq.i().src().size() && ok; ++a) ok = h[sq.i()(a)] == sq.f()(a);
    for (std::size_t p = 0; p < x.size() && ok; ++p) ok = sq.g()(h[p]) == sq.phi()(p);
    if (ok) return h;
  }
  return std::nullopt;
}

/// A pseudo-random preorder on n points with names drawn from a small pool.
inline Space random_space(std::mt19937& rng, std::size_t n) {
  static const std::vector<std::string> pool = {"a", "b", "c", "o", "u", "v", "w", "x", "y", "z",
                                                "p1", "q_2", "r'", "s0", "T", "Z9"};
  std::vector<std::string> names = pool;
  std::shuffle(names.begin(), names.end(), rng);
  names.resize(n);
  std::bernoulli_distribution edge(0.3);
  std::vector<Arrow> arrows;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && edge(rng)) arrows.emplace_back(p, q);
    }
  }
  return Space(std::move(names), arrows);
}

}  // namespace ftop::test
