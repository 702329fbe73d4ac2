#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftop/space.hpp"

namespace ftop {

/// Requested bound exceeds what the enumerators support.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest bound for space catalogs (6 is slow but works) and for map
/// universes.
inline constexpr int kMaxSpaceBound = 6;
inline constexpr int kMaxMapBound = 5;

/// Bumped whenever the catalog order or cache format changes.
inline constexpr int kUniverseVersion = 1;

struct Canonical {
  /// Relabelled copy with points named a, b, c, ... in canonical order.
  Space space;
  /// to_canonical[p] is the canonical position of original point p.
  std::vector<std::uint8_t> to_canonical;
  /// Isomorphism invariant: equal codes iff homeomorphic (same size).
  std::uint64_t code = 0;
};

/// Canonical form of a space with at most 8 points: the relabelling that
/// maximizes the relation bit code, searched only among orderings sorted by
/// (closure size desc, star size asc). Throws CapacityError beyond 8 points.
Canonical canonicalize(const Space& s);

/// Every relation-preserving permutation (perm[p] = image of p).
std::vector<std::vector<std::uint8_t>> automorphisms(const Space& s);

/// One representative per homeomorphism class of spaces with at most n
/// points, in canonical form, ordered by size then by descending code.
/// Built by one-point extensions: adding a point p to a preorder means
/// choosing a closed set C = cl(p) - p and an open set O of points leading
/// to p with O x C inside the relation.
std::vector<SpacePtr> enumerate_spaces(int n, bool t0_only = false);

/// All spaces with at most n points and all maps between them, each up to
/// homeomorphism of domain and codomain independently.
class Universe {
 public:
  /// Throws CapacityError for n > kMaxMapBound.
  static Universe build(int n, int jobs = 0);
  /// Reads $FTOP_CACHE_DIR/universe-n<n>-v<version>.json when present,
  /// otherwise builds and (when the variable is set) writes it.
  static Universe load_or_build(int n, int jobs = 0);

  int bound() const { return bound_; }
  const std::vector<SpacePtr>& spaces() const { return spaces_; }
  const std::vector<CMap>& maps() const { return maps_; }

  /// Catalog index of the space homeomorphic to s, if it is in range.
  std::optional<std::size_t> space_index(const Space& s) const;
  std::span<const CMap> maps_between(std::size_t src, std::size_t dst) const;
  std::size_t src_index(std::size_t map) const { return map_ends_[map].first; }
  std::size_t dst_index(std::size_t map) const { return map_ends_[map].second; }

  /// The catalog representative of f (up to homeomorphisms of both ends).
  /// Throws std::out_of_range when f's spaces exceed the bound.
  CMap canonical_map(const CMap& f) const;
  std::optional<std::size_t> find_map(const CMap& f) const;

  void save(const std::filesystem::path& file) const;
  static std::optional<Universe> load(const std::filesystem::path& file, int n);

 private:
  Universe() = default;
  void index();

  int bound_ = 0;
  std::vector<SpacePtr> spaces_;
  std::vector<std::vector<std::vector<std::uint8_t>>> auts_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> by_code_;
  std::vector<CMap> maps_;
  std::vector<std::pair<std::size_t, std::size_t>> map_ends_;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> ranges_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

/// Least representative of the orbit of `assign` under automorphisms of
/// both ends: min over (a, b) of b . assign . a.
std::vector<std::uint8_t> orbit_min(std::span<const std::uint8_t> assign,
                                    const std::vector<std::vector<std::uint8_t>>& src_auts,
                                    const std::vector<std::vector<std::uint8_t>>& dst_auts);

}  // namespace ftop
