#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftop {

// One bit per point. Spaces are capped at 64 points, far above anything the
// lifting searches can handle exhaustively anyway.
using PointMask = std::uint64_t;
inline constexpr std::size_t kMaxPoints = 64;

inline constexpr PointMask bit(std::size_t p) { return PointMask{1} << p; }
inline constexpr PointMask low_bits(std::size_t n) {
  return n >= 64 ? ~PointMask{0} : (PointMask{1} << n) - 1;
}
inline std::size_t popcount(PointMask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline std::size_t lowest(PointMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Calls fn(p) for every set bit p of m, in increasing order.
template <typename Fn>
inline void for_each_point(PointMask m, Fn&& fn) {
  while (m != 0) {
    fn(lowest(m));
    m &= m - 1;
  }
}

using Arrow = std::pair<std::size_t, std::size_t>;

/// A finite topological space, stored as its specialization preorder.
///
/// An arrow x -> y means y lies in the closure of {x}; x is "more open" than
/// y. The relation is kept fully reflexive-transitive so every query is a
/// single bit test.
class Space {
 public:
  /// The empty space.
  Space() = default;

  /// Builds the reflexive-transitive closure of `arrows` over `names`.
  /// Throws std::invalid_argument on duplicate names or out-of-range arrows.
  Space(std::vector<std::string> names, std::span<const Arrow> arrows);

  /// Same, with arrows given by point name.
  static Space from_names(std::vector<std::string> names,
                          std::span<const std::pair<std::string, std::string>> arrows);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  PointMask all() const { return low_bits(size()); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t p) const { return names_.at(p); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::domain_error for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// True iff y is in the closure of {x}.
  bool leads_to(std::size_t x, std::size_t y) const { return (cl_[x] >> y) & 1U; }
  /// {y : x -> y}, the closure of the point x.
  PointMask point_closure(std::size_t x) const { return cl_[x]; }
  /// {x : x -> y}, the smallest open set containing y.
  PointMask point_star(std::size_t y) const { return star_[y]; }

  /// All pairs of the relation, row-major, reflexive pairs included.
  std::vector<Arrow> relation() const;
  std::size_t relation_size() const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.names_ == b.names_ && a.cl_ == b.cl_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<PointMask> cl_;
  std::vector<PointMask> star_;
};

using SpacePtr = std::shared_ptr<const Space>;

inline SpacePtr share(Space s) { return std::make_shared<const Space>(std::move(s)); }

/// A subset of the points of some space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(PointMask mask) : mask_(mask) {}

  /// Looks the names up in `s`; unknown names are a domain error.
  static PointSet of(const Space& s, std::initializer_list<std::string_view> names);

  constexpr PointMask mask() const { return mask_; }
  bool contains(std::size_t p) const { return (mask_ >> p) & 1U; }
  std::size_t count() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool subset_of(PointSet other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<std::string> names(const Space& s) const;

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.mask_ | b.mask_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.mask_ & b.mask_); }
  friend constexpr bool operator==(PointSet a, PointSet b) = default;

 private:
  PointMask mask_ = 0;
};

// Topology of a single space. Every function taking a PointSet throws
// std::domain_error when the set mentions a point outside the space.

PointSet closure(const Space& s, PointSet a);
PointSet interior(const Space& s, PointSet a);
PointSet complement(const Space& s, PointSet a);
bool is_closed(const Space& s, PointSet a);
bool is_open(const Space& s, PointSet a);
PointSet min_nbhd(const Space& s, std::size_t p);
PointSet min_nbhd(const Space& s, std::string_view p);
/// Union of the minimal neighbourhoods of the members of `a`.
PointSet open_hull(const Space& s, PointSet a);

/// Every closed (resp. open) subset, in increasing mask order.
std::vector<PointSet> closed_sets(const Space& s);
std::vector<PointSet> open_sets(const Space& s);

/// A continuous map of finite spaces, i.e. a monotone map of preorders.
class CMap {
 public:
  /// Throws std::invalid_argument if `assign` is not total into `dst`, and
  /// std::domain_error if it is not monotone.
  CMap(SpacePtr src, SpacePtr dst, std::vector<std::uint8_t> assign);

  const Space& src() const { return *src_; }
  const Space& dst() const { return *dst_; }
  const SpacePtr& src_ptr() const { return src_; }
  const SpacePtr& dst_ptr() const { return dst_; }

  std::size_t operator()(std::size_t x) const { return assign_[x]; }
  std::span<const std::uint8_t> assignment() const { return assign_; }

  PointSet image(PointSet a) const;
  PointSet image() const { return image(PointSet(src_->all())); }
  PointSet preimage(PointSet b) const;
  /// {x : f(x) = y}
  PointSet fiber(std::size_t y) const;

  friend bool operator==(const CMap& a, const CMap& b);

 private:
  SpacePtr src_;
  SpacePtr dst_;
  std::vector<std::uint8_t> assign_;
};

/// True iff the assignment preserves the relation.
bool is_monotone(const Space& src, const Space& dst, std::span<const std::uint8_t> assign);

CMap identity(const SpacePtr& x);
/// g after f. Throws std::domain_error unless f.dst() == g.src().
CMap compose(const CMap& f, const CMap& g);
bool is_injective_assignment(const CMap& f);
bool is_isomorphism(const CMap& f);

/// True iff the two spaces have the same relation up to some bijection.
bool isomorphic(const Space& a, const Space& b);

}  // namespace ftop
