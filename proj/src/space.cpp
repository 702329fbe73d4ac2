#include "ftop/space.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace ftop {

namespace {

void check_subset(const Space& s, PointSet a) {
  if (!a.subset_of(PointSet(s.all()))) {
    throw std::domain_error("point set mentions a point outside the space");
  }
}

}  // namespace

Space::Space(std::vector<std::string> names, std::span<const Arrow> arrows)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > kMaxPoints) {
    throw std::invalid_argument("space has " + std::to_string(n) + " points; at most 64 supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& nm : names_) {
    if (!seen.insert(nm).second) {
      throw std::invalid_argument("duplicate point name '" + nm + "'");
    }
  }
  cl_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) cl_[p] = bit(p);
  for (const auto& [x, y] : arrows) {
    if (x >= n || y >= n) throw std::invalid_argument("arrow endpoint out of range");
    cl_[x] |= bit(y);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((cl_[i] >> k) & 1U) cl_[i] |= cl_[k];
    }
  }
  star_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for_each_point(cl_[x], [&](std::size_t y) { star_[y] |= bit(x); });
  }
}

Space Space::from_names(std::vector<std::string> names,
                        std::span<const std::pair<std::string, std::string>> arrows) {
  Space probe(names, {});
  std::vector<Arrow> idx;
  idx.reserve(arrows.size());
  for (const auto& [x, y] : arrows) idx.emplace_back(probe.index_of(x), probe.index_of(y));
  return Space(std::move(names), idx);
}

std::optional<std::size_t> Space::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Space::index_of(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw std::domain_error("unknown point '" + std::string(name) + "'");
}

std::vector<Arrow> Space::relation() const {
  std::vector<Arrow> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for_each_point(cl_[x], [&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

std::size_t Space::relation_size() const {
  std::size_t total = 0;
  for (auto m : cl_) total += popcount(m);
  return total;
}

PointSet PointSet::of(const Space& s, std::initializer_list<std::string_view> names) {
  PointMask m = 0;
  for (auto nm : names) m |= bit(s.index_of(nm));
  return PointSet(m);
}

std::vector<std::string> PointSet::names(const Space& s) const {
  std::vector<std::string> out;
  for_each_point(mask_, [&](std::size_t p) { out.push_back(s.name(p)); });
  return out;
}

PointSet closure(const Space& s, PointSet a) {
  check_subset(s, a);
  PointMask out = 0;
  for_each_point(a.mask(), [&](std::size_t x) { out |= s.point_closure(x); });
  return PointSet(out);
}

PointSet open_hull(const Space& s, PointSet a) {
  check_subset(s, a);
  PointMask out = 0;
  for_each_point(a.mask(), [&](std::size_t y) { out |= s.point_star(y); });
  return PointSet(out);
}

PointSet complement(const Space& s, PointSet a) {
  check_subset(s, a);
  return PointSet(s.all() & ~a.mask());
}

PointSet interior(const Space& s, PointSet a) {
  return complement(s, closure(s, complement(s, a)));
}

bool is_closed(const Space& s, PointSet a) { return closure(s, a) == a; }

bool is_open(const Space& s, PointSet a) { return is_closed(s, complement(s, a)); }

PointSet min_nbhd(const Space& s, std::size_t p) {
  if (p >= s.size()) throw std::domain_error("unknown point index " + std::to_string(p));
  return PointSet(s.point_star(p));
}

PointSet min_nbhd(const Space& s, std::string_view p) { return min_nbhd(s, s.index_of(p)); }

std::vector<PointSet> closed_sets(const Space& s) {
  // Closed sets are exactly the unions of point closures.
  std::set<PointMask> family{0};
  for (std::size_t p = 0; p < s.size(); ++p) {
    std::vector<PointMask> grown;
    for (PointMask c : family) grown.push_back(c | s.point_closure(p));
    family.insert(grown.begin(), grown.end());
  }
  std::vector<PointSet> out;
  out.reserve(family.size());
  for (PointMask m : family) out.emplace_back(m);
  return out;
}

std::vector<PointSet> open_sets(const Space& s) {
  std::vector<PointSet> out;
  for (PointSet c : closed_sets(s)) out.push_back(complement(s, c));
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) { return a.mask() < b.mask(); });
  return out;
}

bool is_monotone(const Space& src, const Space& dst, std::span<const std::uint8_t> assign) {
  if (assign.size() != src.size()) return false;
  for (std::size_t x = 0; x < src.size(); ++x) {
    if (assign[x] >= dst.size()) return false;
    const PointMask need = src.point_closure(x);
    PointMask image = 0;
    for_each_point(need, [&](std::size_t y) { image |= bit(assign[y]); });
    if ((image & ~dst.point_closure(assign[x])) != 0) return false;
  }
  return true;
}

CMap::CMap(SpacePtr src, SpacePtr dst, std::vector<std::uint8_t> assign)
    : src_(std::move(src)), dst_(std::move(dst)), assign_(std::move(assign)) {
  if (!src_ || !dst_) throw std::invalid_argument("map endpoints must be non-null");
  if (assign_.size() != src_->size()) throw std::invalid_argument("assignment is not total");
  for (auto y : assign_) {
    if (y >= dst_->size()) throw std::invalid_argument("assignment leaves the codomain");
  }
  for (std::size_t x = 0; x < src_->size(); ++x) {
    for_each_point(src_->point_closure(x), [&](std::size_t y) {
      if (!dst_->leads_to(assign_[x], assign_[y])) {
        throw std::domain_error("map is not monotone: " + src_->name(x) + "->" + src_->name(y) +
                                " but " + dst_->name(assign_[x]) + " does not lead to " +
                                dst_->name(assign_[y]));
      }
    });
  }
}

PointSet CMap::image(PointSet a) const {
  check_subset(*src_, a);
  PointMask out = 0;
  for_each_point(a.mask(), [&](std::size_t x) { out |= bit(assign_[x]); });
  return PointSet(out);
}

PointSet CMap::preimage(PointSet b) const {
  check_subset(*dst_, b);
  PointMask out = 0;
  for (std::size_t x = 0; x < assign_.size(); ++x) {
    if (b.contains(assign_[x])) out |= bit(x);
  }
  return PointSet(out);
}

PointSet CMap::fiber(std::size_t y) const { return preimage(PointSet(bit(y))); }

bool operator==(const CMap& a, const CMap& b) {
  if (a.assign_ != b.assign_) return false;
  const bool same_src = a.src_ == b.src_ || *a.src_ == *b.src_;
  const bool same_dst = a.dst_ == b.dst_ || *a.dst_ == *b.dst_;
  return same_src && same_dst;
}

CMap identity(const SpacePtr& x) {
  std::vector<std::uint8_t> assign(x->size());
  for (std::size_t p = 0; p < assign.size(); ++p) assign[p] = static_cast<std::uint8_t>(p);
  return CMap(x, x, std::move(assign));
}

CMap compose(const CMap& f, const CMap& g) {
  if (f.dst_ptr() != g.src_ptr() && f.dst() != g.src()) {
    throw std::domain_error("cannot compose: codomain of the first map is not the domain of the second");
  }
  std::vector<std::uint8_t> assign(f.src().size());
  for (std::size_t x = 0; x < assign.size(); ++x) assign[x] = static_cast<std::uint8_t>(g(f(x)));
  return CMap(f.src_ptr(), g.dst_ptr(), std::move(assign));
}

bool is_injective_assignment(const CMap& f) {
  PointMask seen = 0;
  for (auto y : f.assignment()) {
    if (seen & bit(y)) return false;
    seen |= bit(y);
  }
  return true;
}

bool is_isomorphism(const CMap& f) {
  if (f.src().size() != f.dst().size() || !is_injective_assignment(f)) return false;
  // Bijective; the inverse is monotone iff f reflects the relation.
  for (std::size_t x = 0; x < f.src().size(); ++x) {
    for (std::size_t y = 0; y < f.src().size(); ++y) {
      if (f.dst().leads_to(f(x), f(y)) && !f.src().leads_to(x, y)) return false;
    }
  }
  return true;
}

bool isomorphic(const Space& a, const Space& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.relation_size() != b.relation_size()) return false;
  std::vector<std::size_t> target(n);
  PointMask used = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used & bit(y)) continue;
      if (popcount(a.point_closure(x)) != popcount(b.point_closure(y)) ||
          popcount(a.point_star(x)) != popcount(b.point_star(y))) {
        continue;
      }
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = a.leads_to(x, z) == b.leads_to(y, target[z]) && a.leads_to(z, x) == b.leads_to(target[z], y);
      }
      if (!ok) continue;
      target[x] = y;
      used |= bit(y);
      if (place(x + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  };
  return place(0);
}

}  // namespace ftop
