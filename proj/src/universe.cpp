#include "ftop/universe.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>

#include "ftop/json_io.hpp"
#include "ftop/parallel.hpp"
#include "ftop/search.hpp"

namespace ftop {

namespace {

constexpr std::size_t kMaxCanonical = 8;

// Bits ordered so that the pairs among positions 0..m come before any pair
// involving m+1.
std::uint64_t relation_code(const Space& s, std::span<const std::size_t> at) {
  const std::size_t n = at.size();
  std::uint64_t code = 0;
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      code = (code << 1) | (s.leads_to(at[m], at[k]) ? 1U : 0U);
      code = (code << 1) | (s.leads_to(at[k], at[m]) ? 1U : 0U);
    }
  }
  return code;
}

// Points sorted into blocks of equal (closure size, star size); an
// isomorphism-invariant ordering of the blocks.
std::vector<std::vector<std::size_t>> signature_blocks(const Space& s) {
  std::vector<std::size_t> pts(s.size());
  std::iota(pts.begin(), pts.end(), 0);
  auto key = [&](std::size_t p) {
    return std::pair<long, long>(-static_cast<long>(popcount(s.point_closure(p))),
                                 static_cast<long>(popcount(s.point_star(p))));
  };
  std::stable_sort(pts.begin(), pts.end(), [&](auto a, auto b) { return key(a) < key(b); });
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k == 0 || key(pts[k]) != key(pts[k - 1])) blocks.emplace_back();
    blocks.back().push_back(pts[k]);
  }
  return blocks;
}

// Calls visit(order) for every ordering that keeps the blocks in sequence
// and permutes within each block.
template <typename Visit>
void for_each_block_order(std::vector<std::vector<std::size_t>> blocks, Visit&& visit) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::vector<std::size_t> order;
  for (;;) {
    order.clear();
    for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());
    visit(std::span<const std::size_t>(order));
    std::size_t k = blocks.size();
    while (k > 0 && !std::next_permutation(blocks[k - 1].begin(), blocks[k - 1].end())) --k;
    if (k == 0) return;
  }
}

std::string map_key(std::size_t s, std::size_t t, std::span<const std::uint8_t> assign) {
  std::string key;
  key.reserve(assign.size() + 4);
  key.push_back(static_cast<char>(s));
  key.push_back(static_cast<char>(t));
  for (auto v : assign) key.push_back(static_cast<char>(v));
  return key;
}

}  // namespace

Canonical canonicalize(const Space& s) {
  if (s.size() > kMaxCanonical) {
    throw CapacityError("canonical forms are limited to " + std::to_string(kMaxCanonical) + " points");
  }
  std::vector<std::size_t> best;
  std::uint64_t best_code = 0;
  for_each_block_order(signature_blocks(s), [&](std::span<const std::size_t> order) {
    const std::uint64_t code = relation_code(s, order);
    if (best.empty() || code > best_code) {
      best_code = code;
      best.assign(order.begin(), order.end());
    }
  });
  Canonical out;
  out.code = best_code;
  out.to_canonical.resize(s.size());
  for (std::size_t k = 0; k < best.size(); ++k) out.to_canonical[best[k]] = static_cast<std::uint8_t>(k);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < s.size(); ++k) names.emplace_back(1, static_cast<char>('a' + k));
  std::vector<Arrow> arrows;
  for (auto [x, y] : s.relation()) arrows.emplace_back(out.to_canonical[x], out.to_canonical[y]);
  out.space = Space(std::move(names), arrows);
  return out;
}

std::vector<std::vector<std::uint8_t>> automorphisms(const Space& s) {
  std::vector<std::vector<std::uint8_t>> out;
  const auto blocks = signature_blocks(s);
  std::vector<std::size_t> identity_order;
  for (const auto& b : blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    identity_order.insert(identity_order.end(), sorted.begin(), sorted.end());
  }
  for_each_block_order(blocks, [&](std::span<const std::size_t> order) {
    std::vector<std::uint8_t> perm(s.size());
    for (std::size_t k = 0; k < order.size(); ++k) perm[identity_order[k]] = static_cast<std::uint8_t>(order[k]);
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (s.leads_to(x, y) != s.leads_to(perm[x], perm[y])) return;
      }
    }
    out.push_back(std::move(perm));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpacePtr> enumerate_spaces(int n, bool t0_only) {
  if (n < 0) throw std::domain_error("bound must be non-negative");
  if (n > kMaxSpaceBound) {
    throw CapacityError("space enumeration supports at most " + std::to_string(kMaxSpaceBound) + " points");
  }
  std::vector<std::vector<Space>> by_size{{Space()}};
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Space, std::greater<>> found;
    for (const Space& base : by_size.back()) {
      const auto closed = closed_sets(base);
      const auto open = open_sets(base);
      const std::size_t p = base.size();
      std::vector<std::string> names = base.names();
      names.push_back("new");
      const auto rel = base.relation();
      for (PointSet c : closed) {
        for (PointSet o : open) {
          bool ok = true;
          for_each_point(o.mask(), [&](std::size_t x) { ok = ok && c.subset_of(PointSet(base.point_closure(x))); });
          if (!ok) continue;
          std::vector<Arrow> arrows = rel;
          for_each_point(c.mask(), [&](std::size_t y) { arrows.emplace_back(p, y); });
          for_each_point(o.mask(), [&](std::size_t x) { arrows.emplace_back(x, p); });
          Canonical canon = canonicalize(Space(names, arrows));
          found.emplace(canon.code, std::move(canon.space));
        }
      }
    }
    std::vector<Space> level;
    for (auto& [code, sp] : found) level.push_back(std::move(sp));
    by_size.push_back(std::move(level));
  }
  std::vector<SpacePtr> out;
  for (auto& level : by_size) {
    for (auto& sp : level) {
      bool t0 = true;
      for (std::size_t x = 0; x < sp.size() && t0; ++x) t0 = (sp.point_closure(x) & sp.point_star(x)) == bit(x);
      if (!t0_only || t0) out.push_back(share(std::move(sp)));
    }
  }
  return out;
}

std::vector<std::uint8_t> orbit_min(std::span<const std::uint8_t> assign,
                                    const std::vector<std::vector<std::uint8_t>>& src_auts,
                                    const std::vector<std::vector<std::uint8_t>>& dst_auts) {
  std::vector<std::uint8_t> best(assign.begin(), assign.end());
  std::vector<std::uint8_t> cand(assign.size());
  for (const auto& a : src_auts) {
    for (const auto& b : dst_auts) {
      for (std::size_t x = 0; x < assign.size(); ++x) cand[x] = b[assign[a[x]]];
      if (cand < best) best = cand;
    }
  }
  return best;
}

Universe Universe::build(int n, int jobs) {
  if (n < 0) throw std::domain_error("bound must be non-negative");
  if (n > kMaxMapBound) {
    throw CapacityError("map universes support at most " + std::to_string(kMaxMapBound) + " points");
  }
  Universe u;
  u.bound_ = n;
  u.spaces_ = enumerate_spaces(n);
  const std::size_t k = u.spaces_.size();
  u.auts_.resize(k);
  for (std::size_t s = 0; s < k; ++s) u.auts_[s] = automorphisms(*u.spaces_[s]);

  std::vector<std::vector<std::vector<std::uint8_t>>> per_pair(k * k);
  parallel_for(k * k, jobs, [&](std::size_t idx) {
    const std::size_t s = idx / k;
    const std::size_t t = idx % k;
    MonotoneSearch(*u.spaces_[s], *u.spaces_[t]).run_all([&](std::span<const std::uint8_t> a) {
      auto rep = orbit_min(a, u.auts_[s], u.auts_[t]);
      if (std::equal(rep.begin(), rep.end(), a.begin(), a.end())) per_pair[idx].push_back(std::move(rep));
      return true;
    });
  });
  for (std::size_t idx = 0; idx < k * k; ++idx) {
    const std::size_t s = idx / k;
    const std::size_t t = idx % k;
    for (auto& a : per_pair[idx]) {
      u.maps_.emplace_back(u.spaces_[s], u.spaces_[t], std::move(a));
      u.map_ends_.emplace_back(s, t);
    }
  }
  u.index();
  return u;
}

void Universe::index() {
  by_code_.clear();
  for (std::size_t s = 0; s < spaces_.size(); ++s) {
    by_code_.emplace(std::pair(spaces_[s]->size(), canonicalize(*spaces_[s]).code), s);
  }
  if (auts_.size() != spaces_.size()) {
    auts_.resize(spaces_.size());
    for (std::size_t s = 0; s < spaces_.size(); ++s) auts_[s] = automorphisms(*spaces_[s]);
  }
  ranges_.clear();
  lookup_.clear();
  for (std::size_t m = 0; m < maps_.size(); ++m) {
    auto [s, t] = map_ends_[m];
    auto [it, fresh] = ranges_.try_emplace({s, t}, m, m + 1);
    if (!fresh) it->second.second = m + 1;
    lookup_.emplace(map_key(s, t, maps_[m].assignment()), m);
  }
}

std::optional<std::size_t> Universe::space_index(const Space& s) const {
  if (static_cast<int>(s.size()) > bound_) return std::nullopt;
  auto it = by_code_.find({s.size(), canonicalize(s).code});
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

std::span<const CMap> Universe::maps_between(std::size_t src, std::size_t dst) const {
  auto it = ranges_.find({src, dst});
  if (it == ranges_.end()) return {};
  return std::span<const CMap>(maps_).subspan(it->second.first, it->second.second - it->second.first);
}

CMap Universe::canonical_map(const CMap& f) const {
  const auto s = space_index(f.src());
  const auto t = space_index(f.dst());
  if (!s || !t) throw std::out_of_range("map lies outside the universe bound");
  const Canonical cs = canonicalize(f.src());
  const Canonical ct = canonicalize(f.dst());
  std::vector<std::uint8_t> moved(f.src().size());
  for (std::size_t x = 0; x < moved.size(); ++x) moved[cs.to_canonical[x]] = ct.to_canonical[f(x)];
  return CMap(spaces_[*s], spaces_[*t], orbit_min(moved, auts_[*s], auts_[*t]));
}

std::optional<std::size_t> Universe::find_map(const CMap& f) const {
  const auto s = space_index(f.src());
  const auto t = space_index(f.dst());
  if (!s || !t) return std::nullopt;
  const CMap rep = canonical_map(f);
  auto it = lookup_.find(map_key(*s, *t, rep.assignment()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void Universe::save(const std::filesystem::path& file) const {
  nlohmann::json j;
  j["bound"] = bound_;
  j["version"] = kUniverseVersion;
  j["spaces"] = nlohmann::json::array();
  for (const auto& s : spaces_) j["spaces"].push_back(to_json(*s));
  j["maps"] = nlohmann::json::array();
  for (std::size_t m = 0; m < maps_.size(); ++m) {
    std::vector<int> assign(maps_[m].assignment().begin(), maps_[m].assignment().end());
    j["maps"].push_back({map_ends_[m].first, map_ends_[m].second, assign});
  }
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, file);
}

std::optional<Universe> Universe::load(const std::filesystem::path& file, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("bound").get<int>() != n || j.at("version").get<int>() != kUniverseVersion) return std::nullopt;
    Universe u;
    u.bound_ = n;
    for (const auto& s : j.at("spaces")) u.spaces_.push_back(share(space_from_json(s)));
    for (const auto& m : j.at("maps")) {
      const auto s = m.at(0).get<std::size_t>();
      const auto t = m.at(1).get<std::size_t>();
      auto assign = m.at(2).get<std::vector<std::uint8_t>>();
      u.maps_.emplace_back(u.spaces_.at(s), u.spaces_.at(t), std::move(assign));
      u.map_ends_.emplace_back(s, t);
    }
    u.index();
    return u;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Universe Universe::load_or_build(int n, int jobs) {
  const char* dir = std::getenv("FTOP_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return build(n, jobs);
  const auto file = std::filesystem::path(dir) /
                    ("universe-n" + std::to_string(n) + "-v" + std::to_string(kUniverseVersion) + ".json");
  if (auto cached = load(file, n)) return std::move(*cached);
  Universe u = build(n, jobs);
  try {
    u.save(file);
  } catch (const std::exception&) {
    // Unwritable cache directory: keep the freshly built universe.
  }
  return u;
}

}  // namespace ftop
