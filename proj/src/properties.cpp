#include "ftop/properties.hpp"

#include <algorithm>

#include "ftop/search.hpp"

namespace ftop {

namespace {

std::vector<PointSet> opens_by_size(const Space& x) {
  auto opens = open_sets(x);
  std::stable_sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) { return a.count() < b.count(); });
  return opens;
}

bool has_disjoint_open_nbhds(const std::vector<PointSet>& opens, PointSet a, PointSet b) {
  for (PointSet u : opens) {
    if (!a.subset_of(u)) continue;
    for (PointSet v : opens) {
      if (b.subset_of(v) && (u & v).empty()) return true;
    }
  }
  return false;
}

}  // namespace

bool surjective(const CMap& f) { return f.image().mask() == f.dst().all(); }

bool injective(const CMap& f) { return is_injective_assignment(f); }

bool closed_map(const CMap& f) {
  for (PointSet c : closed_sets(f.src())) {
    if (!is_closed(f.dst(), f.image(c))) return false;
  }
  return true;
}

bool open_map(const CMap& f) {
  for (PointSet u : open_sets(f.src())) {
    if (!is_open(f.dst(), f.image(u))) return false;
  }
  return true;
}

bool dense_image(const CMap& f) { return closure(f.dst(), f.image()).mask() == f.dst().all(); }

bool induced_topology(const CMap& f) {
  for (std::size_t x = 0; x < f.src().size(); ++x) {
    for (std::size_t y = 0; y < f.src().size(); ++y) {
      if (f.src().leads_to(x, y) != f.dst().leads_to(f(x), f(y))) return false;
    }
  }
  return true;
}

bool subset_inclusion(const CMap& f) { return injective(f) && induced_topology(f); }

bool quotient_map(const CMap& f) {
  if (!surjective(f)) return false;
  const std::size_t n = f.dst().size();
  if (n > 24) throw std::domain_error("quotient_map check limited to 24 codomain points");
  for (PointMask u = 0; u <= f.dst().all(); ++u) {
    if (is_open(f.dst(), PointSet(u)) != is_open(f.src(), f.preimage(PointSet(u)))) return false;
    if (u == f.dst().all()) break;
  }
  return true;
}

bool admits_section(const CMap& f) {
  std::vector<PointMask> cand(f.dst().size());
  for (std::size_t y = 0; y < cand.size(); ++y) cand[y] = f.fiber(y).mask();
  return MonotoneSearch(f.dst(), f.src()).first(cand).has_value();
}

bool all_sections_continuous(const CMap& f) {
  if (!surjective(f)) return true;
  // A section picks one point per fiber; it is monotone for every choice iff
  // for each y -> y' every point over y leads to every point over y'.
  for (std::size_t y = 0; y < f.dst().size(); ++y) {
    for (std::size_t z = 0; z < f.dst().size(); ++z) {
      if (!f.dst().leads_to(y, z)) continue;
      const PointMask over_z = f.fiber(z).mask();
      bool all = true;
      for_each_point(f.fiber(y).mask(), [&](std::size_t a) { all = all && (over_z & ~f.src().point_closure(a)) == 0; });
      if (!all) return false;
    }
  }
  return true;
}

bool clopen_inclusion(const CMap& f) {
  const PointSet img = f.image();
  return subset_inclusion(f) && is_open(f.dst(), img) && is_closed(f.dst(), img);
}

bool meets_every_component(const CMap& f) {
  const Space& b = f.dst();
  const PointMask img = f.image().mask();
  PointMask seen = 0;
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (seen & bit(p)) continue;
    PointMask comp = bit(p);
    for (;;) {
      PointMask grown = comp;
      for_each_point(comp, [&](std::size_t q) { grown |= b.point_closure(q) | b.point_star(q); });
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    if ((comp & img) == 0) return false;
  }
  return true;
}

bool disjoint_closures(const CMap& f) {
  const auto closed = closed_sets(f.src());
  for (PointSet c : closed) {
    const PointSet cc = closure(f.dst(), f.image(c));
    for (PointSet d : closed) {
      if (!(c & d).empty()) continue;
      if (!(cc & closure(f.dst(), f.image(d))).empty()) return false;
    }
  }
  return true;
}

bool closed_pairs_extend(const CMap& f) {
  for (PointSet c : closed_sets(f.src())) {
    if (f.preimage(closure(f.dst(), f.image(c))) != c) return false;
  }
  return disjoint_closures(f);
}

bool normal(const Space& x) {
  const auto closed = closed_sets(x);
  const auto opens = opens_by_size(x);
  for (PointSet c : closed) {
    for (PointSet d : closed) {
      if (c.empty() || d.empty() || !(c & d).empty()) continue;
      if (!has_disjoint_open_nbhds(opens, c, d)) return false;
    }
  }
  return true;
}

SpacePtr subspace(const Space& x, PointSet points) {
  std::vector<std::string> names;
  std::vector<std::size_t> keep;
  for_each_point(points.mask(), [&](std::size_t p) {
    keep.push_back(p);
    names.push_back(x.name(p));
  });
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (x.leads_to(keep[a], keep[b])) arrows.emplace_back(a, b);
    }
  }
  return share(Space(std::move(names), arrows));
}

bool hereditarily_normal(const Space& x) {
  if (x.size() > 16) throw std::domain_error("hereditary normality check limited to 16 points");
  for (PointMask m = 0;; ++m) {
    if (!normal(*subspace(x, PointSet(m)))) return false;
    if (m == x.all()) break;
  }
  return true;
}

bool separated_sets_have_disjoint_nbhds(const Space& x) {
  if (x.size() > 16) throw std::domain_error("separation check limited to 16 points");
  // In a finite space the least open set around A is the union of the
  // minimal neighbourhoods of its points.
  for (PointMask a = 1; a <= x.all() && a != 0; ++a) {
    const PointMask rest = x.all() & ~a;
    for (PointMask b = rest; b != 0; b = (b - 1) & rest) {
      const bool separated = (closure(x, PointSet(a)).mask() & b) == 0 && (closure(x, PointSet(b)).mask() & a) == 0;
      if (!separated) continue;
      if ((open_hull(x, PointSet(a)) & open_hull(x, PointSet(b))).mask() != 0) return false;
    }
    if (a == x.all()) break;
  }
  return true;
}

bool t0(const Space& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if ((x.point_closure(p) & x.point_star(p)) != bit(p)) return false;
  }
  return true;
}

bool t1(const Space& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.point_closure(p) != bit(p)) return false;
  }
  return true;
}

bool connected(const Space& x) {
  for (PointSet c : closed_sets(x)) {
    if (!c.empty() && c.mask() != x.all() && is_open(x, c)) return false;
  }
  return true;
}

bool discrete(const Space& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.point_closure(p) != bit(p) || x.point_star(p) != bit(p)) return false;
  }
  return true;
}

SpaceFlags classify(const Space& x) {
  SpaceFlags out;
  out.t0 = t0(x);
  out.t1 = t1(x);
  out.normal = normal(x);
  out.hereditarily_normal = x.size() <= 16 && hereditarily_normal(x);
  out.connected = connected(x);
  out.discrete = discrete(x);
  return out;
}

PropertyRecord classify(const CMap& f) {
  PropertyRecord r;
  r.surjective = surjective(f);
  r.injective = injective(f);
  r.closed_map = closed_map(f);
  r.open_map = open_map(f);
  r.dense_image = dense_image(f);
  r.induced_topology = induced_topology(f);
  r.subset_inclusion = subset_inclusion(f);
  r.quotient_map = quotient_map(f);
  r.admits_section = admits_section(f);
  r.src = classify(f.src());
  r.dst = classify(f.dst());
  return r;
}

nlohmann::json to_json(const SpaceFlags& s) {
  return nlohmann::json{{"t0", s.t0},
                        {"t1", s.t1},
                        {"normal", s.normal},
                        {"hereditarily_normal", s.hereditarily_normal},
                        {"connected", s.connected},
                        {"discrete", s.discrete}};
}

nlohmann::json to_json(const PropertyRecord& r) {
  return nlohmann::json{{"surjective", r.surjective},
                        {"injective", r.injective},
                        {"closed_map", r.closed_map},
                        {"open_map", r.open_map},
                        {"dense_image", r.dense_image},
                        {"induced_topology", r.induced_topology},
                        {"subset_inclusion", r.subset_inclusion},
                        {"quotient_map", r.quotient_map},
                        {"admits_section", r.admits_section},
                        {"src", to_json(r.src)},
                        {"dst", to_json(r.dst)}};
}

}  // namespace ftop
