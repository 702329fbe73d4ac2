#include "ftop/construct.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace ftop {

namespace {

std::string unique_name(std::string name, const std::unordered_set<std::string>& taken) {
  while (taken.count(name) != 0) name += '\'';
  return name;
}

// Class label of every point; validates that `classes` partitions x.
std::vector<std::size_t> labels_of(const Space& x, const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::size_t> label(x.size(), classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::domain_error("quotient class is empty");
    for (auto p : classes[c]) {
      if (p >= x.size()) throw std::domain_error("quotient class mentions an unknown point");
      if (label[p] != classes.size()) throw std::domain_error("point " + x.name(p) + " lies in two classes");
      label[p] = c;
    }
  }
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (label[p] == classes.size()) throw std::domain_error("point " + x.name(p) + " lies in no class");
  }
  return label;
}

// Reorders classes by their least member and sorts members.
std::vector<std::vector<std::size_t>> normalized(std::vector<std::vector<std::size_t>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

Quotient assemble(const SpacePtr& x, const std::vector<std::vector<std::size_t>>& classes,
                  const std::vector<std::size_t>& label, const std::vector<Arrow>& arrows) {
  std::vector<std::string> names;
  names.reserve(classes.size());
  for (const auto& c : classes) names.push_back(x->name(c.front()));
  auto space = share(Space(std::move(names), arrows));
  std::vector<std::uint8_t> assign(x->size());
  for (std::size_t p = 0; p < x->size(); ++p) assign[p] = static_cast<std::uint8_t>(label[p]);
  return Quotient{space, CMap(x, space, std::move(assign))};
}

}  // namespace

SpacePtr product(const Space& x, const Space& y) {
  std::vector<std::string> names;
  names.reserve(x.size() * y.size());
  std::unordered_set<std::string> seen;
  bool clash = false;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      names.push_back(x.name(a) + "_" + y.name(b));
      clash = clash || !seen.insert(names.back()).second;
    }
  }
  if (clash) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      names[k] = "p" + std::to_string(k / y.size()) + "_" + std::to_string(k % y.size());
    }
  }
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      for_each_point(x.point_closure(a), [&](std::size_t a2) {
        for_each_point(y.point_closure(b), [&](std::size_t b2) {
          arrows.emplace_back(a * y.size() + b, a2 * y.size() + b2);
        });
      });
    }
  }
  return share(Space(std::move(names), arrows));
}

SpacePtr coproduct(const Space& x, const Space& y) {
  std::vector<std::string> names = x.names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  taken.insert(y.names().begin(), y.names().end());
  for (const auto& nm : y.names()) {
    std::string fresh = std::find(x.names().begin(), x.names().end(), nm) == x.names().end()
                            ? nm
                            : unique_name(nm, taken);
    taken.insert(fresh);
    names.push_back(std::move(fresh));
  }
  std::vector<Arrow> arrows = x.relation();
  for (auto [a, b] : y.relation()) arrows.emplace_back(a + x.size(), b + x.size());
  return share(Space(std::move(names), arrows));
}

CMap product_map(const CMap& f, const CMap& g) {
  auto src = product(f.src(), g.src());
  auto dst = product(f.dst(), g.dst());
  const std::size_t ns = g.src().size();
  const std::size_t nd = g.dst().size();
  std::vector<std::uint8_t> assign(src->size());
  for (std::size_t a = 0; a < f.src().size(); ++a) {
    for (std::size_t b = 0; b < ns; ++b) {
      assign[a * ns + b] = static_cast<std::uint8_t>(f(a) * nd + g(b));
    }
  }
  return CMap(src, dst, std::move(assign));
}

Quotient quotient(const SpacePtr& x, const std::vector<std::vector<std::size_t>>& raw) {
  labels_of(*x, raw);
  const auto classes = normalized(raw);
  const auto label = labels_of(*x, classes);
  std::vector<Arrow> arrows;
  for (auto [a, b] : x->relation()) {
    if (label[a] != label[b]) arrows.emplace_back(label[a], label[b]);
  }
  return assemble(x, classes, label, arrows);
}

Quotient quotient_via_open_sets(const SpacePtr& x, const std::vector<std::vector<std::size_t>>& raw) {
  labels_of(*x, raw);
  const auto classes = normalized(raw);
  const auto label = labels_of(*x, classes);
  const std::size_t k = classes.size();
  if (k > 20) throw std::domain_error("quotient_via_open_sets supports at most 20 classes");
  std::vector<std::uint32_t> opens;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    PointMask pre = 0;
    for (std::size_t p = 0; p < x->size(); ++p) {
      if ((s >> label[p]) & 1U) pre |= bit(p);
    }
    if (is_open(*x, PointSet(pre))) opens.push_back(s);
  }
  // a -> b iff b is in the closure of a iff every open containing b contains a.
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      bool leads = true;
      for (auto u : opens) {
        if (((u >> b) & 1U) && !((u >> a) & 1U)) {
          leads = false;
          break;
        }
      }
      if (leads) arrows.emplace_back(a, b);
    }
  }
  return assemble(x, classes, label, arrows);
}

Cylinder cylinder(const CMap& p) {
  static const SpacePtr sierpinski = share(Space({"o", "c"}, std::vector<Arrow>{{0, 1}}));
  const Space& y = p.src();
  const Space& b = p.dst();
  auto glued = coproduct(*product(y, *sierpinski), b);
  // Points of y x S are (k, o) at 2k and (k, c) at 2k+1; the base follows.
  const std::size_t base_offset = 2 * y.size();
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < y.size(); ++k) classes.push_back({2 * k});
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::vector<std::size_t> cls{base_offset + j};
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (p(k) == j) cls.push_back(2 * k + 1);
    }
    classes.push_back(std::move(cls));
  }
  auto q = quotient(glued, classes);

  // Reorder as top copy first, then the base.
  std::vector<std::size_t> position(q.space->size());
  for (std::size_t k = 0; k < y.size(); ++k) position[q.projection(2 * k)] = k;
  for (std::size_t j = 0; j < b.size(); ++j) position[q.projection(base_offset + j)] = y.size() + j;
  std::vector<Arrow> arrows;
  for (auto [u, v] : q.space->relation()) arrows.emplace_back(position[u], position[v]);

  std::vector<std::string> names = y.names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  taken.insert(b.names().begin(), b.names().end());
  for (const auto& nm : b.names()) {
    std::string fresh = std::find(y.names().begin(), y.names().end(), nm) == y.names().end()
                            ? nm
                            : unique_name(nm, taken);
    taken.insert(fresh);
    names.push_back(std::move(fresh));
  }
  auto space = share(Space(std::move(names), arrows));

  Cylinder out{space, identity(space), {}, {}};
  std::vector<std::uint8_t> assign(space->size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    out.top.push_back(k);
    assign[k] = static_cast<std::uint8_t>(p(k));
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    out.base.push_back(y.size() + j);
    assign[y.size() + j] = static_cast<std::uint8_t>(j);
  }
  out.to_base = CMap(space, p.dst_ptr(), std::move(assign));
  return out;
}

SpacePtr lam(int k) {
  if (k < 1) throw std::domain_error("lam(k) needs k >= 1");
  if (2 * k + 1 > static_cast<int>(kMaxPoints)) throw std::domain_error("lam(k) too large");
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (int i = 0; i <= k; ++i) {
    names.push_back("t" + std::to_string(i));
    if (i < k) {
      names.push_back("o" + std::to_string(i));
      const std::size_t open = 2 * static_cast<std::size_t>(i) + 1;
      arrows.emplace_back(open, open - 1);
      arrows.emplace_back(open, open + 1);
    }
  }
  return share(Space(std::move(names), arrows));
}

CMap sub(int k) {
  if (k < 1) throw std::domain_error("sub(k) needs k >= 1");
  auto fine = lam(2 * k);
  auto coarse = lam(k);
  // Position q in the fine zigzag (0..4k) covers position q/2 of the coarse
  // one when q is a multiple of 4, and the open point 2*(q/4)+1 otherwise.
  std::vector<std::uint8_t> assign(fine->size());
  for (std::size_t q = 0; q < fine->size(); ++q) {
    assign[q] = static_cast<std::uint8_t>(q % 4 == 0 ? q / 2 : 2 * (q / 4) + 1);
  }
  return CMap(fine, coarse, std::move(assign));
}

}  // namespace ftop
