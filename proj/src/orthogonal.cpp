#include "ftop/orthogonal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ftop/lifting.hpp"
#include "ftop/parallel.hpp"
#include "ftop/search.hpp"

namespace ftop {

namespace {

std::vector<PointMask> fibers(const CMap& f) {
  std::vector<PointMask> out(f.dst().size(), 0);
  for (std::size_t x = 0; x < f.src().size(); ++x) out[f(x)] |= bit(x);
  return out;
}

std::vector<std::uint8_t> to_vec(std::span<const std::uint8_t> a) { return {a.begin(), a.end()}; }

}  // namespace

void validate_word(const std::string& word, bool allow_empty) {
  if (word.empty() && !allow_empty) throw std::invalid_argument("orthogonal word must be nonempty");
  for (char c : word) {
    if (c != 'l' && c != 'r') throw std::invalid_argument("orthogonal word may only contain 'l' and 'r'");
  }
}

const char* to_string(Approximation a) {
  switch (a) {
    case Approximation::Exact:
      return "exact";
    case Approximation::Over:
      return "over";
    case Approximation::Loose:
      return "loose";
  }
  return "?";
}

Approximation approximation_after(std::size_t word_length) {
  if (word_length <= 1) return Approximation::Exact;
  if (word_length == 2) return Approximation::Over;
  return Approximation::Loose;
}

bool left_of_all(const CMap& i, const std::vector<CMap>& ps) {
  for (const auto& p : ps) {
    if (!has_lift(i, p)) return false;
  }
  return true;
}

bool right_of_all(const std::vector<CMap>& is, const CMap& p) {
  for (const auto& i : is) {
    if (!has_lift(i, p)) return false;
  }
  return true;
}

std::vector<CMap> select(const Universe& universe, const std::vector<std::size_t>& members) {
  std::vector<CMap> out;
  out.reserve(members.size());
  for (auto m : members) out.push_back(universe.maps()[m]);
  return out;
}

std::vector<std::size_t> orthogonal_step(const std::vector<CMap>& current, char letter, const Universe& universe,
                                         int jobs) {
  if (letter != 'l' && letter != 'r') throw std::invalid_argument("orthogonal letter must be 'l' or 'r'");
  const auto& maps = universe.maps();
  std::vector<char> keep(maps.size(), 0);
  parallel_for(maps.size(), jobs, [&](std::size_t m) {
    keep[m] = letter == 'l' ? left_of_all(maps[m], current) : right_of_all(current, maps[m]);
  });
  std::vector<std::size_t> members;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (keep[m]) members.push_back(m);
  }
  return members;
}

OrthogonalResult relative_orthogonal(const ClassQuery& query, const Universe& universe, int jobs) {
  validate_word(query.word);
  OrthogonalResult result;
  result.bound = universe.bound();
  result.word = query.word;
  result.approximation = approximation_after(query.word.size());
  std::vector<CMap> current = query.base;
  for (char letter : query.word) {
    result.levels.push_back(orthogonal_step(current, letter, universe, jobs));
    current = select(universe, result.levels.back());
  }
  result.members = result.levels.back();
  return result;
}

std::optional<RetractWitness> is_retract_of(const CMap& f, const CMap& g) {
  const Space& a = f.src();
  const Space& b = f.dst();
  const Space& c = g.src();
  const Space& d = g.dst();
  const auto fib_f = fibers(f);
  const auto fib_g = fibers(g);
  MonotoneSearch s_cod_search(b, d);
  MonotoneSearch r_cod_search(d, b);
  MonotoneSearch s_search(a, c);
  MonotoneSearch r_search(c, a);
  std::optional<RetractWitness> found;

  s_cod_search.run_all([&](std::span<const std::uint8_t> s_cod) {
    std::array<PointMask, kMaxPoints> cand_rc;
    cand_rc.fill(b.all());
    for (std::size_t y = 0; y < b.size(); ++y) cand_rc[s_cod[y]] &= bit(y);
    r_cod_search.run(std::span<const PointMask>(cand_rc.data(), d.size()), [&](std::span<const std::uint8_t> r_cod) {
      std::array<PointMask, kMaxPoints> cand_s{};
      for (std::size_t x = 0; x < a.size(); ++x) cand_s[x] = fib_g[s_cod[f(x)]];
      s_search.run(std::span<const PointMask>(cand_s.data(), a.size()), [&](std::span<const std::uint8_t> s) {
        std::array<PointMask, kMaxPoints> cand_r{};
        for (std::size_t z = 0; z < c.size(); ++z) cand_r[z] = fib_f[r_cod[g(z)]];
        for (std::size_t x = 0; x < a.size(); ++x) cand_r[s[x]] &= bit(x);
        auto r = r_search.first(std::span<const PointMask>(cand_r.data(), c.size()));
        if (!r) return true;
        found.emplace(RetractWitness{CMap(f.src_ptr(), g.src_ptr(), to_vec(s)), CMap(g.src_ptr(), f.src_ptr(), *r),
                                     CMap(f.dst_ptr(), g.dst_ptr(), to_vec(s_cod)),
                                     CMap(g.dst_ptr(), f.dst_ptr(), to_vec(r_cod))});
        return false;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

bool verify_retract(const CMap& f, const CMap& g, const RetractWitness& w) {
  for (std::size_t x = 0; x < f.src().size(); ++x) {
    if (w.r(w.s(x)) != x) return false;
    if (g(w.s(x)) != w.s_cod(f(x))) return false;
  }
  for (std::size_t y = 0; y < f.dst().size(); ++y) {
    if (w.r_cod(w.s_cod(y)) != y) return false;
  }
  for (std::size_t z = 0; z < g.src().size(); ++z) {
    if (f(w.r(z)) != w.r_cod(g(z))) return false;
  }
  return true;
}

FactorClasses factor_classes(const std::vector<CMap>& base, const std::string& word, const Universe& universe,
                             int jobs) {
  validate_word(word, true);
  const OrthogonalResult classes = relative_orthogonal({base, word + "lr"}, universe, jobs);
  FactorClasses out;
  out.word = word;
  out.prefix = word.empty() ? base : select(universe, classes.levels[word.size() - 1]);
  out.left_class = select(universe, classes.levels[word.size()]);
  out.right_class_size = classes.members.size();
  out.bound = universe.bound();
  return out;
}

FactorSearchResult factor_search(const CMap& f, const std::vector<CMap>& base, const std::string& word,
                                 const Universe& universe, int jobs) {
  if (static_cast<int>(std::max(f.src().size(), f.dst().size())) > universe.bound()) {
    throw CapacityError("map to factor exceeds the universe bound");
  }
  return factor_search(f, factor_classes(base, word, universe, jobs), universe, jobs);
}

FactorSearchResult factor_search(const CMap& f, const FactorClasses& classes, const Universe& universe, int jobs) {
  const std::string left_word = classes.word + "l";
  const std::string right_word = classes.word + "lr";
  const std::vector<CMap>& prefix = classes.prefix;
  const std::vector<CMap>& left_class = classes.left_class;

  FactorSearchResult result;
  result.bound = universe.bound();
  result.left_class_size = left_class.size();
  result.right_class_size = classes.right_class_size;

  auto try_pair = [&](const CMap& left, const CMap& right) {
    return left_of_all(left, prefix) && right_of_all(left_class, right);
  };

  const CMap trivial[2][2] = {{f, identity(f.dst_ptr())}, {identity(f.src_ptr()), f}};
  for (const auto& [left, right] : trivial) {
    ++result.candidates_tested;
    if (try_pair(left, right)) {
      result.found = Factorization{left, right, std::nullopt, left_word, right_word};
      return result;
    }
  }

  const auto& spaces = universe.spaces();
  std::vector<std::optional<Factorization>> per_space(spaces.size());
  std::vector<std::size_t> tested(spaces.size(), 0);
  parallel_for(spaces.size(), jobs, [&](std::size_t w) {
    const SpacePtr& mid = spaces[w];
    MonotoneSearch right_search(*mid, f.dst());
    MonotoneSearch(f.src(), *mid).run_all([&](std::span<const std::uint8_t> i) {
      CMap left(f.src_ptr(), mid, to_vec(i));
      std::optional<bool> left_ok;
      std::array<PointMask, kMaxPoints> cand;
      cand.fill(f.dst().all());
      for (std::size_t x = 0; x < f.src().size(); ++x) cand[i[x]] &= bit(f(x));
      right_search.run(std::span<const PointMask>(cand.data(), mid->size()), [&](std::span<const std::uint8_t> p) {
        ++tested[w];
        if (!left_ok) left_ok = left_of_all(left, prefix);
        if (!*left_ok) return false;
        CMap right(mid, f.dst_ptr(), to_vec(p));
        if (!right_of_all(left_class, right)) return true;
        per_space[w] = Factorization{left, right, w, left_word, right_word};
        return false;
      });
      return !per_space[w];
    });
  });
  for (std::size_t w = 0; w < spaces.size(); ++w) {
    result.candidates_tested += tested[w];
    if (per_space[w]) {
      result.found = per_space[w];
      break;
    }
  }
  return result;
}

}  // namespace ftop
