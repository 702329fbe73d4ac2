#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "ftop/construct.hpp"
#include "ftop/dsl.hpp"
#include "ftop/json_io.hpp"
#include "ftop/lifting.hpp"
#include "ftop/orthogonal.hpp"
#include "ftop/properties.hpp"
#include "ftop/registry.hpp"
#include "ftop/search.hpp"
#include "ftop/universe.hpp"
#include "test_util.hpp"

using namespace ftop;

namespace {

const Registry& reg() { return Registry::instance(); }

const Universe& universe(int n) {
  static std::map<int, Universe> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Universe::build(n, 1)).first;
  return it->second;
}

std::size_t count_monotone(const Space& x, const Space& y) {
  std::vector<PointMask> all(x.size(), y.all());
  return MonotoneSearch(x, y).count(all);
}

CMap from_empty(const SpacePtr& x) { return CMap(reg().empty(), x, {}); }

}  // namespace

TEST(Search, MonotoneCounts) {
  const auto s = reg().sierpinski();
  EXPECT_EQ(count_monotone(*s, *s), 3U);
  EXPECT_EQ(count_monotone(*reg().empty(), *reg().big_m()), 1U);
  EXPECT_EQ(count_monotone(*reg().point(), *reg().big_m()), 5U);
  EXPECT_EQ(count_monotone(*reg().point(), *reg().empty()), 0U);
}

TEST(Search, MonotoneCountMatchesNaiveFilter) {
  const auto spaces = enumerate_spaces(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      std::size_t naive = 0;
      for (const auto& a : test::all_functions(x->size(), y->size())) naive += test::naive_monotone(*x, *y, a);
      EXPECT_EQ(count_monotone(*x, *y), naive) << render(*x) << " " << render(*y);
    }
  }
}

TEST(Search, LinearExtensionRespectsOrder) {
  for (const auto& s : enumerate_spaces(5)) {
    const auto order = linear_extension(*s);
    std::vector<std::size_t> pos(s->size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (std::size_t p = 0; p < s->size(); ++p) {
      for (std::size_t q = 0; q < s->size(); ++q) {
        if (s->leads_to(p, q) && !s->leads_to(q, p)) EXPECT_LT(pos[p], pos[q]);
      }
    }
  }
}

TEST(Lifting, SquaresFromEmptyPickAPoint) {
  const CMap& g = reg().m_to_lambda();
  EXPECT_EQ(count_squares(reg().empty_to_point(), g), g.dst().size());
  const CMap id = identity(reg().lambda());
  EXPECT_EQ(count_squares(id, g), count_monotone(*reg().lambda(), *reg().big_m()));
}

TEST(Lifting, SquareCountMatchesDoubleLoop) {
  const CMap& i = reg().open_point_incl();
  const CMap& g = reg().m_to_lambda();
  std::size_t naive = 0;
  for (const auto& f : test::all_functions(i.src().size(), g.src().size())) {
    if (!test::naive_monotone(i.src(), g.src(), f)) continue;
    for (const auto& phi : test::all_functions(i.dst().size(), g.dst().size())) {
      if (!test::naive_monotone(i.dst(), g.dst(), phi)) continue;
      bool commutes = true;
      for (std::size_t a = 0; a < i.src().size(); ++a) commutes = commutes && g(f[a]) == phi[i(a)];
      naive += commutes;
    }
  }
  EXPECT_EQ(count_squares(i, g), naive);
  EXPECT_EQ(squares(i, g).size(), naive);
}

TEST(Lifting, SquaresMustCommute) {
  const CMap& i = reg().open_point_incl();
  const CMap& g = reg().m_to_lambda();
  const auto& m = g.src();
  const auto& l = g.dst();
  const auto u = static_cast<std::uint8_t>(m.index_of("u"));
  const auto w = static_cast<std::uint8_t>(l.index_of("w"));
  const auto a = static_cast<std::uint8_t>(l.index_of("a"));
  const CMap f(i.src_ptr(), g.src_ptr(), {u});
  EXPECT_NO_THROW(Square(i, g, f, CMap(i.dst_ptr(), g.dst_ptr(), {w, a})));
  EXPECT_THROW(Square(i, g, f, CMap(i.dst_ptr(), g.dst_ptr(), {a, a})), std::domain_error);
  EXPECT_THROW(Square(i, g, g, CMap(i.dst_ptr(), g.dst_ptr(), {w, a})), std::domain_error);
}

TEST(Lifting, FillExamples) {
  const CMap& g = reg().m_to_lambda();
  const auto lam = reg().lambda();
  const CMap empty_to_lam = from_empty(lam);
  const CMap none(reg().empty(), g.src_ptr(), {});
  EXPECT_FALSE(fill(Square(empty_to_lam, g, none, identity(lam))).has_value());

  const auto s = reg().sierpinski();
  const auto a = lam->index_of("a");
  const CMap to_closed(s, lam, {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(a)});
  const auto h = fill(Square(from_empty(s), g, CMap(reg().empty(), g.src_ptr(), {}), to_closed));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(compose(*h, g), to_closed);

  // Over an isomorphism the filler is f composed with the inverse.
  const CMap iso = identity(reg().big_m());
  for (const auto& sq : squares(iso, g)) {
    const auto fh = fill(sq);
    ASSERT_TRUE(fh.has_value());
    EXPECT_EQ(*fh, sq.f());
  }
}

TEST(Lifting, NamedExamples) {
  const CMap& g = reg().m_to_lambda();
  EXPECT_TRUE(lifts(reg().empty_to_point(), g).holds);
  EXPECT_FALSE(lifts(from_empty(reg().lambda()), g).holds);
  EXPECT_TRUE(lifts(from_empty(reg().sierpinski()), g).holds);
  EXPECT_EQ(normal(*reg().lambda()), false);
  EXPECT_EQ(normal(*reg().sierpinski()), true);
}

TEST(Lifting, CertificateSoundnessOnSmallUniverse) {
  const auto& maps = universe(3).maps();
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  for (int k = 0; k < 400; ++k) {
    const CMap& i = maps[pick(rng)];
    const CMap& g = maps[pick(rng)];
    const auto cert = lifts(i, g, {.keep_fillers = true});
    EXPECT_EQ(cert.holds, has_lift(i, g));
    if (cert.holds) {
      const auto all = squares(i, g);
      ASSERT_EQ(cert.fillers.size(), all.size());
      EXPECT_EQ(cert.squares, all.size());
      for (std::size_t s = 0; s < all.size(); ++s) {
        EXPECT_EQ(compose(i, cert.fillers[s]), all[s].f());
        EXPECT_EQ(compose(cert.fillers[s], g), all[s].phi());
      }
    } else {
      ASSERT_TRUE(cert.counterexample.has_value());
      EXPECT_FALSE(test::naive_fill(*cert.counterexample).has_value());
    }
  }
}

TEST(Lifting, CertificateJson) {
  const auto cert = lifts(reg().empty_to_point(), reg().m_to_lambda(), {.keep_fillers = true});
  const auto j = to_json(cert);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["squares"].get<std::size_t>(), 3U);
  EXPECT_TRUE(j["counterexample"].is_null());
  const auto bad = to_json(lifts(from_empty(reg().lambda()), reg().m_to_lambda()));
  EXPECT_FALSE(bad["holds"].get<bool>());
  EXPECT_TRUE(bad["counterexample"].is_object());
}

// Labeled preorders on n points, bucketed with a permutation-based
// isomorphism test.
TEST(Universe, CountsMatchLabeledEnumeration) {
  const std::vector<std::size_t> expected = {1, 1, 3, 9, 33};
  std::size_t cumulative = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<Space> classes;
    const std::size_t pairs = n * n;
    for (std::uint32_t bits = 0; bits < (1U << pairs); ++bits) {
      bool ok = true;
      for (std::size_t p = 0; p < n && ok; ++p) ok = (bits >> (p * n + p)) & 1U;
      auto rel = [&](std::size_t p, std::size_t q) { return ((bits >> (p * n + q)) & 1U) != 0; };
      for (std::size_t p = 0; p < n && ok; ++p) {
        for (std::size_t q = 0; q < n && ok; ++q) {
          for (std::size_t r = 0; r < n && ok; ++r) ok = !(rel(p, q) && rel(q, r)) || rel(p, r);
        }
      }
      if (!ok) continue;
      std::vector<std::string> names;
      std::vector<Arrow> arrows;
      for (std::size_t p = 0; p < n; ++p) names.push_back("p" + std::to_string(p));
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (rel(p, q)) arrows.emplace_back(p, q);
        }
      }
      Space s(names, arrows);
      bool seen = false;
      for (const auto& c : classes) seen = seen || test::naive_isomorphic(c, s);
      if (!seen) classes.push_back(std::move(s));
    }
    EXPECT_EQ(classes.size(), expected[n]) << "n=" << n;
    cumulative += classes.size();
    EXPECT_EQ(enumerate_spaces(static_cast<int>(n)).size(), cumulative);
  }
}

TEST(Universe, CatalogIsDuplicateFree) {
  const auto spaces = enumerate_spaces(4);
  for (std::size_t a = 0; a < spaces.size(); ++a) {
    for (std::size_t b = a + 1; b < spaces.size(); ++b) {
      EXPECT_FALSE(test::naive_isomorphic(*spaces[a], *spaces[b]));
    }
  }
  EXPECT_EQ(enumerate_spaces(5).size() - enumerate_spaces(4).size(), 139U);
  EXPECT_EQ(enumerate_spaces(1).size(), 2U);
  EXPECT_EQ(*enumerate_spaces(1)[1], parse_space("{a}"));
}

TEST(Universe, T0Counts) {
  // Posets on 0..4 points: 1, 1, 2, 5, 16.
  EXPECT_EQ(enumerate_spaces(4, true).size(), 1U + 1 + 2 + 5 + 16);
}

TEST(Universe, CanonicalFormIsInvariant) {
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    const Space s = test::random_space(rng, static_cast<std::size_t>(k % 7));
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Arrow> arrows;
    for (auto [p, q] : s.relation()) arrows.emplace_back(perm[p], perm[q]);
    std::vector<std::string> names(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) names[perm[p]] = s.name(p);
    const Space t(names, arrows);
    EXPECT_EQ(canonicalize(s).code, canonicalize(t).code);
    EXPECT_EQ(canonicalize(s).space, canonicalize(t).space);
  }
}

TEST(Universe, MapCountsMatchOrbitCounting) {
  // Maps up to automorphisms of both ends, by brute-force orbit collection.
  const auto& u = universe(3);
  std::size_t expected = 0;
  const auto spaces = enumerate_spaces(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      const auto ax = test::naive_isomorphisms(*x, *x);
      const auto ay = test::naive_isomorphisms(*y, *y);
      std::set<std::vector<std::uint8_t>> seen;
      for (const auto& a : test::all_functions(x->size(), y->size())) {
        if (!test::naive_monotone(*x, *y, a)) continue;
        std::vector<std::uint8_t> best = a;
        for (const auto& p : ax) {
          for (const auto& q : ay) {
            std::vector<std::uint8_t> b(a.size());
            for (std::size_t t = 0; t < a.size(); ++t) b[p[t]] = static_cast<std::uint8_t>(q[a[t]]);
            best = std::min(best, b);
          }
        }
        seen.insert(best);
      }
      expected += seen.size();
    }
  }
  EXPECT_EQ(u.maps().size(), expected);
}

TEST(Universe, FindMapUpToIsomorphism) {
  const auto& u = universe(3);
  const CMap f = parse_map("{q->r,z}-->{q->r=z}");
  const auto k = u.find_map(f);
  ASSERT_TRUE(k.has_value());
  EXPECT_TRUE(test::same_arrow(u.maps()[*k], f));
  EXPECT_THROW(u.canonical_map(reg().m_to_lambda()), std::out_of_range);
}

TEST(Universe, CapacityLimits) {
  EXPECT_THROW(Universe::build(kMaxMapBound + 1), CapacityError);
  EXPECT_THROW(enumerate_spaces(kMaxSpaceBound + 1), CapacityError);
}

TEST(Universe, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "ftop-test-cache";
  std::filesystem::create_directories(dir);
  const auto file = dir / "u3.json";
  universe(3).save(file);
  const auto loaded = Universe::load(file, 3);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->maps().size(), universe(3).maps().size());
  for (std::size_t k = 0; k < loaded->maps().size(); ++k) EXPECT_EQ(loaded->maps()[k], universe(3).maps()[k]);
  EXPECT_FALSE(Universe::load(file, 2).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Orthogonal, SurjectionsAreTheRightClass) {
  const auto& u = universe(3);
  const auto r = relative_orthogonal({{reg().empty_to_point()}, "r"}, u, 1);
  EXPECT_EQ(r.approximation, Approximation::Exact);
  std::size_t k = 0;
  for (std::size_t m = 0; m < u.maps().size(); ++m) {
    const bool member = k < r.members.size() && r.members[k] == m;
    if (member) ++k;
    EXPECT_EQ(member, surjective(u.maps()[m]));
    if (is_isomorphism(u.maps()[m])) EXPECT_TRUE(member);
  }
}

TEST(Orthogonal, LeftClassOfMToLambda) {
  const auto& u = universe(4);
  const auto r = relative_orthogonal({{reg().m_to_lambda()}, "l"}, u, 1);
  auto contains = [&](const CMap& f) {
    const auto k = u.find_map(f);
    return k && std::binary_search(r.members.begin(), r.members.end(), *k);
  };
  EXPECT_TRUE(contains(from_empty(reg().sierpinski())));
  EXPECT_FALSE(contains(from_empty(reg().lambda())));
}

TEST(Orthogonal, WordValidation) {
  EXPECT_THROW(validate_word(""), std::invalid_argument);
  EXPECT_THROW(validate_word("lx"), std::invalid_argument);
  EXPECT_NO_THROW(validate_word("", true));
  EXPECT_EQ(approximation_after(2), Approximation::Over);
  EXPECT_EQ(approximation_after(3), Approximation::Loose);
}

TEST(Orthogonal, DeterministicAcrossWorkerCounts) {
  const auto& u = universe(3);
  const ClassQuery q{{reg().m_to_lambda()}, "lr"};
  const auto one = relative_orthogonal(q, u, 1);
  const auto four = relative_orthogonal(q, u, 4);
  EXPECT_EQ(one.members, four.members);
  EXPECT_EQ(one.levels, four.levels);
}

TEST(Retract, Examples) {
  const CMap& f = reg().m_to_lambda();
  const auto self = is_retract_of(f, f);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(verify_retract(f, f, *self));
  EXPECT_FALSE(is_retract_of(reg().empty_to_point(), identity(reg().point())).has_value());

  const CMap& lambda_to_point = reg().map("disjoint_closures_archetype");
  EXPECT_FALSE(is_retract_of(lambda_to_point, sub(2)).has_value());
  const CMap doubling = compose(sub(8), sub(4));
  const auto w = is_retract_of(lambda_to_point, doubling);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_retract(lambda_to_point, doubling, *w));
}

TEST(Factor, Examples) {
  const auto& u = universe(2);
  const CMap& e = reg().empty_to_point();
  const auto r = factor_search(e, {e}, "", u, 1);
  ASSERT_TRUE(r.found.has_value());
  EXPECT_EQ(compose(r.found->left, r.found->right), e);
  // ∅→{o} does not lift against itself, so it is not its own left factor.
  EXPECT_FALSE(has_lift(e, e));
  EXPECT_TRUE(is_isomorphism(r.found->left));

  const CMap id = identity(u.spaces()[3]);
  const auto ri = factor_search(id, {reg().m_to_lambda()}, "", u, 1);
  ASSERT_TRUE(ri.found.has_value());
  EXPECT_TRUE(is_isomorphism(ri.found->left));
  EXPECT_TRUE(is_isomorphism(ri.found->right));
  EXPECT_THROW(factor_search(reg().m_to_lambda(), {e}, "", u, 1), CapacityError);
}
