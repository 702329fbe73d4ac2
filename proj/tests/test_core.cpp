#include <gtest/gtest.h>

#include <set>

#include "ftop/construct.hpp"
#include "ftop/dsl.hpp"
#include "ftop/properties.hpp"
#include "ftop/registry.hpp"
#include "ftop/universe.hpp"
#include "test_util.hpp"

using namespace ftop;

namespace {

const Registry& reg() { return Registry::instance(); }

std::set<std::string> names(const Space& s, PointSet a) {
  auto v = a.names(s);
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Space, ClosureOfPoints) {
  const auto m = reg().big_m();
  EXPECT_EQ(names(*m, closure(*m, PointSet::of(*m, {"u"}))), (std::set<std::string>{"u", "a", "x"}));
  const auto s = reg().sierpinski();
  EXPECT_EQ(names(*s, closure(*s, PointSet::of(*s, {"c"}))), (std::set<std::string>{"c"}));
  const auto lam = reg().lambda();
  EXPECT_EQ(names(*lam, closure(*lam, PointSet::of(*lam, {"w"}))), (std::set<std::string>{"w", "a", "b"}));
}

TEST(Space, OpenAndClosed) {
  EXPECT_TRUE(is_open(*reg().sierpinski(), PointSet::of(*reg().sierpinski(), {"o"})));
  EXPECT_FALSE(is_open(*reg().lambda(), PointSet::of(*reg().lambda(), {"a"})));
  EXPECT_TRUE(is_closed(*reg().big_m(), PointSet::of(*reg().big_m(), {"a", "x", "b"})));
  EXPECT_THROW(PointSet::of(*reg().big_m(), {"nope"}), std::domain_error);
}

TEST(Space, MinimalNeighbourhoods) {
  const auto s = reg().sierpinski();
  EXPECT_EQ(names(*s, min_nbhd(*s, "o")), (std::set<std::string>{"o"}));
  EXPECT_EQ(names(*reg().lambda(), min_nbhd(*reg().lambda(), "a")), (std::set<std::string>{"a", "w"}));
  EXPECT_EQ(names(*reg().big_m(), min_nbhd(*reg().big_m(), "x")), (std::set<std::string>{"x", "u", "v"}));
  EXPECT_THROW(min_nbhd(*s, "q"), std::domain_error);
}

TEST(Space, RelationIsClosed) {
  const Space s({"p", "q", "r"}, std::vector<Arrow>{{0, 1}, {1, 2}});
  EXPECT_TRUE(s.leads_to(0, 2));
  EXPECT_TRUE(s.leads_to(1, 1));
  EXPECT_FALSE(s.leads_to(2, 0));
  EXPECT_EQ(s.relation_size(), 6U);
  EXPECT_THROW(Space({"p", "p"}, std::vector<Arrow>{}), std::invalid_argument);
}

TEST(Space, ClosureLawsOnEverySubset) {
  for (const auto& s : enumerate_spaces(4)) {
    for (PointMask a = 0; a <= s->all(); ++a) {
      const PointSet pa(a);
      const PointSet ca = closure(*s, pa);
      EXPECT_EQ(closure(*s, ca), ca);
      EXPECT_TRUE(pa.subset_of(ca));
      PointSet hull;
      for_each_point(a, [&](std::size_t p) { hull = hull | min_nbhd(*s, p); });
      EXPECT_EQ(is_open(*s, pa), hull == pa);
      for (PointMask b = 0; b <= s->all(); ++b) {
        EXPECT_EQ(closure(*s, PointSet(a | b)), ca | closure(*s, PointSet(b)));
        if (b == s->all()) break;
      }
      if (a == s->all()) break;
    }
  }
}

TEST(Space, EmptySpace) {
  const auto e = reg().empty();
  EXPECT_EQ(e->size(), 0U);
  EXPECT_EQ(closed_sets(*e).size(), 1U);
  EXPECT_EQ(open_sets(*e).size(), 1U);
  EXPECT_TRUE(is_isomorphism(identity(e)));
}

TEST(Construct, ProductAndCoproduct) {
  const auto s = reg().sierpinski();
  const auto ss = product(*s, *s);
  EXPECT_EQ(ss->size(), 4U);
  EXPECT_EQ(ss->relation_size(), 9U);
  const auto two = coproduct(*reg().point(), *reg().point());
  EXPECT_EQ(two->size(), 2U);
  EXPECT_TRUE(discrete(*two));
  for (const auto& x : enumerate_spaces(4)) {
    EXPECT_TRUE(isomorphic(*product(*x, *reg().point()), *x));
  }
}

TEST(Construct, QuotientExamples) {
  const auto s = reg().sierpinski();
  const auto q = quotient(s, {{0, 1}});
  EXPECT_EQ(q.space->size(), 1U);

  const auto m = reg().big_m();
  const auto u = m->index_of("u");
  const auto x = m->index_of("x");
  const auto v = m->index_of("v");
  const auto qm = quotient(m, {{u, x, v}, {m->index_of("a")}, {m->index_of("b")}});
  EXPECT_TRUE(isomorphic(*qm.space, *reg().lambda()));
  EXPECT_TRUE(quotient_map(qm.projection));
  EXPECT_TRUE(test::same_arrow(qm.projection, reg().m_to_lambda()));

  std::vector<std::vector<std::size_t>> singletons;
  for (std::size_t p = 0; p < m->size(); ++p) singletons.push_back({p});
  EXPECT_TRUE(is_isomorphism(quotient(m, singletons).projection));

  EXPECT_THROW(quotient(m, {{0, 1}}), std::domain_error);
  EXPECT_THROW(quotient(m, {{0, 1, 2}, {2, 3, 4}}), std::domain_error);
}

TEST(Construct, FastQuotientMatchesOpenSetQuotient) {
  for (const auto& s : enumerate_spaces(5)) {
    for (const auto& classes : test::partitions(s->size())) {
      const auto fast = quotient(s, classes);
      const auto slow = quotient_via_open_sets(s, classes);
      ASSERT_EQ(*fast.space, *slow.space) << render(*s);
      ASSERT_EQ(fast.projection, slow.projection);
    }
  }
}

TEST(Construct, CylinderExamples) {
  const auto pt = reg().point();
  const auto cone = cylinder(identity(pt));
  EXPECT_TRUE(isomorphic(*cone.space, *reg().sierpinski()));
  ASSERT_EQ(cone.top.size(), 1U);
  EXPECT_TRUE(is_open(*cone.space, PointSet(bit(cone.top[0]))));
  EXPECT_TRUE(is_closed(*cone.space, PointSet(bit(cone.base[0]))));

  const CMap s_to_point(reg().sierpinski(), pt, {0, 0});
  const auto c = cylinder(s_to_point);
  EXPECT_EQ(c.space->size(), 3U);
  const auto o = c.top[0];
  const auto cl = c.top[1];
  const auto b = c.base[0];
  EXPECT_TRUE(c.space->leads_to(o, cl));
  EXPECT_TRUE(c.space->leads_to(cl, b));
  EXPECT_FALSE(c.space->leads_to(b, cl));
}

// Opens of the cylinder are (U ∪ p^-1(V)) on the top copy together with V on
// the base, for U open in Y and V open in B.
TEST(Construct, CylinderOpenSetsMatchDescription) {
  const auto u = Universe::build(4, 1);
  std::size_t checked = 0;
  for (const auto& p : u.maps()) {
    if (p.src().size() + p.dst().size() > 6) continue;
    const auto cyl = cylinder(p);
    std::set<std::pair<PointMask, PointMask>> expected;
    for (PointSet uo : open_sets(p.src())) {
      for (PointSet vo : open_sets(p.dst())) {
        expected.emplace((uo | p.preimage(vo)).mask(), vo.mask());
      }
    }
    std::set<std::pair<PointMask, PointMask>> actual;
    for (PointSet w : open_sets(*cyl.space)) {
      PointMask top = 0;
      PointMask base = 0;
      for (std::size_t k = 0; k < cyl.top.size(); ++k) top |= w.contains(cyl.top[k]) ? bit(k) : 0;
      for (std::size_t k = 0; k < cyl.base.size(); ++k) base |= w.contains(cyl.base[k]) ? bit(k) : 0;
      actual.emplace(top, base);
    }
    ASSERT_EQ(actual, expected) << render(relabel_for_render(p));
    for (std::size_t k = 0; k < cyl.top.size(); ++k) EXPECT_EQ(cyl.to_base(cyl.top[k]), p(k));
    for (std::size_t k = 0; k < cyl.base.size(); ++k) EXPECT_EQ(cyl.to_base(cyl.base[k]), k);
    ++checked;
  }
  EXPECT_GT(checked, 1000U);
}

TEST(Construct, ZigzagsAndSubdivisions) {
  EXPECT_TRUE(isomorphic(*lam(1), *reg().lambda()));
  EXPECT_TRUE(isomorphic(*lam(2), *reg().big_m()));
  const auto l4 = lam(4);
  EXPECT_EQ(l4->size(), 9U);
  std::size_t open = 0;
  for (std::size_t p = 0; p < l4->size(); ++p) open += is_open(*l4, PointSet(bit(p)));
  EXPECT_EQ(open, 4U);
  EXPECT_THROW(lam(0), std::domain_error);
  EXPECT_THROW(sub(0), std::domain_error);
  EXPECT_TRUE(test::same_arrow(sub(1), reg().m_to_lambda()));
  for (int k = 1; k <= 4; ++k) {
    const CMap s = sub(k);
    EXPECT_TRUE(surjective(s));
    EXPECT_TRUE(quotient_map(s));
  }
}

TEST(Construct, ComposeAndIdentity) {
  const CMap& f = reg().m_to_lambda();
  EXPECT_EQ(compose(identity(f.src_ptr()), f), f);
  EXPECT_EQ(compose(f, identity(f.dst_ptr())), f);
  EXPECT_FALSE(is_isomorphism(f));
  EXPECT_THROW(compose(f, f), std::domain_error);
  EXPECT_EQ(compose(sub(2), sub(1)).src().size(), 9U);
}

// Monotone assignments are exactly the continuous ones, checked against open
// sets for every function between spaces of at most three points.
TEST(Construct, MonotoneIffContinuous) {
  const auto spaces = enumerate_spaces(3);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      for (const auto& assign : test::all_functions(x->size(), y->size())) {
        bool continuous = true;
        for (PointSet v : open_sets(*y)) {
          PointMask pre = 0;
          for (std::size_t p = 0; p < x->size(); ++p) pre |= v.contains(assign[p]) ? bit(p) : 0;
          continuous = continuous && is_open(*x, PointSet(pre));
        }
        EXPECT_EQ(is_monotone(*x, *y, assign), continuous);
      }
    }
  }
}
