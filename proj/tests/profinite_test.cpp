#include <gtest/gtest.h>

#include "corpus.hpp"
#include "galois/profinite.hpp"

using namespace galois;

namespace {

std::shared_ptr<const FiniteMonoid> cyc(std::size_t n) { return share(cyclic_group(n)); }

GroupHom mod(std::size_t from, std::size_t to) {
  GroupHom h;
  for (std::size_t i = 0; i < from; ++i) h.map.push_back(i % to);
  return h;
}

InverseSystem chain(std::vector<std::size_t> orders) {
  std::vector<std::string> names;
  std::vector<std::shared_ptr<const FiniteMonoid>> groups;
  std::vector<SystemEdge> edges;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    names.push_back("Z/" + std::to_string(orders[i]));
    groups.push_back(cyc(orders[i]));
    if (i > 0) edges.push_back({i, i - 1, mod(orders[i], orders[i - 1])});
  }
  return InverseSystem("chain", names, groups, edges);
}

// every tuple of the product checked against the raw edges
std::size_t brute_thread_count(const InverseSystem& s) {
  std::vector<Element> cur(s.size(), 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& e : s.edges()) ok &= e.map.map[cur[e.hi]] == cur[e.lo];
    count += ok;
    std::size_t i = 0;
    while (i < s.size() && ++cur[i] == s.group(i).size()) cur[i++] = 0;
    if (i == s.size()) break;
  }
  return count;
}

// e factors through level i iff threads with the same projection act alike
bool factors_by_table(const ThreadGroup& lim, const GAction& e, std::size_t i) {
  for (Element a = 0; a < lim.threads.size(); ++a)
    for (Element b = 0; b < lim.threads.size(); ++b)
      if (lim.threads[a][i] == lim.threads[b][i])
        for (Point x = 0; x < e.points(); ++x)
          if (e.act(a, x) != e.act(b, x)) return false;
  return true;
}

}  // namespace

TEST(InverseSystem, Validation) {
  EXPECT_NO_THROW(chain({2, 4, 8}));
  // injective, not surjective
  GroupHom up{{0, 2}};
  EXPECT_THROW(InverseSystem("bad", {"Z/2", "Z/4"}, {cyc(2), cyc(4)}, {{0, 1, up}}), Error);
  // not a homomorphism
  EXPECT_THROW(InverseSystem("bad", {"Z/3", "Z/3b"}, {cyc(3), cyc(3)}, {{0, 1, GroupHom{{0, 2, 2}}}}), Error);
  // two paths a -> c that agree, then two that differ
  GroupHom neg{{0, 3, 2, 1}}, id{{0, 1, 2, 3}};
  EXPECT_NO_THROW(InverseSystem("ok", {"a", "b", "c"}, {cyc(4), cyc(4), cyc(2)},
                                {{0, 1, neg}, {1, 2, mod(4, 2)}, {0, 2, mod(4, 2)}}));
  EXPECT_THROW(InverseSystem("bad", {"a", "b", "c"}, {cyc(4), cyc(4), cyc(4)}, {{0, 1, id}, {1, 2, id}, {0, 2, neg}}),
               Error);
  // incomparable levels without a common refinement
  EXPECT_THROW(InverseSystem("nomeet", {"Z/2", "Z/3"}, {cyc(2), cyc(3)}, {}), Error);
}

TEST(Threads, Examples) {
  auto one = InverseSystem("one", {"S3"}, {share(symmetric_group(3))}, {});
  auto l1 = limit_threads(one);
  EXPECT_TRUE(group_isomorphic(l1.as_finite_group(), symmetric_group(3)).has_value());

  auto c24 = chain({2, 4});
  auto l2 = limit_threads(c24);
  EXPECT_TRUE(group_isomorphic(l2.as_finite_group(), cyclic_group(4)).has_value());

  auto v = InverseSystem("vee", {"Z/6", "Z/2", "Z/3"}, {cyc(6), cyc(2), cyc(3)}, {{0, 1, mod(6, 2)}, {0, 2, mod(6, 3)}});
  EXPECT_EQ(v.meet(1, 2), 0u);
  auto l3 = limit_threads(v);
  EXPECT_TRUE(group_isomorphic(l3.as_finite_group(), cyclic_group(6)).has_value());
  EXPECT_FALSE(group_isomorphic(l3.as_finite_group(), symmetric_group(3)).has_value());

  for (const auto* s : {&one, &c24, &v}) {
    auto lim = limit_threads(*s);
    EXPECT_EQ(lim.threads.size(), brute_thread_count(*s));
    for (const auto& p : projections_surjective(*s, lim)) EXPECT_TRUE(p.surjective);
  }
  EXPECT_THROW(limit_threads(chain({2, 4, 8}), 4), Error);
}

TEST(Threads, ProjectionIsIdentityOnOneNode) {
  auto one = InverseSystem("one", {"Q8"}, {share(quaternion_group())}, {});
  auto lim = limit_threads(one);
  EXPECT_EQ(lim.projections[0].map.size(), 8u);
  std::set<Element> image(lim.projections[0].map.begin(), lim.projections[0].map.end());
  EXPECT_EQ(image.size(), 8u);
}

TEST(FactorAction, ChainTwoFourEight) {
  auto s = chain({2, 4, 8});
  auto lim = limit_threads(s);
  ASSERT_EQ(lim.group->size(), 8u);
  auto actions = transitive_thread_actions(s, lim, 8);
  std::vector<std::size_t> sizes;
  for (const auto& t : actions) {
    sizes.push_back(t.action.points());
    std::vector<std::size_t> admissible;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (factors_by_table(lim, t.action, i)) admissible.push_back(i);
    EXPECT_EQ(t.factor.admissible, admissible);
    // levels are ordered coarse to fine along the chain
    EXPECT_EQ(t.factor.level, admissible.front());
    EXPECT_TRUE(t.factor.unique);
    // round trip through the level
    EXPECT_EQ(inflate(lim, t.factor.level, t.factor.level_action).table(), t.action.table());
    const std::size_t expected_level = t.action.points() <= 2 ? 0 : (t.action.points() == 4 ? 1 : 2);
    EXPECT_EQ(t.factor.level, expected_level) << t.action.points();
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4, 8}));
}

TEST(FactorAction, TrivialAndFaithful) {
  auto s = chain({2, 4});
  auto lim = limit_threads(s);
  auto triv = trivial_action(lim.group, 3);
  EXPECT_EQ(factor_action(s, lim, triv).level, 0u);
  auto reg = regular_action(lim.group);
  EXPECT_EQ(factor_action(s, lim, reg).level, 1u);
  // kernel = kernel of the projection to Z/2
  auto two = inflate(lim, 0, regular_action(s.group_ptr(0)));
  EXPECT_EQ(factor_action(s, lim, two).level, 0u);
  EXPECT_THROW(factor_action(s, lim, regular_action(cyc(4))), Error);
}

TEST(FactorAction, IncomparableLevelsPickNodeOrder) {
  // Z/6 over Z/2 and Z/3: the trivial action factors at both
  auto v = InverseSystem("vee", {"Z/6", "Z/2", "Z/3"}, {cyc(6), cyc(2), cyc(3)}, {{0, 1, mod(6, 2)}, {0, 2, mod(6, 3)}});
  auto lim = limit_threads(v);
  auto f = factor_action(v, lim, trivial_action(lim.group, 1));
  EXPECT_FALSE(f.unique);
  EXPECT_EQ(f.level, 1u);
  auto tt = transitive_thread_actions(v, lim, 6);
  EXPECT_EQ(tt.size(), 4u);
}

TEST(TransitiveThreadActions, SingleNodeAndChain) {
  auto one = InverseSystem("one", {"S3"}, {share(symmetric_group(3))}, {});
  EXPECT_EQ(transitive_thread_actions(one, limit_threads(one), 6).size(), 4u);
  auto s = chain({2, 4});
  auto lim = limit_threads(s);
  std::vector<std::size_t> sizes;
  for (const auto& t : transitive_thread_actions(s, lim, 4)) sizes.push_back(t.action.points());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4}));
  // coarse-level actions keep their hom-sets after inflation
  auto coarse = classify_transitive(s.group_ptr(0));
  for (const auto& a : coarse)
    for (const auto& b : coarse)
      EXPECT_EQ(hom_actions(a, b).size(), hom_actions(inflate(lim, 0, a), inflate(lim, 0, b)).size());
}

TEST(GaloisSystem, ThreadGroupOfTransitiveGSets) {
  for (const auto& g : corpus::groups()) {
    auto c = transitive_gset_category(g);
    auto d = cofinal_galois_diagram(c);
    auto s = system_from_diagram(c, d);
    auto lim = limit_threads(s);
    EXPECT_TRUE(group_isomorphic(lim.as_finite_group(), as_group(*g)).has_value()) << g->name();
    for (const auto& p : projections_surjective(s, lim)) EXPECT_TRUE(p.surjective);
    EXPECT_EQ(s.finest(), *d.bottom);
  }
}
