#include <gtest/gtest.h>

#include "corpus.hpp"
#include "galois/actions.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

// S3 as permutations of {0,1,2}, sorted: index 2 = (0 1), index 3 = (0 1 2)
std::shared_ptr<const FiniteMonoid> s3() {
  static auto g = share(permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}, 3).group);
  return g;
}
constexpr Element kTransposition = 2;
constexpr Element kThreeCycle = 3;

// every map X -> Y checked against the full action table
std::size_t brute_hom_count(const GAction& a, const GAction& b) {
  std::size_t count = 0;
  std::vector<Point> f(a.points(), 0);
  if (a.points() > 0 && b.points() == 0) return 0;
  for (;;) {
    if (is_equivariant(a, b, f)) ++count;
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == b.points()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return count;
}

}  // namespace

TEST(Orbits, Basic) {
  auto g = s3();
  EXPECT_EQ(orbits(trivial_action(g, 3)).size(), 3u);
  auto reg = regular_action(g);
  ASSERT_EQ(orbits(reg).size(), 1u);
  EXPECT_EQ(orbits(reg)[0].size(), 6u);
  auto e = coset_action(g, Subgroup{generated(*g, {kTransposition})});
  EXPECT_EQ(e.points(), 3u);
  EXPECT_TRUE(is_transitive(e));
  EXPECT_EQ(reachable(e, 0).size(), 3u);
  auto m = share(idempotent_monoid());
  EXPECT_THROW(orbits(regular_action(m)), Error);
}

TEST(Stabilizer, Basic) {
  auto g = s3();
  EXPECT_EQ(stabilizer(regular_action(g), 4), trivial_subgroup(as_group(*g)));
  EXPECT_EQ(stabilizer(trivial_action(g, 2), 1), whole_group(as_group(*g)));
  for (const auto& h : subgroups(as_group(*g))) EXPECT_EQ(stabilizer(coset_action(g, h), 0), h);
  EXPECT_THROW(stabilizer(regular_action(g), 6), Error);
}

TEST(CosetAction, Basic) {
  auto g = s3();
  EXPECT_EQ(coset_action(g, whole_group(as_group(*g))).points(), 1u);
  auto reg = coset_action(g, trivial_subgroup(as_group(*g)));
  EXPECT_TRUE(action_isomorphic(reg, regular_action(g)).has_value());
  Subgroup a3{generated(*g, {kThreeCycle})};
  auto two = coset_action(g, a3);
  EXPECT_EQ(two.points(), 2u);
  // kernel of the 2-point action is A3
  Subgroup kernel;
  for (Element x = 0; x < 6; ++x)
    if (two.act(x, 0) == 0 && two.act(x, 1) == 1) kernel.members.push_back(x);
  EXPECT_EQ(kernel, a3);
  EXPECT_THROW(coset_action(g, Subgroup{{0, 2, 3}}), Error);
}

TEST(OrbitStabilizer, AllCorpusTransitiveActions) {
  for (const auto& g : corpus::groups())
    for (const auto& h : subgroups(as_group(*g))) {
      auto e = coset_action(g, h);
      for (Point x = 0; x < e.points(); ++x)
        EXPECT_EQ(e.points() * stabilizer(e, x).size(), g->size());
      for (Point x = 0; x < e.points(); ++x)
        EXPECT_TRUE(action_isomorphic(e, coset_action(g, stabilizer(e, x))).has_value());
    }
}

TEST(ClassifyTransitive, CountsAndUniqueness) {
  std::map<std::string, std::size_t> expected{{"S3", 4}, {"D4", 8}, {"Q8", 6}, {"A4", 5}};
  for (const auto& g : corpus::groups()) {
    auto reps = classify_transitive(g);
    EXPECT_EQ(reps.size(), oracle::conjugacy_class_count(as_group(*g))) << g->name();
    if (expected.count(g->name())) {
      EXPECT_EQ(reps.size(), expected[g->name()]) << g->name();
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(action_isomorphic(reps[i], reps[j]).has_value());
    // each transitive action G/H matches exactly one representative
    for (const auto& h : subgroups(as_group(*g))) {
      auto e = coset_action(g, h);
      std::size_t matches = 0;
      for (const auto& r : reps) matches += action_isomorphic(e, r).has_value();
      EXPECT_EQ(matches, 1u);
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& e : classify_transitive(s3())) sizes.push_back(e.points());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(classify_transitive(share(trivial_group())).size(), 1u);
}

TEST(HomActions, MatchesBruteForce) {
  auto g = s3();
  std::vector<GAction> objs;
  for (const auto& e : classify_transitive(g)) objs.push_back(e);
  objs.push_back(trivial_action(g, 2));
  objs.push_back(disjoint_union(objs[0], objs[1]));
  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (std::pow(double(b.points()), double(a.points())) > 5e5) continue;
      EXPECT_EQ(hom_actions(a, b).size(), brute_hom_count(a, b)) << a.name() << " " << b.name();
    }
  auto reg = regular_action(g);
  for (const auto& b : objs) EXPECT_EQ(hom_actions(reg, b).size(), b.points());
  auto one = trivial_action(g, 1);
  for (const auto& b : objs) {
    std::size_t fixed = 0;
    for (Point x = 0; x < b.points(); ++x) {
      bool f = true;
      for (Element s = 0; s < g->size(); ++s) f &= b.act(s, x) == x;
      fixed += f;
    }
    EXPECT_EQ(hom_actions(one, b).size(), fixed);
  }
  auto three = coset_action(g, Subgroup{generated(*g, {kTransposition})});
  auto two = coset_action(g, Subgroup{generated(*g, {kThreeCycle})});
  EXPECT_TRUE(hom_actions(three, two).empty());
  EXPECT_THROW(hom_actions(reg, regular_action(share(cyclic_group(6)))), Error);
}

TEST(Quotient, UniversalProperty) {
  auto g = s3();
  auto reg = regular_action(g);
  // trivial group of automorphisms
  auto q0 = quotient_action(reg, {EquivariantMap{detail::identity_map(6)}});
  EXPECT_TRUE(action_isomorphic(q0.quotient, reg).has_value());
  for (const auto& h : subgroups(as_group(*g))) {
    std::vector<EquivariantMap> right;
    for (auto x : h.members) {
      EquivariantMap r;
      for (Element y = 0; y < 6; ++y) r.map.push_back(g->compose(y, x));
      right.push_back(r);
    }
    auto q = quotient_action(reg, right);
    EXPECT_TRUE(action_isomorphic(q.quotient, coset_action(g, h)).has_value());
    EXPECT_TRUE(is_equivariant(reg, q.quotient, q.projection.map));
    EXPECT_TRUE(detail::is_surjective(q.projection.map, q.quotient.points()));
    // every map out of reg constant on H-orbits factors uniquely
    for (const auto& target : classify_transitive(g))
      for (const auto& f : hom_actions(reg, target)) {
        bool constant = true;
        for (const auto& r : right)
          for (Point x = 0; x < 6; ++x) constant &= f.map[r.map[x]] == f.map[x];
        std::size_t factorizations = 0;
        for (const auto& u : hom_actions(q.quotient, target))
          factorizations += detail::compose_maps(u.map, q.projection.map) == f.map;
        EXPECT_EQ(factorizations, constant ? 1u : 0u);
      }
  }
  EXPECT_THROW(quotient_action(reg, {EquivariantMap{{0, 0, 0, 0, 0, 0}}}), Error);
}

TEST(Quotient, KleinFour) {
  auto v4 = share(klein_four_group());
  auto reg = regular_action(v4);
  EquivariantMap r;
  for (Element y = 0; y < 4; ++y) r.map.push_back(v4->compose(y, 1));
  auto q = quotient_action(reg, {r});
  EXPECT_EQ(q.quotient.points(), 2u);
}

TEST(ActionIsomorphic, ConjugateSubgroups) {
  auto g = s3();
  const auto& gg = as_group(*g);
  for (const auto& h : subgroups(gg))
    for (Element x = 0; x < 6; ++x)
      EXPECT_TRUE(action_isomorphic(coset_action(g, h), coset_action(g, conjugate(gg, h, x))));
  auto e = coset_action(g, Subgroup{generated(*g, {kTransposition})});
  auto id = action_isomorphic(e, e);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->map, detail::identity_map(3));
  auto d4 = share(dihedral_group(4));
  auto classes = conjugacy_classes_of_subgroups(as_group(*d4));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      EXPECT_FALSE(action_isomorphic(coset_action(d4, classes[i][0]), coset_action(d4, classes[j][0])));
}

TEST(EnumerateActions, IdempotentMonoid) {
  // brute force: idempotent self-maps up to relabeling
  auto m = share(idempotent_monoid());
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Point>> canon;
    std::vector<Point> f(n, 0);
    auto perms = oracle::all_permutations(n);
    for (;;) {
      bool idem = true;
      for (Point x = 0; x < n; ++x) idem &= f[f[x]] == f[x];
      if (idem) {
        std::vector<Point> best;
        for (const auto& s : perms) {
          std::vector<Point> r(n);
          for (Point x = 0; x < n; ++x) r[s[x]] = s[f[x]];
          if (best.empty() || r < best) best = r;
        }
        canon.insert(best);
      }
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
    EXPECT_EQ(enumerate_actions(m, n).size(), canon.size()) << n;
  }
  // groups: one action per multiset of transitive types
  auto c2 = share(cyclic_group(2));
  EXPECT_EQ(enumerate_actions(c2, 3).size(), 2u);
  EXPECT_EQ(enumerate_actions(c2, 4).size(), 3u);
}

TEST(Product, Action) {
  auto g = s3();
  auto three = coset_action(g, Subgroup{generated(*g, {kTransposition})});
  auto p = product_action(three, three);
  EXPECT_EQ(p.points(), 9u);
  EXPECT_EQ(orbits(p).size(), 2u);
}
