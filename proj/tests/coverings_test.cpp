#include <gtest/gtest.h>

#include "galois/coverings.hpp"
#include "galois/equivalence.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::shared_ptr<const BaseGraph> theta() { return std::make_shared<const BaseGraph>("theta", 2, Edges{{0, 1}, {0, 1}, {0, 1}}, 0); }

Permutation inv(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation after(const Permutation& g, const Permutation& f) {
  Permutation h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

// connected components of the total space by union-find
bool total_space_connected(const GraphCover& c) {
  auto t = total_space(c);
  detail::UnionFind uf(t.vertices);
  for (auto [u, v] : t.edges) uf.unite(u, v);
  std::size_t roots = 0;
  for (std::size_t x = 0; x < t.vertices; ++x) roots += uf.find(x) == x;
  return roots == 1;
}

// vertex-wise sheet relabelings phi_v with phi_v volt_e = volt'_e phi_u, by brute force
bool covers_isomorphic_brute(const GraphCover& a, const GraphCover& b) {
  if (a.sheets != b.sheets) return false;
  const auto perms = oracle::all_permutations(a.sheets);
  const auto nv = a.base->vertex_count();
  std::vector<std::size_t> choice(nv, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t e = 0; e < a.base->edges().size() && ok; ++e) {
      auto [u, v] = a.base->edges()[e];
      ok = after(perms[choice[v]], a.voltage[e]) == after(b.voltage[e], perms[choice[u]]);
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < nv && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == nv) return false;
  }
}

std::vector<Permutation> centralizer_brute(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& s : oracle::all_permutations(n)) {
    bool ok = true;
    for (const auto& g : gens) ok &= after(s, g) == after(g, s);
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> t;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (auto y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

bool is_connected_name(const std::string& n) { return n != "0" && n.find('+') == std::string::npos; }

}  // namespace

TEST(BaseGraph, SpanningTreeAndRank) {
  auto w = wedge_of_circles(2);
  EXPECT_EQ(w->rank(), 2u);
  auto t = theta();
  EXPECT_EQ(t->rank(), 2u);
  EXPECT_TRUE(t->is_tree_edge(0));
  EXPECT_EQ(t->generator_edges(), (std::vector<std::size_t>{1, 2}));
  auto path = std::make_shared<const BaseGraph>("path", 3, Edges{{1, 2}, {0, 1}}, 0);
  EXPECT_EQ(path->rank(), 0u);
  EXPECT_EQ(path->path_to(2).size(), 2u);
  EXPECT_THROW(BaseGraph("split", 3, Edges{{0, 1}}, 0), Error);
  EXPECT_THROW(BaseGraph("bad", 2, Edges{{0, 5}}, 0), Error);
}

TEST(Monodromy, Examples) {
  auto w = wedge_of_circles(2);
  auto one = monodromy(trivial_cover(w, 1));
  EXPECT_EQ(one.image.group.size(), 1u);
  EXPECT_TRUE(is_transitive(one.action));

  Permutation sw{1, 0}, id{0, 1};
  auto m = monodromy(cover_from_action(w, {sw, sw}));
  EXPECT_EQ(m.image.group.size(), 2u);
  EXPECT_TRUE(is_transitive(m.action));

  auto d = monodromy(cover_from_action(w, {id, id}));
  EXPECT_EQ(orbits(d.action).size(), 2u);
  EXPECT_FALSE(is_connected(cover_from_action(w, {id, id})));
}

TEST(Monodromy, LoopsOnTheta) {
  // loop through generator edge e: out along e, back along the tree edge
  auto t = theta();
  const auto perms = oracle::all_permutations(3);
  for (const auto& v0 : perms)
    for (const auto& v1 : perms)
      for (const auto& v2 : perms) {
        GraphCover c{t, 3, {v0, v1, v2}};
        auto loops = loop_permutations(c);
        ASSERT_EQ(loops.size(), 2u);
        EXPECT_EQ(loops[0], after(inv(v0), v1));
        EXPECT_EQ(loops[1], after(inv(v0), v2));
        EXPECT_EQ(is_connected(c), total_space_connected(c));
      }
}

TEST(Monodromy, RoundTripWithCoverFromAction) {
  auto t = theta();
  const auto perms = oracle::all_permutations(3);
  std::mt19937 rng(7);
  for (int k = 0; k < 40; ++k) {
    GraphCover c{t, 3, {perms[rng() % 6], perms[rng() % 6], perms[rng() % 6]}};
    auto back = cover_from_action(t, loop_permutations(c));
    EXPECT_EQ(loop_permutations(back), loop_permutations(c));
    EXPECT_TRUE(covers_isomorphic_brute(c, back));
    EXPECT_TRUE(covers_isomorphic(c, back));
  }
  // and the other way, for every pair on 3 points
  for (const auto& a : perms)
    for (const auto& b : perms) EXPECT_EQ(loop_permutations(cover_from_action(t, {a, b})), (std::vector<Permutation>{a, b}));
  // non-isomorphic covers with equal sheet count are told apart
  GraphCover x{t, 2, {{0, 1}, {1, 0}, {0, 1}}}, y{t, 2, {{0, 1}, {0, 1}, {1, 0}}};
  EXPECT_FALSE(covers_isomorphic(x, y));
  EXPECT_FALSE(covers_isomorphic_brute(x, y));
}

TEST(CanonicalForm, MatchesExhaustiveConjugation) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& a : perms)
      for (const auto& b : perms)
        for (bool pointed : {false, true}) {
          auto c = canonical_tuple({a, b}, n, pointed);
          auto flat = c[0];
          flat.insert(flat.end(), c[1].begin(), c[1].end());
          ASSERT_EQ(flat, oracle::least_conjugate_pair(a, b, pointed));
        }
  }
}

TEST(ClassifyCovers, WedgeCountsAgreeWithHallAndBruteForce) {
  auto w = wedge_of_circles(2);
  const auto hall = oracle::hall_subgroup_counts(2, 5);
  EXPECT_EQ(hall[2], 3);
  EXPECT_EQ(hall[3], 13);
  EXPECT_EQ(hall[4], 71);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<std::size_t>> pointed, free;
    const auto perms = oracle::all_permutations(n);
    for (const auto& a : perms)
      for (const auto& b : perms)
        if (oracle::pair_transitive(a, b)) {
          pointed.insert(oracle::least_conjugate_pair(a, b, true));
          free.insert(oracle::least_conjugate_pair(a, b, false));
        }
    EXPECT_EQ(static_cast<long long>(pointed.size()), hall[n]) << n;
    auto got = classify_covers(w, n);
    EXPECT_EQ(got.size(), pointed.size()) << n;
    CoverClassOptions opt;
    opt.pointed = false;
    EXPECT_EQ(classify_covers(w, n, opt).size(), free.size()) << n;
    for (const auto& c : got) EXPECT_TRUE(is_connected(c));
  }
  EXPECT_EQ(static_cast<long long>(classify_covers(w, 5).size()), hall[5]);
}

TEST(ClassifyCovers, Caps) {
  auto w = wedge_of_circles(2);
  EXPECT_THROW(classify_covers(w, 8), Error);
  CoverClassOptions opt;
  opt.max_classes = 10;
  EXPECT_THROW(classify_covers(w, 3, opt), Error);
  // circle: one connected cover per sheet count
  auto circle = wedge_of_circles(1);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(classify_covers(circle, n).size(), 1u);
}

TEST(Deck, Examples) {
  auto w = wedge_of_circles(2);
  for (const auto& c : classify_covers(w, 2)) EXPECT_TRUE(is_regular(c));

  Permutation t01{1, 0, 2}, c3{1, 2, 0};
  auto nonnormal = cover_from_action(w, {t01, c3});
  EXPECT_EQ(deck_transformations(nonnormal).size(), 1u);
  EXPECT_EQ(centralizer_brute({t01, c3}, 3).size(), 1u);
  EXPECT_FALSE(is_regular(nonnormal));

  auto reg = regular_cover(w, {t01, c3});
  EXPECT_EQ(reg.sheets, 6u);
  EXPECT_TRUE(is_regular(reg));
  EXPECT_TRUE(group_isomorphic(deck_group(reg), symmetric_group(3)).has_value());

  auto reg3 = regular_cover(w, {c3, c3});
  EXPECT_TRUE(group_isomorphic(deck_group(reg3), cyclic_group(3)).has_value());

  EXPECT_THROW(deck_group(trivial_cover(w, 2)), Error);
}

TEST(Deck, CentralizerAndNormalityAgree) {
  auto w = wedge_of_circles(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& c : classify_covers(w, n)) {
      auto loops = loop_permutations(c);
      auto deck = deck_transformations(c);
      EXPECT_EQ(deck.size(), centralizer_brute(loops, n).size());
      auto m = monodromy(c);
      const bool normal = is_normal(m.image.group, stabilizer(m.action, 0));
      EXPECT_EQ(is_regular(c), normal);
      EXPECT_EQ(is_regular(c), deck.size() == n);
    }
}

TEST(CoverCategory, RegularIsGaloisUpToFourSheets) {
  auto w = wedge_of_circles(2);
  auto cat = covers_as_category(w, 4);
  const auto& c = cat.category;
  EXPECT_EQ(c.object_count(), 60u);
  std::size_t connected = 0, regular = 0;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (!is_connected_name(c.object_name(x))) continue;
    ++connected;
    ASSERT_TRUE(is_connected(cat.covers[x]));
    const bool r = is_regular(cat.covers[x]);
    regular += r;
    EXPECT_EQ(r, is_galois_object(c, x)) << c.object_name(x);
  }
  EXPECT_EQ(connected, 1u + 3u + 7u + 26u);
  EXPECT_GT(regular, 0u);
  EXPECT_LT(regular, connected);
  // every class up to four sheets is present exactly once
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& cov : classify_covers(w, n)) EXPECT_TRUE(cat.find(cov).has_value());
}

TEST(CoverCategory, CircleCoversAreCyclicSets) {
  // finite covers of a circle = finite Z-sets; up to four points these are C12-sets
  auto cat = covers_as_category(wedge_of_circles(1), 4);
  auto g = share(cyclic_group(12));
  std::vector<GAction> gsets;
  for (const auto& a : gset_catalog(g, 4).objects)
    if (a.points() <= 4) gsets.push_back(a);
  auto gc = category_of_actions("C12-sets", gsets, 4);
  ASSERT_EQ(cat.category.object_count(), gsets.size());
  std::map<std::vector<std::size_t>, ObjectId> cover_by_type, gset_by_type;
  for (ObjectId x = 0; x < cat.category.object_count(); ++x)
    cover_by_type[cycle_type(loop_permutations(cat.covers[x])[0])] = x;
  for (ObjectId x = 0; x < gsets.size(); ++x) gset_by_type[cycle_type(gsets[x].element_map(1))] = x;
  ASSERT_EQ(cover_by_type.size(), gsets.size());
  for (const auto& [tx, cx] : cover_by_type)
    for (const auto& [ty, cy] : cover_by_type)
      EXPECT_EQ(cat.category.hom_size(cx, cy), gc.hom_size(gset_by_type.at(tx), gset_by_type.at(ty)));
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cl = classify_covers(wedge_of_circles(1), n);
    ASSERT_EQ(cl.size(), 1u);
    EXPECT_TRUE(group_isomorphic(deck_group(cl[0]), cyclic_group(n)).has_value());
  }
}

TEST(CoverCategory, ClosureOfNonRegularThreeSheetCover) {
  auto w = wedge_of_circles(2);
  const std::vector<Permutation> images{{1, 0, 2}, {1, 2, 0}};
  auto cat = covers_through(w, images, 6);
  auto x = cat.find(cover_from_action(w, images));
  ASSERT_TRUE(x.has_value());
  auto cl = galois_closure(cat.category, *x);
  const auto a = cl.certificate.node.object;
  EXPECT_EQ(cat.category.fiber_size(a), 6u);
  EXPECT_TRUE(is_regular(cat.covers[a]));
  EXPECT_TRUE(covers_isomorphic(cat.covers[a], regular_cover(w, images)));
  // core of the stabilizer of sheet 0 in the image is trivial, so the closure has |image| sheets
  auto m = monodromy(cat.covers[*x]);
  EXPECT_EQ(normal_core(m.image.group, stabilizer(m.action, 0)).members.size(), 1u);
}

TEST(CoverCategory, RegularCoverDominatesItsLevel) {
  auto w = wedge_of_circles(2);
  for (const auto& images : std::vector<std::vector<Permutation>>{{{1, 0, 2}, {1, 2, 0}}, {{1, 0, 3, 2}, {2, 3, 0, 1}}}) {
    auto reg = regular_cover(w, images);
    auto cat = covers_through(w, images, reg.sheets);
    auto r = cat.find(reg);
    ASSERT_TRUE(r.has_value());
    for (ObjectId x = 0; x < cat.category.object_count(); ++x)
      if (is_connected_name(cat.category.object_name(x)) && cat.category.fiber_size(x) > 0) {
        EXPECT_GT(cat.category.hom_size(*r, x), 0u) << cat.category.object_name(x);
      }
  }
}

TEST(CoverCategory, ReconstructionRecoversTheMonodromyImage) {
  auto w = wedge_of_circles(2);
  const std::vector<Permutation> images{{1, 0, 2}, {1, 2, 0}};
  auto cat = covers_through(w, images, 6);
  auto s3 = symmetric_group(3);
  auto r = reconstruct(cat.category, &s3);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.iso.has_value());
  auto m = monodromy(regular_cover(w, images));
  EXPECT_TRUE(group_isomorphic(r.thread->as_finite_group(), m.image.group).has_value());
}
