#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "galois/algebra.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

ErrorKind kind_of(const RawTable& raw) {
  try {
    validate_group(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;  // sentinel: accepted
}

}  // namespace

TEST(Validate, TrivialAndCyclic) {
  auto g = validate_group(RawTable{"1", 1, {0}, {}});
  EXPECT_EQ(g.size(), 1u);
  auto c3 = validate_group(RawTable{"C3", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {}});
  EXPECT_EQ(c3.inverse(1), 2u);
  EXPECT_EQ(c3.inverse(2), 1u);
}

TEST(Validate, ReportsFirstViolation) {
  // identity 0, 1 and 2 left zeros: associative, but 1 has no inverse
  RawTable left_zero{"lz", 3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, {}};
  EXPECT_EQ(kind_of(left_zero), ErrorKind::BadInverse);
  try {
    validate_group(left_zero);
  } catch (const Error& e) {
    EXPECT_EQ(e.witness(), std::vector<std::size_t>{1});
  }
  EXPECT_NO_THROW(validate_monoid(left_zero));

  RawTable nonassoc{"na", 2, {1, 0, 0, 0}, {}};
  EXPECT_EQ(kind_of(nonassoc), ErrorKind::NonAssociative);

  RawTable no_id{"z", 2, {0, 0, 0, 0}, {}};
  EXPECT_EQ(kind_of(no_id), ErrorKind::BadIdentity);

  RawTable wrong_inv{"C3", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 1, 2}};
  EXPECT_EQ(kind_of(wrong_inv), ErrorKind::BadInverse);

  RawTable bad_entry{"x", 2, {0, 1, 1, 5}, {}};
  EXPECT_EQ(kind_of(bad_entry), ErrorKind::MalformedTable);
}

TEST(Validate, SizeCap) {
  auto c = cyclic_group(70);
  EXPECT_THROW(validate_group(c.raw()), Error);
  EXPECT_NO_THROW(validate_group(c.raw(), 128));
  EXPECT_THROW(subgroups(c), Error);
}

TEST(Validate, CatalogAndOpposites) {
  for (const auto& m : corpus::groups()) {
    const auto& g = as_group(*m);
    EXPECT_NO_THROW(validate_group(g.raw())) << g.name();
    auto op = opposite(g);
    EXPECT_NO_THROW(validate_group(op.raw()));
    auto opop = opposite(op);
    EXPECT_EQ(opop.table(), g.table()) << g.name();
    EXPECT_EQ(opop.name(), g.name());
  }
  auto c4 = cyclic_group(4);
  EXPECT_EQ(opposite(c4).table(), c4.table());
  EXPECT_EQ(symmetric_group(3).size(), 6u);
  EXPECT_EQ(dihedral_group(4).size(), 8u);
  EXPECT_EQ(alternating_group(4).size(), 12u);
  EXPECT_EQ(quaternion_group().size(), 8u);
}

TEST(Subgroups, MatchSubsetOracle) {
  for (const auto& m : corpus::groups()) {
    const auto& g = as_group(*m);
    auto subs = subgroups(g);
    auto brute = oracle::subgroups_by_subsets(g);
    ASSERT_EQ(subs.size(), brute.size()) << g.name();
    std::set<std::vector<Element>> a(brute.begin(), brute.end()), b;
    for (const auto& h : subs) {
      EXPECT_TRUE(is_subgroup(g, h));
      b.insert(h.members);
    }
    EXPECT_EQ(a, b) << g.name();
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end(), canonical_less));
    EXPECT_EQ(conjugacy_classes_of_subgroups(g).size(), oracle::conjugacy_class_count(g))
        << g.name();
  }
}

TEST(Subgroups, FrozenCounts) {
  EXPECT_EQ(subgroups(trivial_group()).size(), 1u);
  EXPECT_EQ(subgroups(symmetric_group(3)).size(), 6u);
  auto v4 = klein_four_group();
  auto vs = subgroups(v4);
  EXPECT_EQ(vs.size(), 5u);
  for (const auto& h : vs) EXPECT_TRUE(is_normal(v4, h));
  EXPECT_EQ(conjugacy_classes_of_subgroups(symmetric_group(3)).size(), 4u);
  auto d4 = dihedral_group(4);
  EXPECT_EQ(subgroups(d4).size(), 10u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(d4).size(), 8u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(quaternion_group()).size(), 6u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(alternating_group(4)).size(), 5u);
  for (const auto& cls : conjugacy_classes_of_subgroups(cyclic_group(4)))
    EXPECT_EQ(cls.size(), 1u);
}

TEST(Subgroups, CountInvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (const auto& m : corpus::groups()) {
    const auto& g = as_group(*m);
    for (int rep = 0; rep < 3; ++rep) {
      auto h = oracle::relabel_group(g, rng);
      EXPECT_EQ(subgroups(h).size(), subgroups(g).size());
      EXPECT_TRUE(group_isomorphic(g, h).has_value());
    }
  }
}

TEST(NormalCore, ExhaustiveProperties) {
  for (const auto& m : corpus::groups()) {
    const auto& g = as_group(*m);
    auto subs = subgroups(g);
    for (const auto& h : subs) {
      auto core = normal_core(g, h);
      EXPECT_TRUE(is_subgroup(g, core));
      EXPECT_TRUE(is_normal(g, core));
      for (auto x : core.members) EXPECT_TRUE(h.contains(x));
      for (const auto& n : subs) {
        if (!is_normal(g, n)) continue;
        bool inside = std::all_of(n.members.begin(), n.members.end(),
                                  [&](Element x) { return h.contains(x); });
        if (!inside) continue;
        for (auto x : n.members) EXPECT_TRUE(core.contains(x));
      }
      if (is_normal(g, h)) {
        EXPECT_EQ(core, h);
      }
    }
  }
}

TEST(NormalCore, S3TranspositionAndD4Center) {
  auto s3 = symmetric_group(3);
  // a transposition: order 2 element
  Element t = 0;
  for (Element x = 0; x < 6; ++x)
    if (element_order(s3, x) == 2) {
      t = x;
      break;
    }
  Subgroup h{generated(s3, {t})};
  EXPECT_EQ(normal_core(s3, h), trivial_subgroup(s3));
  auto d4 = dihedral_group(4);
  Subgroup center;
  for (Element z = 0; z < 8; ++z) {
    bool central = true;
    for (Element x = 0; x < 8; ++x) central &= d4.compose(z, x) == d4.compose(x, z);
    if (central) center.members.push_back(z);
  }
  EXPECT_EQ(center.size(), 2u);
  EXPECT_EQ(normal_core(d4, center), center);
  EXPECT_THROW(normal_core(d4, Subgroup{{1}}), Error);
}

TEST(Isomorphism, Witnesses) {
  EXPECT_FALSE(group_isomorphic(cyclic_group(4), klein_four_group()).has_value());
  auto s3 = symmetric_group(3);
  auto op = opposite(s3);
  auto iso = group_isomorphic(s3, op);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_homomorphism(s3, op, iso->map));
  // inversion is an explicit isomorphism G -> G^op
  EXPECT_TRUE(is_homomorphism(s3, op, s3.inverse_table()));
  EXPECT_FALSE(group_isomorphic(quaternion_group(), dihedral_group(4)).has_value());
  EXPECT_FALSE(group_isomorphic(symmetric_group(3), cyclic_group(6)).has_value());
  EXPECT_TRUE(group_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
}

TEST(Homomorphisms, ImageAndKernel) {
  auto c4 = cyclic_group(4), c2 = cyclic_group(2);
  GroupHom f = make_hom(c4, c2, {0, 1, 0, 1});
  EXPECT_TRUE(hom_is_surjective(f, c2));
  EXPECT_EQ(hom_kernel(f, c2).members, (std::vector<Element>{0, 2}));
  EXPECT_THROW(make_hom(c4, c2, {0, 1, 1, 0}), Error);
}

TEST(Monoids, Catalog) {
  auto m2 = idempotent_monoid();
  EXPECT_EQ(m2.size(), 2u);
  EXPECT_FALSE(m2.is_group());
  EXPECT_EQ(m2.compose(1, 1), 1u);
  auto m3 = nilpotent_monoid();
  EXPECT_EQ(m3.size(), 3u);
  EXPECT_EQ(full_transformation_monoid(2).size(), 4u);
  EXPECT_THROW(as_group(m3), Error);
  EXPECT_TRUE(named_monoid("S3")->is_group());
  EXPECT_NO_THROW(as_group(*named_monoid("Q8")));
}
