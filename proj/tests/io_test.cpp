#include <gtest/gtest.h>

#include "corpus.hpp"
#include "galois/io.hpp"

using namespace galois;
using namespace galois::io;

namespace {

std::pair<std::size_t, std::size_t> parse_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << e.what();
    if (e.witness().size() == 2) return {e.witness()[0], e.witness()[1]};
    return {0, 0};
  }
  ADD_FAILURE() << "no error";
  return {0, 0};
}

bool same_category(const FiniteConcreteCategory& a, const FiniteConcreteCategory& b) {
  if (a.object_count() != b.object_count()) return false;
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    if (a.fiber_size(x) != b.fiber_size(x) || a.object_name(x) != b.object_name(x)) return false;
    for (ObjectId y = 0; y < a.object_count(); ++y) {
      if (a.hom_size(x, y) != b.hom_size(x, y)) return false;
      for (const auto& f : a.hom(x, y))
        if (a.fiber(f) != b.fiber(f)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(GroupFormat, RoundTripIsExact) {
  auto all = corpus::groups();
  all.push_back(share(idempotent_monoid()));
  all.push_back(share(nilpotent_monoid()));
  all.push_back(share(full_transformation_monoid(2)));
  for (const auto& g : all) {
    const auto text = write_group(*g);
    auto f = parse_group(text);
    EXPECT_EQ(f.monoid, !g->is_group());
    auto back = build_group(f);
    EXPECT_TRUE(back->same_table(*g)) << g->name();
    EXPECT_EQ(back->name(), g->name());
    EXPECT_EQ(write_group(*back), text);
  }
}

TEST(GroupFormat, CommentsAndWrapping) {
  const char* text =
      "# the cyclic group of order 3\n"
      "group C3 3   # header\n"
      "compose\n"
      "0 1 2 1 2 0\n"
      "2 0 1\n"
      "\n";
  auto g = build_group(parse_group(text));
  EXPECT_TRUE(g->same_table(cyclic_group(3)));
  EXPECT_TRUE(g->is_group());
}

TEST(GroupFormat, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(parse_position([] { parse_group("groop C2 2\n"); }), std::make_pair(1ul, 1ul));
  EXPECT_EQ(parse_position([] { parse_group("group C2 2\ncompose\n0 1\n1 x\n"); }), std::make_pair(4ul, 3ul));
  EXPECT_EQ(parse_position([] { parse_group("group C2 2\ncompose\n0 1\n1 7\n"); }), std::make_pair(4ul, 3ul));
  EXPECT_EQ(parse_position([] { parse_group("group C2 2\ncompose\n0 1\n1\n"); }).first, 5ul);
  EXPECT_EQ(parse_position([] { parse_group("group C2 2\ncompose\n0 1\n1 0\ninverse 0 1 1\n"); }),
            std::make_pair(5ul, 13ul));
  EXPECT_EQ(parse_position([] { parse_group("group C2 two\n"); }), std::make_pair(1ul, 10ul));
  EXPECT_EQ(parse_position([] { parse_group("  \n# nothing\n"); }).first, 3ul);
  // a well-formed file with a bad table fails validation, not parsing
  try {
    build_group(parse_group("group B 2\ncompose\n0 0\n0 0\n"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(e.kind(), ErrorKind::ParseError);
  }
}

TEST(ActionFormat, RoundTrip) {
  auto s3 = share(symmetric_group(3));
  auto resolve = default_resolver();
  for (const auto& a : classify_transitive(s3)) {
    auto text = write_action(a, "S3");
    auto back = build_action(parse_action(text), resolve);
    EXPECT_EQ(back.table(), a.table());
    EXPECT_EQ(back.points(), a.points());
    EXPECT_EQ(write_action(back, "S3"), text);
  }
  auto empty = GAction(s3, 0, {}, "E");
  EXPECT_EQ(build_action(parse_action(write_action(empty, "S3")), resolve).points(), 0u);
}

TEST(ActionFormat, Errors) {
  auto resolve = default_resolver();
  EXPECT_EQ(parse_position([] { parse_action("action X over C2 2\n0 1\n1 0 0\n"); }), std::make_pair(3ul, 1ul));
  EXPECT_EQ(parse_position([] { parse_action("action X under C2 2\n"); }), std::make_pair(1ul, 10ul));
  EXPECT_EQ(parse_position([&] { build_action(parse_action("action X over Nope 1\n0\n"), resolve); }),
            std::make_pair(1ul, 15ul));
  EXPECT_THROW(build_action(parse_action("action X over C2 2\n0 1\n"), resolve), Error);
  // not an action: the generator does not square to the identity
  EXPECT_THROW(build_action(parse_action("action X over C2 2\n0 1\n0 0\n"), resolve), Error);
}

TEST(CategoryFormat, RoundTripFaithful) {
  auto c = transitive_gset_category(share(symmetric_group(3)));
  auto text = write_category(c);
  auto back = build_category(parse_category(text), default_resolver());
  EXPECT_TRUE(same_category(c, back));
  EXPECT_EQ(write_category(back), text);
  EXPECT_EQ(text.find("comp "), std::string::npos);
}

TEST(CategoryFormat, RoundTripWithComposites) {
  // one object, fiber one point, two arrows: identity and an idempotent e
  const char* text =
      "category idem\n"
      "obj x fiber 1\n"
      "arr id x x : 0\n"
      "arr e x x : 0\n"
      "comp id id = id\n"
      "comp id e = e\n"
      "comp e id = e\n"
      "comp e e = e\n";
  auto c = build_category(parse_category(text), default_resolver());
  EXPECT_FALSE(c.faithful());
  EXPECT_EQ(c.hom_size(0, 0), 2u);
  auto again = build_category(parse_category(write_category(c)), default_resolver());
  EXPECT_TRUE(same_category(c, again));
  EXPECT_EQ(write_category(again), write_category(c));
}

TEST(CategoryFormat, GeneratedCategories) {
  auto resolve = default_resolver();
  auto c = build_category(parse_category("category s3\ngsets S3 6\n"), resolve);
  EXPECT_TRUE(same_category(c, build_gset_category(share(symmetric_group(3)), 6)));
  auto t = build_category(parse_category("category t\ntransitive Q8\n"), resolve);
  EXPECT_EQ(t.object_count(), 6u);
  auto m = build_category(parse_category("category m\nmsets M2e 2\n"), resolve);
  EXPECT_EQ(m.object_count(), mset_objects(share(idempotent_monoid()), 2).size());
}

TEST(CategoryFormat, Errors) {
  auto resolve = default_resolver();
  EXPECT_EQ(parse_position([] { parse_category("category c\nobj x fiber 1\narr f x y : 0\n"); }),
            std::make_pair(3ul, 9ul));
  EXPECT_EQ(parse_position([] { parse_category("category c\nobj x fiber 2\narr f x x : 0\n"); }),
            std::make_pair(3ul, 1ul));
  EXPECT_EQ(parse_position([] { parse_category("category c\nobj x fiber 1\narr f x x : 3\n"); }),
            std::make_pair(3ul, 13ul));
  EXPECT_EQ(parse_position([] { parse_category("category c\nobj x fiber 1\nobj x fiber 1\n"); }),
            std::make_pair(3ul, 5ul));
  EXPECT_EQ(parse_position([] { parse_category("category c\nobj x fiber 1\narr f x x : 0\ncomp f g = f\n"); }),
            std::make_pair(4ul, 8ul));
  EXPECT_EQ(parse_position([] { parse_category("category c\nwhat\n"); }), std::make_pair(2ul, 1ul));
  EXPECT_EQ(parse_position([&] { build_category(parse_category("category c\ngsets Nope 3\n"), resolve); }),
            std::make_pair(2ul, 7ul));
  // well formed but not a category: no identity on x
  EXPECT_THROW(build_category(parse_category("category c\nobj x fiber 2\narr f x x : 0 0\n"), resolve), Error);
}

TEST(SystemFormat, RoundTrip) {
  const char* text =
      "system chain\n"
      "node a group Z/2\n"
      "node b group Z/4\n"
      "node c group Z/8\n"
      "edge b -> a : 0 1 0 1\n"
      "edge c -> b : 0 1 2 3 0 1 2 3\n";
  auto resolve = default_resolver();
  auto s = parse_system(text, resolve);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.refines(2, 0));
  EXPECT_EQ(write_system(s), text);
  EXPECT_EQ(parse_position([&] { parse_system("system s\nnode a group Z/2\nedge a -> b : 0 1\n", resolve); }),
            std::make_pair(3ul, 11ul));
  EXPECT_EQ(parse_position([&] { parse_system("system s\nnode a group M2e\n", resolve); }),
            std::make_pair(2ul, 14ul));
  EXPECT_EQ(parse_position([&] { parse_system("system s\nnode a group Z/2\nedge a -> a : 0\n", resolve); }),
            std::make_pair(3ul, 1ul));
  // well formed, not surjective
  EXPECT_THROW(parse_system("system s\nnode a group Z/2\nnode b group Z/4\nedge a -> b : 0 2\n", resolve), Error);
}

TEST(GraphFormat, RoundTripAndCovers) {
  const char* text =
      "graph theta\n"
      "v 2\n"
      "e 0 1\n"
      "e 0 1\n"
      "e 0 1\n"
      "base 0\n"
      "sheets 3\n"
      "perm 1 : 1 2 0\n"
      "perm 2 : 1 0 2\n";
  auto f = parse_graph(text);
  ASSERT_TRUE(f.cover.has_value());
  EXPECT_EQ(f.base->rank(), 2u);
  EXPECT_EQ(write_cover(*f.cover), text);
  EXPECT_EQ(loop_permutations(*f.cover), (std::vector<Permutation>{{1, 2, 0}, {1, 0, 2}}));
  auto g = parse_graph("graph w\nv 1\ne 0 0\ne 0 0\n");
  EXPECT_FALSE(g.cover.has_value());
  EXPECT_EQ(g.base->rank(), 2u);
  EXPECT_EQ(write_graph(*g.base), "graph w\nv 1\ne 0 0\ne 0 0\nbase 0\n");
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(parse_position([] { parse_graph("graph g\ne 0 0\n"); }), std::make_pair(2ul, 1ul));
  EXPECT_EQ(parse_position([] { parse_graph("graph g\nv 1\ne 0 4\n"); }), std::make_pair(3ul, 5ul));
  EXPECT_EQ(parse_position([] { parse_graph("graph g\nv 1\ne 0 0\nperm 0 : 0\n"); }), std::make_pair(4ul, 1ul));
  EXPECT_EQ(parse_position([] { parse_graph("graph g\nv 1\ne 0 0\nsheets 2\nperm 0 : 1 1\n"); }),
            std::make_pair(5ul, 10ul));
  EXPECT_EQ(parse_position([] { parse_graph("graph g\nv 1\ne 0 0\nsheets 2\nperm 3 : 1 0\n"); }),
            std::make_pair(5ul, 6ul));
  EXPECT_EQ(parse_position([] { parse_graph("graph g\nv 1\ne 0 0\nsheets 2\nperm 0 : 1\n"); }),
            std::make_pair(5ul, 1ul));
  EXPECT_THROW(parse_graph("graph g\nv 2\ne 0 0\n"), Error);  // disconnected base
}

TEST(Files, MissingFile) {
  try {
    read_file("/nonexistent/file.group");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FileNotFound);
  }
}
