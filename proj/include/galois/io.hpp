#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "galois/coverings.hpp"
#include "galois/profinite.hpp"

// Text formats. One record per file, whitespace separated, '#' to end of
// line is a comment. Every parse failure is an Error of kind ParseError
// whose witness is {line, column}, both 1-based.
namespace galois::io {

struct Token {
  std::string text;
  std::size_t line = 0, col = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string source) : source_(std::move(source)) {
    std::size_t line = 1, col = 1;
    std::vector<Token> cur;
    std::string word;
    std::size_t wl = 0, wc = 0;
    bool comment = false;
    auto flush = [&] {
      if (!word.empty()) cur.push_back({word, wl, wc});
      word.clear();
    };
    for (char ch : text) {
      if (ch == '\n') {
        flush();
        if (!cur.empty()) lines_.push_back(std::move(cur));
        cur.clear();
        comment = false;
        ++line;
        col = 1;
        continue;
      }
      if (!comment && ch == '#') {
        flush();
        comment = true;
      }
      if (!comment) {
        if (ch == ' ' || ch == '\t' || ch == '\r') {
          flush();
        } else {
          if (word.empty()) {
            wl = line;
            wc = col;
          }
          word += ch;
        }
      }
      ++col;
    }
    flush();
    if (!cur.empty()) lines_.push_back(std::move(cur));
    end_line_ = line;
    end_col_ = col;
  }

  const std::vector<std::vector<Token>>& lines() const { return lines_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg,
                {line, col});
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { fail(t.line, t.col, msg); }
  [[noreturn]] void fail_at_end(const std::string& msg) const { fail(end_line_, end_col_, msg); }

  std::size_t number(const Token& t) const {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(t, "expected a non-negative integer, got '" + t.text + "'");
    return v;
  }
  void expect_word(const Token& t, std::string_view w) const {
    if (t.text != w) fail(t, "expected '" + std::string(w) + "', got '" + t.text + "'");
  }
  void expect_arity(const std::vector<Token>& line, std::size_t n) const {
    if (line.size() < n) fail(line.back().line, line.back().col + line.back().text.size(), "too few fields");
    if (line.size() > n) fail(line[n], "unexpected '" + line[n].text + "'");
  }
  // tokens from index `from` to the end of the line, as integers
  std::vector<std::size_t> numbers(const std::vector<Token>& line, std::size_t from) const {
    std::vector<std::size_t> v;
    for (std::size_t k = from; k < line.size(); ++k) v.push_back(number(line[k]));
    return v;
  }

 private:
  std::string source_;
  std::vector<std::vector<Token>> lines_;
  std::size_t end_line_ = 1, end_col_ = 1;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- groups and monoids ----

struct GroupFile {
  RawTable raw;
  bool monoid = false;  // header 'monoid' instead of 'group'
};

inline GroupFile parse_group(std::string_view text, std::string source = "<group>") {
  Lexer lx(text, std::move(source));
  const auto& L = lx.lines();
  if (L.empty()) lx.fail_at_end("empty file, expected 'group <name> <size>'");
  GroupFile f;
  const auto& h = L[0];
  if (h[0].text != "group" && h[0].text != "monoid") lx.fail(h[0], "expected 'group' or 'monoid'");
  lx.expect_arity(h, 3);
  f.monoid = h[0].text == "monoid";
  f.raw.name = h[1].text;
  f.raw.size = lx.number(h[2]);
  if (f.raw.size == 0) lx.fail(h[2], "size must be positive");
  const auto n = f.raw.size;
  // blocks may wrap lines freely
  std::vector<Token> rest;
  for (std::size_t i = 1; i < L.size(); ++i) rest.insert(rest.end(), L[i].begin(), L[i].end());
  std::size_t k = 0;
  auto take = [&](std::size_t count, std::vector<Element>& out, const char* what) {
    for (std::size_t i = 0; i < count; ++i) {
      if (k == rest.size()) lx.fail_at_end(std::string(what) + " block ends early: " + std::to_string(i) + " of " +
                                           std::to_string(count) + " entries");
      if (rest[k].text == "inverse" || rest[k].text == "compose")
        lx.fail(rest[k], std::string(what) + " block ends early: " + std::to_string(i) + " of " +
                             std::to_string(count) + " entries");
      auto v = lx.number(rest[k]);
      if (v >= n) lx.fail(rest[k], "entry " + std::to_string(v) + " out of range");
      out.push_back(v);
      ++k;
    }
  };
  if (k == rest.size()) lx.fail_at_end("missing 'compose' block");
  lx.expect_word(rest[k++], "compose");
  take(n * n, f.raw.compose, "compose");
  if (k < rest.size()) {
    lx.expect_word(rest[k++], "inverse");
    take(n, f.raw.inverse, "inverse");
  }
  if (k < rest.size()) lx.fail(rest[k], "unexpected '" + rest[k].text + "'");
  return f;
}

inline std::shared_ptr<const FiniteMonoid> build_group(const GroupFile& f, std::size_t cap = kDefaultGroupCap) {
  if (f.monoid) {
    auto m = validate_monoid(f.raw, cap);
    return share(std::move(m));
  }
  return share(validate_group(f.raw, cap));
}

inline std::string write_group(const FiniteMonoid& m) {
  std::ostringstream o;
  const auto n = m.size();
  o << (m.is_group() ? "group " : "monoid ") << m.name() << ' ' << n << "\ncompose\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) o << (b ? " " : "") << m.compose(a, b);
    o << '\n';
  }
  if (m.is_group()) {
    o << "inverse\n";
    for (Element a = 0; a < n; ++a) o << (a ? " " : "") << m.inverse_table()[a];
    o << '\n';
  }
  return o.str();
}

// Names resolve to the built-in catalog first, then to <dir>/<name>.group.
using GroupResolver = std::function<std::shared_ptr<const FiniteMonoid>(const std::string&)>;

inline GroupResolver default_resolver(std::filesystem::path dir = {}, std::size_t cap = kDefaultGroupCap) {
  auto cache = std::make_shared<std::map<std::string, std::shared_ptr<const FiniteMonoid>>>();
  return [dir, cap, cache](const std::string& name) -> std::shared_ptr<const FiniteMonoid> {
    if (auto it = cache->find(name); it != cache->end()) return it->second;
    std::shared_ptr<const FiniteMonoid> g = named_monoid(name);
    if (!g) {
      auto p = dir / (name + ".group");
      if (std::filesystem::exists(p)) g = build_group(parse_group(read_file(p.string()), p.string()), cap);
    }
    (*cache)[name] = g;
    return g;
  };
}

// ---- actions ----

struct ActionFile {
  std::string name, group;
  std::size_t points = 0;
  std::vector<std::vector<Point>> rows;
  Token group_token;
};

inline ActionFile parse_action(std::string_view text, std::string source = "<action>") {
  Lexer lx(text, std::move(source));
  const auto& L = lx.lines();
  if (L.empty()) lx.fail_at_end("empty file, expected 'action <name> over <group> <points>'");
  const auto& h = L[0];
  lx.expect_word(h[0], "action");
  lx.expect_arity(h, 5);
  lx.expect_word(h[2], "over");
  ActionFile f{h[1].text, h[3].text, lx.number(h[4]), {}, h[3]};
  for (std::size_t i = 1; i < L.size(); ++i) {
    if (L[i].size() != f.points)
      lx.fail(L[i][0], "row has " + std::to_string(L[i].size()) + " entries, expected " + std::to_string(f.points));
    auto row = lx.numbers(L[i], 0);
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] >= f.points) lx.fail(L[i][k], "point " + std::to_string(row[k]) + " out of range");
    f.rows.push_back(std::move(row));
  }
  return f;
}

inline GAction build_action(const ActionFile& f, const GroupResolver& resolve, const std::string& source = "<action>") {
  auto g = resolve(f.group);
  if (!g)
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(f.group_token.line) + ":" + std::to_string(f.group_token.col) +
                    ": unknown group '" + f.group + "'",
                {f.group_token.line, f.group_token.col});
  // an empty set has no rows to write
  if (f.rows.size() != g->size() && !(f.points == 0 && f.rows.empty()))
    throw Error(ErrorKind::ParseError,
                source + ": expected " + std::to_string(g->size()) + " rows, got " + std::to_string(f.rows.size()),
                {f.group_token.line, f.group_token.col});
  std::vector<Point> table;
  for (const auto& r : f.rows) table.insert(table.end(), r.begin(), r.end());
  return GAction(g, f.points, std::move(table), f.name);
}

inline std::string write_action(const GAction& a, std::string group_name = {}) {
  if (group_name.empty()) group_name = a.actor().name();
  std::ostringstream o;
  o << "action " << (a.name().empty() ? "X" : a.name()) << " over " << group_name << ' ' << a.points() << '\n';
  if (a.points() == 0) return o.str();
  for (Element g = 0; g < a.actor().size(); ++g) {
    for (Point x = 0; x < a.points(); ++x) o << (x ? " " : "") << a.act(g, x);
    o << '\n';
  }
  return o.str();
}

// ---- categories ----

// A category file either lists objects and arrows (optionally after
// 'cap <k>', a promise that every object up to k points is present), or
// names a generated category with one of
//   gsets <group> <max-points>     every G-set up to that size
//   transitive <group>             one transitive G-set per conjugacy class
//   msets <monoid> <max-points>    every M-set up to that size
struct CategoryFile {
  TableCategoryData table;
  std::optional<std::size_t> cap;  // 'cap <k>': every object up to k points is listed
  std::optional<std::string> generator;  // gsets | transitive | msets
  std::string group;
  std::size_t max_points = 0;
  Token group_token;
};

inline CategoryFile parse_category(std::string_view text, std::string source = "<category>") {
  Lexer lx(text, std::move(source));
  const auto& L = lx.lines();
  if (L.empty()) lx.fail_at_end("empty file, expected 'category <name>'");
  CategoryFile f;
  lx.expect_word(L[0][0], "category");
  lx.expect_arity(L[0], 2);
  f.table.name = L[0][1].text;
  std::map<std::string, std::size_t> objs, arrs;
  for (std::size_t i = 1; i < L.size(); ++i) {
    const auto& l = L[i];
    const auto& kw = l[0].text;
    if (f.generator) lx.fail(l[0], "nothing may follow a generated category line");
    if (kw == "cap") {
      lx.expect_arity(l, 2);
      if (f.cap) lx.fail(l[0], "cap given twice");
      f.cap = lx.number(l[1]);
    } else if (kw == "obj") {
      lx.expect_arity(l, 4);
      lx.expect_word(l[2], "fiber");
      if (!objs.emplace(l[1].text, f.table.objects.size()).second) lx.fail(l[1], "object '" + l[1].text + "' defined twice");
      f.table.objects.push_back({l[1].text, lx.number(l[3])});
    } else if (kw == "arr") {
      if (l.size() < 5) lx.expect_arity(l, 5);
      lx.expect_word(l[4], ":");
      auto src = objs.find(l[2].text), dst = objs.find(l[3].text);
      if (src == objs.end()) lx.fail(l[2], "unknown object '" + l[2].text + "'");
      if (dst == objs.end()) lx.fail(l[3], "unknown object '" + l[3].text + "'");
      const auto k = f.table.objects[src->second].fiber;
      if (l.size() - 5 != k)
        lx.fail(l[0], "arrow '" + l[1].text + "' has " + std::to_string(l.size() - 5) + " fiber entries, expected " +
                          std::to_string(k));
      auto fib = lx.numbers(l, 5);
      for (std::size_t j = 0; j < fib.size(); ++j)
        if (fib[j] >= f.table.objects[dst->second].fiber) lx.fail(l[5 + j], "fiber entry out of range");
      if (!arrs.emplace(l[1].text, f.table.arrows.size()).second) lx.fail(l[1], "arrow '" + l[1].text + "' defined twice");
      f.table.arrows.push_back({l[1].text, src->second, dst->second, std::move(fib)});
    } else if (kw == "comp") {
      lx.expect_arity(l, 5);
      lx.expect_word(l[3], "=");
      std::size_t ids[3];
      const std::size_t pos[3] = {1, 2, 4};
      for (int j = 0; j < 3; ++j) {
        auto it = arrs.find(l[pos[j]].text);
        if (it == arrs.end()) lx.fail(l[pos[j]], "unknown arrow '" + l[pos[j]].text + "'");
        ids[j] = it->second;
      }
      f.table.composites.push_back({ids[0], ids[1], ids[2]});
    } else if (kw == "gsets" || kw == "msets" || kw == "transitive") {
      if (!f.table.objects.empty()) lx.fail(l[0], "generated category cannot also list objects");
      lx.expect_arity(l, kw == "transitive" ? 2 : 3);
      f.generator = kw;
      f.group = l[1].text;
      f.group_token = l[1];
      if (kw != "transitive") f.max_points = lx.number(l[2]);
    } else {
      lx.fail(l[0], "unknown record '" + kw + "'");
    }
  }
  return f;
}

inline FiniteConcreteCategory build_category(const CategoryFile& f, const GroupResolver& resolve,
                                             const std::string& source = "<category>") {
  if (!f.generator) return make_table_category(f.table, f.cap);
  auto g = resolve(f.group);
  if (!g)
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(f.group_token.line) + ":" + std::to_string(f.group_token.col) +
                    ": unknown group '" + f.group + "'",
                {f.group_token.line, f.group_token.col});
  if (*f.generator == "transitive") return transitive_gset_category(g);
  if (*f.generator == "gsets") {
    if (!g->is_group()) throw Error(ErrorKind::MonoidActorUnsupported, f.group + " is not a group");
    return build_gset_category(g, f.max_points);
  }
  return build_mset_category(g, f.max_points);
}

inline std::string write_category(const FiniteConcreteCategory& c) {
  auto d = to_table(c);
  std::ostringstream o;
  o << "category " << d.name << '\n';
  if (c.fiber_cap()) o << "cap " << *c.fiber_cap() << '\n';
  for (const auto& x : d.objects) o << "obj " << x.name << " fiber " << x.fiber << '\n';
  for (const auto& a : d.arrows) {
    o << "arr " << a.name << ' ' << d.objects[a.src].name << ' ' << d.objects[a.dst].name << " :";
    for (auto y : a.fiber) o << ' ' << y;
    o << '\n';
  }
  for (const auto& k : d.composites)
    o << "comp " << d.arrows[k.g].name << ' ' << d.arrows[k.f].name << " = " << d.arrows[k.h].name << '\n';
  return o.str();
}

// ---- inverse systems ----

inline InverseSystem parse_system(std::string_view text, const GroupResolver& resolve,
                                  std::string source = "<system>") {
  Lexer lx(text, std::move(source));
  const auto& L = lx.lines();
  if (L.empty()) lx.fail_at_end("empty file, expected 'system <name>'");
  lx.expect_word(L[0][0], "system");
  lx.expect_arity(L[0], 2);
  std::vector<std::string> names;
  std::vector<std::shared_ptr<const FiniteMonoid>> groups;
  std::vector<SystemEdge> edges;
  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 1; i < L.size(); ++i) {
    const auto& l = L[i];
    if (l[0].text == "node") {
      lx.expect_arity(l, 4);
      lx.expect_word(l[2], "group");
      auto g = resolve(l[3].text);
      if (!g) lx.fail(l[3], "unknown group '" + l[3].text + "'");
      if (!g->is_group()) lx.fail(l[3], "'" + l[3].text + "' is not a group");
      if (!ids.emplace(l[1].text, names.size()).second) lx.fail(l[1], "node '" + l[1].text + "' defined twice");
      names.push_back(l[1].text);
      groups.push_back(g);
    } else if (l[0].text == "edge") {
      if (l.size() < 5) lx.expect_arity(l, 5);
      lx.expect_word(l[2], "->");
      lx.expect_word(l[4], ":");
      auto hi = ids.find(l[1].text), lo = ids.find(l[3].text);
      if (hi == ids.end()) lx.fail(l[1], "unknown node '" + l[1].text + "'");
      if (lo == ids.end()) lx.fail(l[3], "unknown node '" + l[3].text + "'");
      const auto n = groups[hi->second]->size();
      if (l.size() - 5 != n)
        lx.fail(l[0], "edge needs " + std::to_string(n) + " images, got " + std::to_string(l.size() - 5));
      auto map = lx.numbers(l, 5);
      for (std::size_t j = 0; j < map.size(); ++j)
        if (map[j] >= groups[lo->second]->size()) lx.fail(l[5 + j], "image out of range");
      edges.push_back({hi->second, lo->second, GroupHom{std::move(map)}});
    } else {
      lx.fail(l[0], "unknown record '" + l[0].text + "'");
    }
  }
  return InverseSystem(L[0][1].text, names, groups, edges);
}

inline std::string write_system(const InverseSystem& s) {
  std::ostringstream o;
  o << "system " << s.name() << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) o << "node " << s.node_name(i) << " group " << s.group(i).name() << '\n';
  for (const auto& e : s.edges()) {
    o << "edge " << s.node_name(e.hi) << " -> " << s.node_name(e.lo) << " :";
    for (auto y : e.map.map) o << ' ' << y;
    o << '\n';
  }
  return o.str();
}

// ---- graphs and covers ----

struct GraphFile {
  std::shared_ptr<const BaseGraph> base;
  std::optional<GraphCover> cover;  // present when 'sheets' is given
};

inline GraphFile parse_graph(std::string_view text, std::string source = "<graph>") {
  Lexer lx(text, std::move(source));
  const auto& L = lx.lines();
  if (L.empty()) lx.fail_at_end("empty file, expected 'graph <name>'");
  lx.expect_word(L[0][0], "graph");
  lx.expect_arity(L[0], 2);
  std::optional<std::size_t> vertices, base, sheets;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<Token, std::vector<std::size_t>>> perms;
  for (std::size_t i = 1; i < L.size(); ++i) {
    const auto& l = L[i];
    const auto& kw = l[0].text;
    if (kw == "v") {
      lx.expect_arity(l, 2);
      if (vertices) lx.fail(l[0], "vertex count given twice");
      vertices = lx.number(l[1]);
    } else if (kw == "e") {
      lx.expect_arity(l, 3);
      if (!vertices) lx.fail(l[0], "'v' must come before edges");
      auto u = lx.number(l[1]), v = lx.number(l[2]);
      if (u >= *vertices) lx.fail(l[1], "vertex out of range");
      if (v >= *vertices) lx.fail(l[2], "vertex out of range");
      edges.push_back({u, v});
    } else if (kw == "base") {
      lx.expect_arity(l, 2);
      base = lx.number(l[1]);
      if (vertices && *base >= *vertices) lx.fail(l[1], "basepoint out of range");
    } else if (kw == "sheets") {
      lx.expect_arity(l, 2);
      if (sheets) lx.fail(l[0], "sheet count given twice");
      sheets = lx.number(l[1]);
    } else if (kw == "perm") {
      if (!sheets) lx.fail(l[0], "'sheets' must come before 'perm'");
      if (l.size() < 3) lx.expect_arity(l, 3);
      lx.expect_word(l[2], ":");
      if (l.size() - 3 != *sheets)
        lx.fail(l[0], "permutation needs " + std::to_string(*sheets) + " entries, got " + std::to_string(l.size() - 3));
      std::vector<std::size_t> p{lx.number(l[1])};
      auto rest = lx.numbers(l, 3);
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (rest[j] >= *sheets) lx.fail(l[3 + j], "sheet out of range");
      if (!detail::is_permutation(rest, *sheets)) lx.fail(l[3], "not a permutation");
      p.insert(p.end(), rest.begin(), rest.end());
      perms.push_back({l[1], std::move(p)});
    } else {
      lx.fail(l[0], "unknown record '" + kw + "'");
    }
  }
  if (!vertices) lx.fail_at_end("missing 'v <count>'");
  if (!base) base = 0;
  GraphFile f;
  f.base = std::make_shared<const BaseGraph>(L[0][1].text, *vertices, edges, *base);
  if (sheets) {
    auto cov = trivial_cover(f.base, *sheets);
    std::vector<char> seen(edges.size(), 0);
    for (const auto& [tok, p] : perms) {
      if (p[0] >= edges.size()) lx.fail(tok, "edge index out of range");
      if (seen[p[0]]) lx.fail(tok, "edge " + std::to_string(p[0]) + " given twice");
      seen[p[0]] = 1;
      cov.voltage[p[0]].assign(p.begin() + 1, p.end());
    }
    f.cover = std::move(cov);
  }
  return f;
}

inline std::string write_graph(const BaseGraph& b) {
  std::ostringstream o;
  o << "graph " << b.name() << "\nv " << b.vertex_count() << '\n';
  for (auto [u, v] : b.edges()) o << "e " << u << ' ' << v << '\n';
  o << "base " << b.base() << '\n';
  return o.str();
}

// Only non-identity voltages are written.
inline std::string write_cover(const GraphCover& c) {
  std::ostringstream o;
  o << write_graph(*c.base) << "sheets " << c.sheets << '\n';
  for (std::size_t e = 0; e < c.voltage.size(); ++e) {
    if (c.voltage[e] == detail::identity_map(c.sheets)) continue;
    o << "perm " << e << " :";
    for (auto y : c.voltage[e]) o << ' ' << y;
    o << '\n';
  }
  return o.str();
}

}  // namespace galois::io
