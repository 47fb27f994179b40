#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois/category.hpp"

namespace galois {

// Finite connected graph with a basepoint. Loops and multi-edges are fine.
// The spanning tree is breadth-first from the basepoint, lowest edge index
// first; the remaining edges index the free generators of the fundamental group.
class BaseGraph {
 public:
  BaseGraph(std::string name, std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
            std::size_t base = 0)
      : name_(std::move(name)), n_(vertices), edges_(std::move(edges)), base_(base) {
    if (n_ == 0) throw Error(ErrorKind::InvalidGraph, "graph has no vertices");
    if (base_ >= n_) throw Error(ErrorKind::InvalidGraph, "basepoint out of range", {base_});
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].first >= n_ || edges_[i].second >= n_)
        throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(i) + " has unknown endpoint", {i});
    build_tree();
  }

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t base() const { return base_; }
  bool is_tree_edge(std::size_t e) const { return tree_[e]; }
  const std::vector<std::size_t>& generator_edges() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }

  // tree path from the basepoint to v, as (edge, forward?) steps
  const std::vector<std::pair<std::size_t, bool>>& path_to(std::size_t v) const { return paths_[v]; }

 private:
  void build_tree() {
    tree_.assign(edges_.size(), false);
    paths_.assign(n_, {});
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> queue{base_};
    seen[base_] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        std::size_t v;
        bool forward;
        if (a == u && !seen[b]) {
          v = b;
          forward = true;
        } else if (b == u && !seen[a]) {
          v = a;
          forward = false;
        } else {
          continue;
        }
        seen[v] = 1;
        tree_[e] = true;
        paths_[v] = paths_[u];
        paths_[v].push_back({e, forward});
        queue.push_back(v);
      }
    }
    if (queue.size() != n_) throw Error(ErrorKind::InvalidGraph, "graph " + name_ + " is not connected");
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!tree_[e]) gens_.push_back(e);
  }

  std::string name_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::size_t base_;
  std::vector<bool> tree_;
  std::vector<std::vector<std::pair<std::size_t, bool>>> paths_;
  std::vector<std::size_t> gens_;
};

inline std::shared_ptr<const BaseGraph> wedge_of_circles(std::size_t r) {
  return std::make_shared<const BaseGraph>("wedge" + std::to_string(r), 1,
                                           std::vector<std::pair<std::size_t, std::size_t>>(r, {0, 0}), 0);
}

// Permutation voltages: crossing edge e = (u, v) forwards takes sheet i over
// u to sheet voltage[e][i] over v.
struct GraphCover {
  std::shared_ptr<const BaseGraph> base;
  std::size_t sheets = 0;
  std::vector<Permutation> voltage;  // one per edge of the base
};

namespace detail {

inline bool is_permutation(const Permutation& p, std::size_t n) {
  return p.size() == n && is_injective(p, n);
}

inline Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

inline void require_cover(const GraphCover& c) {
  if (!c.base) throw Error(ErrorKind::InvalidGraph, "cover without base");
  if (c.voltage.size() != c.base->edges().size())
    throw Error(ErrorKind::InvalidGraph, "cover needs one voltage per edge");
  for (std::size_t e = 0; e < c.voltage.size(); ++e)
    if (!is_permutation(c.voltage[e], c.sheets))
      throw Error(ErrorKind::InvalidGraph, "voltage on edge " + std::to_string(e) + " is not a permutation", {e});
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

inline GraphCover trivial_cover(const std::shared_ptr<const BaseGraph>& base, std::size_t sheets) {
  return GraphCover{base, sheets, std::vector<Permutation>(base->edges().size(), detail::identity_map(sheets))};
}

// Lift of each generator loop (tree path, generator edge, tree path back),
// as a permutation of the fiber over the basepoint.
inline std::vector<Permutation> loop_permutations(const GraphCover& cov) {
  detail::require_cover(cov);
  const auto& b = *cov.base;
  auto walk = [&](Permutation p, std::size_t e, bool forward) {
    const auto& v = forward ? cov.voltage[e] : detail::invert(cov.voltage[e]);
    return detail::compose_maps(v, p);
  };
  std::vector<Permutation> out;
  for (auto e : b.generator_edges()) {
    auto [u, v] = b.edges()[e];
    auto p = detail::identity_map(cov.sheets);
    for (auto [te, f] : b.path_to(u)) p = walk(p, te, f);
    p = walk(p, e, true);
    const auto& back = b.path_to(v);
    for (auto it = back.rbegin(); it != back.rend(); ++it) p = walk(p, it->first, !it->second);
    out.push_back(std::move(p));
  }
  return out;
}

// Tree edges carry the identity, generator edges the given permutations.
inline GraphCover cover_from_action(const std::shared_ptr<const BaseGraph>& base, const std::vector<Permutation>& gens) {
  if (gens.size() != base->rank())
    throw Error(ErrorKind::InvalidGraph, "need one permutation per generator", {gens.size(), base->rank()});
  const std::size_t n = gens.empty() ? 0 : gens[0].size();
  auto cov = trivial_cover(base, n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!detail::is_permutation(gens[i], n))
      throw Error(ErrorKind::InvalidGraph, "generator image " + std::to_string(i) + " is not a permutation", {i});
    cov.voltage[base->generator_edges()[i]] = gens[i];
  }
  return cov;
}

// Rank 0 bases have no loops to carry the sheet count.
inline GraphCover cover_from_action(const std::shared_ptr<const BaseGraph>& base, const std::vector<Permutation>& gens,
                                    std::size_t sheets) {
  if (!gens.empty() && gens[0].size() != sheets) throw Error(ErrorKind::InvalidGraph, "sheet count mismatch");
  if (gens.empty()) {
    if (base->rank() != 0) throw Error(ErrorKind::InvalidGraph, "need one permutation per generator");
    return trivial_cover(base, sheets);
  }
  return cover_from_action(base, gens);
}

struct Monodromy {
  PermutationGroup image;  // subgroup of S_n generated by the loop lifts
  std::vector<Permutation> loops;
  GAction action;
};

inline Monodromy monodromy(const GraphCover& cov, std::size_t cap = 720) {
  auto loops = loop_permutations(cov);
  auto pg = permutation_group("mono(" + cov.base->name() + "," + std::to_string(cov.sheets) + ")", loops,
                              cov.sheets, cap);
  auto g = share(pg.group);
  std::vector<Point> table;
  for (const auto& p : pg.elements) table.insert(table.end(), p.begin(), p.end());
  GAction a(g, cov.sheets, std::move(table), "fiber");
  return Monodromy{std::move(pg), std::move(loops), std::move(a)};
}

namespace detail {

inline bool tuple_transitive(const std::vector<Permutation>& t, std::size_t n) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& p : t)
      if (!seen[p[x]]) {
        seen[p[x]] = 1;
        ++count;
        stack.push_back(p[x]);
      }
  }
  return count == n;
}

}  // namespace detail

inline bool is_connected(const GraphCover& cov) {
  return detail::tuple_transitive(loop_permutations(cov), cov.sheets);
}

// Least tuple (p_1 entries, then p_2, ...) among all simultaneous conjugates
// s p s^-1; pointed keeps s(0) = 0. Labels are handed out in order, so the
// only real choices are which point opens a fresh cycle of p_1.
inline std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& t, std::size_t n, bool pointed = false) {
  const auto r = t.size();
  if (r == 0 || n == 0) return t;
  std::vector<std::size_t> best;
  std::vector<std::size_t> out;
  std::vector<std::size_t> lab(n, SIZE_MAX), inv(n, SIZE_MAX);
  std::size_t m = 0;

  // a prefix that differs from best is smaller, larger ones are cut
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r * n) {
      best = out;
      return;
    }
    const auto j = pos / n, k = pos % n;
    auto emit = [&]() {
      const auto y = t[j][inv[k]];
      bool fresh = lab[y] == SIZE_MAX;
      if (fresh) {
        lab[y] = m;
        inv[m++] = y;
      }
      const auto v = lab[y];
      const bool tied = !best.empty() && std::equal(out.begin(), out.end(), best.begin());
      if (!tied || v <= best[pos]) {
        out.push_back(v);
        self(self, pos + 1);
        out.pop_back();
      }
      if (fresh) {
        inv[--m] = SIZE_MAX;
        lab[y] = SIZE_MAX;
      }
    };
    if (inv[k] != SIZE_MAX) {
      emit();
      return;
    }
    // k == m here: choose the point labelled k
    for (std::size_t x = 0; x < n; ++x) {
      if (lab[x] != SIZE_MAX) continue;
      if (pointed && k == 0 && x != 0) continue;
      lab[x] = m;
      inv[m++] = x;
      emit();
      inv[--m] = SIZE_MAX;
      lab[x] = SIZE_MAX;
    }
  };
  rec(rec, 0);
  std::vector<Permutation> res(r, Permutation(n));
  for (std::size_t i = 0; i < best.size(); ++i) res[i / n][i % n] = best[i];
  return res;
}

inline std::vector<Permutation> canonical_form(const GraphCover& cov, bool pointed = false) {
  return canonical_tuple(loop_permutations(cov), cov.sheets, pointed);
}

inline bool covers_isomorphic(const GraphCover& a, const GraphCover& b, bool pointed = false) {
  return a.base == b.base && a.sheets == b.sheets && canonical_form(a, pointed) == canonical_form(b, pointed);
}

struct CoverClassOptions {
  bool pointed = true;  // pointed classes = subgroups of index n
  std::size_t max_sheets = 7;
  std::size_t max_classes = 200000;
};

// Transitive tuples in breadth-first normal form (every new label appears as
// the first unseen image while scanning x = 0, 1, ... and generators in order)
// are exactly one per pointed class.
inline std::vector<std::vector<Permutation>> pointed_transitive_tuples(std::size_t r, std::size_t n,
                                                                        std::size_t max_classes) {
  std::vector<std::vector<Permutation>> out;
  if (n == 0) return out;
  std::vector<Permutation> t(r, Permutation(n, SIZE_MAX));
  std::vector<std::vector<char>> hit(r, std::vector<char>(n, 0));
  std::size_t count = 1;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r * n) {
      if (out.size() >= max_classes)
        throw Error(ErrorKind::SizeCapExceeded, "too many cover classes", {out.size(), max_classes});
      out.push_back(t);
      return;
    }
    const auto x = pos / r, j = pos % r;
    if (x >= count) return;  // x unreachable from 0 so far
    for (std::size_t y = 0; y <= count && y < n; ++y) {
      if (hit[j][y]) continue;
      const bool fresh = y == count;
      t[j][x] = y;
      hit[j][y] = 1;
      if (fresh) ++count;
      self(self, pos + 1);
      if (fresh) --count;
      hit[j][y] = 0;
      t[j][x] = SIZE_MAX;
    }
  };
  if (r == 0) {
    if (n == 1) out.push_back({});
    return out;
  }
  rec(rec, 0);
  return out;
}

// Connected n-sheet covers up to isomorphism, each given by its canonical
// generator-edge voltages, sorted by canonical tuple.
inline std::vector<GraphCover> classify_covers(const std::shared_ptr<const BaseGraph>& base, std::size_t n,
                                               const CoverClassOptions& opt = {}) {
  if (n > opt.max_sheets)
    throw Error(ErrorKind::SizeCapExceeded, "sheet count beyond cap", {n, opt.max_sheets});
  std::set<std::vector<Permutation>> reps;
  for (const auto& t : pointed_transitive_tuples(base->rank(), n, opt.max_classes))
    reps.insert(canonical_tuple(t, n, opt.pointed));
  std::vector<GraphCover> out;
  for (const auto& t : reps) out.push_back(cover_from_action(base, t, n));
  return out;
}

// ---- deck transformations ----

// Permutations of the fiber commuting with every loop lift; on a connected
// cover each is fixed by the image of sheet 0.
inline std::vector<Permutation> deck_transformations(const GraphCover& cov) {
  auto loops = loop_permutations(cov);
  const auto n = cov.sheets;
  if (!detail::tuple_transitive(loops, n))
    throw Error(ErrorKind::Disconnected, "deck group needs a connected cover");
  std::vector<Permutation> out;
  for (std::size_t y = 0; y < n; ++y) {
    Permutation s(n, SIZE_MAX);
    s[0] = y;
    std::vector<std::size_t> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& p : loops) {
        if (s[p[x]] == SIZE_MAX) {
          s[p[x]] = p[s[x]];
          stack.push_back(p[x]);
        } else if (s[p[x]] != p[s[x]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok && detail::is_permutation(s, n)) out.push_back(std::move(s));
  }
  return out;
}

inline FiniteGroup deck_group(const GraphCover& cov) {
  auto d = deck_transformations(cov);
  return permutation_group("deck", d, cov.sheets, std::max<std::size_t>(d.size(), 1)).group;
}

inline bool is_regular(const GraphCover& cov) { return deck_transformations(cov).size() == cov.sheets; }

// ---- total space ----

// Vertex (v, i) is v * sheets + i.
struct TotalSpace {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline TotalSpace total_space(const GraphCover& cov) {
  detail::require_cover(cov);
  TotalSpace t;
  t.vertices = cov.base->vertex_count() * cov.sheets;
  for (std::size_t e = 0; e < cov.base->edges().size(); ++e) {
    auto [u, v] = cov.base->edges()[e];
    for (std::size_t i = 0; i < cov.sheets; ++i)
      t.edges.push_back({u * cov.sheets + i, v * cov.sheets + cov.voltage[e][i]});
  }
  return t;
}

// ---- categories of covers ----

struct CoverCatalog {
  FiniteConcreteCategory category;
  std::vector<GraphCover> covers;               // object x is covers[x]
  std::vector<std::vector<Permutation>> forms;  // canonical tuples

  std::optional<ObjectId> find(const GraphCover& cov) const {
    auto f = canonical_form(cov);
    for (ObjectId x = 0; x < forms.size(); ++x)
      if (covers[x].sheets == cov.sheets && forms[x] == f) return x;
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<Permutation> tuple_sum(const std::vector<Permutation>& a, std::size_t na,
                                          const std::vector<Permutation>& b, std::size_t nb) {
  std::vector<Permutation> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = a[j];
    for (std::size_t i = 0; i < nb; ++i) out[j].push_back(b[j][i] + na);
  }
  return out;
}

inline CoverCatalog catalog_from(std::string name, std::vector<std::pair<std::string, GraphCover>> items,
                                 std::size_t cap) {
  std::vector<ActionObject> objs;
  std::vector<GraphCover> covers;
  std::vector<std::vector<Permutation>> forms;
  for (auto& [n, cov] : items) {
    objs.push_back(ActionObject{n, cov.sheets, loop_permutations(cov)});
    forms.push_back(canonical_form(cov));
    covers.push_back(std::move(cov));
  }
  return CoverCatalog{make_action_category(std::move(name), std::move(objs), cap), std::move(covers),
                      std::move(forms)};
}

}  // namespace detail

// Every cover with at most max_sheets sheets, connected or not, up to
// isomorphism; arrows are covering maps over the base, seen on the fiber
// over the basepoint. Connected classes of n sheets are named c<n>.<k>.
inline CoverCatalog covers_as_category(const std::shared_ptr<const BaseGraph>& base, std::size_t max_sheets,
                                       std::size_t max_objects = 2000) {
  struct Conn {
    std::string name;
    std::size_t n;
    std::vector<Permutation> t;
  };
  std::vector<Conn> conn;
  for (std::size_t n = 1; n <= max_sheets; ++n) {
    CoverClassOptions opt;
    opt.pointed = false;
    opt.max_sheets = max_sheets;
    auto cl = classify_covers(base, n, opt);
    for (std::size_t k = 0; k < cl.size(); ++k)
      conn.push_back({"c" + std::to_string(n) + "." + std::to_string(k), n, loop_permutations(cl[k])});
  }
  const auto r = base->rank();
  std::vector<std::pair<std::string, GraphCover>> items;
  // multisets of connected classes, smaller total first
  std::vector<std::size_t> mult(conn.size(), 0);
  std::vector<std::vector<std::size_t>> all;
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == conn.size()) {
      all.push_back(mult);
      return;
    }
    for (std::size_t k = 0; used + k * conn[i].n <= max_sheets; ++k) {
      mult[i] = k;
      self(self, i + 1, used + k * conn[i].n);
    }
    mult[i] = 0;
  };
  rec(rec, 0, 0);
  auto total = [&](const std::vector<std::size_t>& m) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * conn[i].n;
    return s;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return total(a) < total(b); });
  if (all.size() > max_objects)
    throw Error(ErrorKind::SizeCapExceeded, "cover category would have " + std::to_string(all.size()) + " objects",
                {all.size(), max_objects});
  for (const auto& m : all) {
    std::vector<Permutation> t(r);
    std::size_t n = 0;
    std::string name;
    for (std::size_t i = 0; i < conn.size(); ++i)
      for (std::size_t k = 0; k < m[i]; ++k) {
        t = detail::tuple_sum(t, n, conn[i].t, conn[i].n);
        n += conn[i].n;
        if (!name.empty()) name += "+";
        name += conn[i].name;
      }
    if (name.empty()) name = "0";
    items.push_back({name, cover_from_action(base, t, n)});
  }
  return detail::catalog_from(base->name() + "-covers<=" + std::to_string(max_sheets), std::move(items),
                              max_sheets);
}

// Covers whose monodromy factors through the group generated by the given
// generator images: one cover per G-set with at most max_sheets points,
// the loops acting as the images do.
inline CoverCatalog covers_through(const std::shared_ptr<const BaseGraph>& base, const std::vector<Permutation>& images,
                                   std::size_t max_sheets) {
  if (images.size() != base->rank())
    throw Error(ErrorKind::InvalidGraph, "need one image per generator", {images.size(), base->rank()});
  const std::size_t deg = images.empty() ? 1 : images[0].size();
  auto pg = permutation_group("im", images, deg, 5040);
  auto g = share(pg.group);
  std::map<Permutation, Element> idx;
  for (Element i = 0; i < pg.elements.size(); ++i) idx[pg.elements[i]] = i;
  std::vector<Element> gen_elems;
  for (const auto& p : images) gen_elems.push_back(idx.at(p));
  auto cat = gset_catalog(g, max_sheets);
  std::vector<std::pair<std::string, GraphCover>> items;
  for (const auto& a : cat.objects) {
    std::vector<Permutation> t;
    for (auto e : gen_elems) t.push_back(a.element_map(e));
    items.push_back({a.name(), cover_from_action(base, t, a.points())});
  }
  return detail::catalog_from(base->name() + "-covers-through-" + std::to_string(pg.group.size()),
                              std::move(items), max_sheets);
}

// Regular cover of the finite monodromy image: sheets are its elements,
// loops act by left multiplication.
inline GraphCover regular_cover(const std::shared_ptr<const BaseGraph>& base, const std::vector<Permutation>& images) {
  const std::size_t deg = images.empty() ? 1 : images[0].size();
  auto pg = permutation_group("im", images, deg, 5040);
  std::map<Permutation, Element> idx;
  for (Element i = 0; i < pg.elements.size(); ++i) idx[pg.elements[i]] = i;
  std::vector<Permutation> t;
  for (const auto& p : images) {
    auto e = idx.at(p);
    Permutation row(pg.elements.size());
    for (Element x = 0; x < row.size(); ++x) row[x] = pg.group.compose(e, x);
    t.push_back(std::move(row));
  }
  return cover_from_action(base, t, pg.elements.size());
}

}  // namespace galois
