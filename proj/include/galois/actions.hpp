#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galois/algebra.hpp"

namespace galois {

// Left action of a group or monoid on {0..points-1}: act(g, x) = table[g * points + x].
class GAction {
 public:
  GAction(std::shared_ptr<const FiniteMonoid> actor, std::size_t points, std::vector<Point> table,
          std::string name = {})
      : actor_(std::move(actor)), n_(points), table_(std::move(table)), name_(std::move(name)) {
    validate();
    gens_ = greedy_generators(*actor_);
  }

  const FiniteMonoid& actor() const { return *actor_; }
  const std::shared_ptr<const FiniteMonoid>& actor_ptr() const { return actor_; }
  const FiniteGroup& group() const { return as_group(*actor_); }
  bool actor_is_group() const { return actor_->is_group(); }
  std::size_t points() const { return n_; }
  Point act(Element g, Point x) const { return table_[g * n_ + x]; }
  const std::vector<Point>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }
  const std::vector<Element>& generators() const { return gens_; }

  std::vector<Point> element_map(Element g) const {
    return {table_.begin() + static_cast<std::ptrdiff_t>(g * n_),
            table_.begin() + static_cast<std::ptrdiff_t>((g + 1) * n_)};
  }
  std::vector<std::vector<Point>> generator_maps() const {
    std::vector<std::vector<Point>> r;
    for (auto g : gens_) r.push_back(element_map(g));
    return r;
  }

 private:
  void validate() const {
    const auto& m = *actor_;
    if (table_.size() != m.size() * n_)
      throw Error(ErrorKind::InvalidAction, "action table has wrong length");
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i] >= n_)
        throw Error(ErrorKind::PointOutOfRange, "action entry out of range",
                    {i / std::max<std::size_t>(n_, 1), i % std::max<std::size_t>(n_, 1)});
    for (Point x = 0; x < n_; ++x)
      if (act(m.identity(), x) != x)
        throw Error(ErrorKind::InvalidAction, "identity moves point " + std::to_string(x), {x});
    for (Element a = 0; a < m.size(); ++a)
      for (Element b = 0; b < m.size(); ++b) {
        const auto ab = m.compose(a, b);
        for (Point x = 0; x < n_; ++x)
          if (act(a, act(b, x)) != act(ab, x))
            throw Error(ErrorKind::InvalidAction,
                        "a(bx) != (ab)x at (" + std::to_string(a) + "," + std::to_string(b) +
                            "," + std::to_string(x) + ")",
                        {a, b, x});
      }
  }

  std::shared_ptr<const FiniteMonoid> actor_;
  std::size_t n_;
  std::vector<Point> table_;
  std::string name_;
  std::vector<Element> gens_;
};

struct EquivariantMap {
  std::vector<Point> map;
  friend bool operator==(const EquivariantMap&, const EquivariantMap&) = default;
};

inline bool same_actor(const GAction& a, const GAction& b) {
  return a.actor_ptr() == b.actor_ptr() || a.actor().same_table(b.actor());
}

inline void require_same_actor(const GAction& a, const GAction& b) {
  if (!same_actor(a, b))
    throw Error(ErrorKind::ActorMismatch, a.actor().name() + " vs " + b.actor().name());
}

inline bool is_equivariant(const GAction& src, const GAction& dst, const std::vector<Point>& map) {
  if (map.size() != src.points()) return false;
  for (auto y : map)
    if (y >= dst.points()) return false;
  for (Element g = 0; g < src.actor().size(); ++g)
    for (Point x = 0; x < src.points(); ++x)
      if (map[src.act(g, x)] != dst.act(g, map[x])) return false;
  return true;
}

inline std::vector<std::vector<Point>> orbits(const GAction& a) {
  if (!a.actor_is_group())
    throw Error(ErrorKind::MonoidActorUnsupported, "orbits of a monoid action");
  detail::UnionFind uf(a.points());
  for (auto g : a.generators())
    for (Point x = 0; x < a.points(); ++x) uf.unite(x, a.act(g, x));
  std::map<std::size_t, std::vector<Point>> parts;
  for (Point x = 0; x < a.points(); ++x) parts[uf.find(x)].push_back(x);
  std::vector<std::vector<Point>> out;
  for (auto& [r, v] : parts) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

// M x for a single point x
inline std::vector<Point> reachable(const GAction& a, Point x) {
  std::vector<char> in(a.points(), 0);
  std::vector<Point> q{x};
  in[x] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (auto g : a.generators()) {
      auto y = a.act(g, q[i]);
      if (!in[y]) {
        in[y] = 1;
        q.push_back(y);
      }
    }
  std::sort(q.begin(), q.end());
  return q;
}

// Nonempty and every point reaches every other (for groups: one orbit).
inline bool is_transitive(const GAction& a) {
  if (a.points() == 0) return false;
  for (Point x = 0; x < a.points(); ++x)
    if (reachable(a, x).size() != a.points()) return false;
  return true;
}

inline Subgroup stabilizer(const GAction& a, Point x) {
  if (!a.actor_is_group())
    throw Error(ErrorKind::MonoidActorUnsupported, "stabilizer of a monoid action");
  if (x >= a.points()) throw Error(ErrorKind::PointOutOfRange, "stabilizer point", {x});
  Subgroup h;
  for (Element g = 0; g < a.actor().size(); ++g)
    if (a.act(g, x) == x) h.members.push_back(g);
  return h;
}

// Left cosets xH, numbered in order of first appearance; point 0 is H.
inline GAction coset_action(const std::shared_ptr<const FiniteMonoid>& actor, const Subgroup& h,
                            std::string name = {}) {
  const auto& g = as_group(*actor);
  require_subgroup(g, h);
  std::vector<std::size_t> coset_of(g.size(), SIZE_MAX);
  std::size_t k = 0;
  auto mark = [&](Element x) {
    if (coset_of[x] != SIZE_MAX) return;
    for (auto m : h.members) coset_of[g.compose(x, m)] = k;
    ++k;
  };
  mark(g.identity());
  for (Element x = 0; x < g.size(); ++x) mark(x);
  std::vector<Element> rep(k);
  for (Element x = g.size(); x-- > 0;) rep[coset_of[x]] = x;
  std::vector<Point> table(g.size() * k);
  for (Element a = 0; a < g.size(); ++a)
    for (std::size_t c = 0; c < k; ++c) table[a * k + c] = coset_of[g.compose(a, rep[c])];
  return GAction(actor, k, std::move(table), std::move(name));
}

inline GAction regular_action(const std::shared_ptr<const FiniteMonoid>& actor) {
  const auto n = actor->size();
  std::vector<Point> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = actor->compose(a, b);
  return GAction(actor, n, std::move(table), "regular");
}

inline GAction trivial_action(const std::shared_ptr<const FiniteMonoid>& actor, std::size_t n) {
  std::vector<Point> table(actor->size() * n);
  for (Element a = 0; a < actor->size(); ++a)
    for (Point x = 0; x < n; ++x) table[a * n + x] = x;
  return GAction(actor, n, std::move(table), std::to_string(n) + "pt");
}

inline GAction disjoint_union(const GAction& a, const GAction& b) {
  require_same_actor(a, b);
  const auto n = a.points() + b.points();
  std::vector<Point> table(a.actor().size() * n);
  for (Element g = 0; g < a.actor().size(); ++g) {
    for (Point x = 0; x < a.points(); ++x) table[g * n + x] = a.act(g, x);
    for (Point x = 0; x < b.points(); ++x) table[g * n + a.points() + x] = a.points() + b.act(g, x);
  }
  return GAction(a.actor_ptr(), n, std::move(table), a.name() + "+" + b.name());
}

// points (x, y) numbered x * |b| + y
inline GAction product_action(const GAction& a, const GAction& b) {
  require_same_actor(a, b);
  const auto n = a.points() * b.points();
  std::vector<Point> table(a.actor().size() * n);
  for (Element g = 0; g < a.actor().size(); ++g)
    for (Point x = 0; x < a.points(); ++x)
      for (Point y = 0; y < b.points(); ++y)
        table[g * n + x * b.points() + y] = a.act(g, x) * b.points() + b.act(g, y);
  return GAction(a.actor_ptr(), n, std::move(table), a.name() + "x" + b.name());
}

// One coset action per conjugacy class of subgroups, largest orbit first
// in the order of the canonical subgroup order.
inline std::vector<GAction> classify_transitive(const std::shared_ptr<const FiniteMonoid>& actor,
                                                std::size_t cap = kDefaultGroupCap) {
  const auto& g = as_group(*actor);
  auto classes = conjugacy_classes_of_subgroups(g, cap);
  std::vector<GAction> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    out.push_back(coset_action(actor, classes[i].front(), g.name() + "/H" + std::to_string(i)));
  return out;
}

namespace detail {

// Backtracking over maps X -> Y that commute with the given generator maps.
// Each assignment is propagated along the generators before branching again.
inline void enumerate_commuting_maps(const std::vector<std::vector<Point>>& src_gens,
                                     const std::vector<std::vector<Point>>& dst_gens,
                                     std::size_t nx, std::size_t ny, bool injective,
                                     const std::function<bool(const std::vector<Point>&)>& visit) {
  if (nx == 0) {
    visit({});
    return;
  }
  if (ny == 0) return;
  std::vector<Point> f(nx, SIZE_MAX);
  std::vector<char> used(injective ? ny : 0, 0);
  std::vector<Point> trail;
  bool stop = false;

  auto propagate = [&](Point start) -> bool {
    std::vector<Point> stack{start};
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      for (std::size_t s = 0; s < src_gens.size(); ++s) {
        auto p2 = src_gens[s][p];
        auto q2 = dst_gens[s][f[p]];
        if (f[p2] == SIZE_MAX) {
          if (injective) {
            if (used[q2]) return false;
            used[q2] = 1;
          }
          f[p2] = q2;
          trail.push_back(p2);
          stack.push_back(p2);
        } else if (f[p2] != q2) {
          return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, Point from) -> void {
    Point x = from;
    while (x < nx && f[x] != SIZE_MAX) ++x;
    if (x == nx) {
      if (!visit(f)) stop = true;
      return;
    }
    for (Point y = 0; y < ny && !stop; ++y) {
      if (injective && used[y]) continue;
      const auto mark = trail.size();
      f[x] = y;
      trail.push_back(x);
      if (injective) used[y] = 1;
      if (propagate(x)) self(self, x + 1);
      while (trail.size() > mark) {
        auto p = trail.back();
        trail.pop_back();
        if (injective) used[f[p]] = 0;
        f[p] = SIZE_MAX;
      }
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Visits every equivariant map in lexicographic order of the image tuple;
// the visitor returns false to stop early.
inline void for_each_equivariant_map(const GAction& src, const GAction& dst,
                                     const std::function<bool(const std::vector<Point>&)>& visit,
                                     bool bijective_only = false) {
  require_same_actor(src, dst);
  if (bijective_only && src.points() != dst.points()) return;
  std::vector<std::vector<Point>> sg, dg;
  for (auto g : src.generators()) {
    sg.push_back(src.element_map(g));
    dg.push_back(dst.element_map(g));
  }
  detail::enumerate_commuting_maps(sg, dg, src.points(), dst.points(), bijective_only, visit);
}

inline std::vector<EquivariantMap> hom_actions(const GAction& src, const GAction& dst) {
  std::vector<EquivariantMap> out;
  for_each_equivariant_map(src, dst, [&](const std::vector<Point>& f) {
    out.push_back(EquivariantMap{f});
    return true;
  });
  return out;
}

inline std::size_t count_equivariant_maps(const GAction& src, const GAction& dst) {
  std::size_t n = 0;
  for_each_equivariant_map(src, dst, [&](const std::vector<Point>&) {
    ++n;
    return true;
  });
  return n;
}

inline std::optional<EquivariantMap> action_isomorphic(const GAction& a, const GAction& b) {
  std::optional<EquivariantMap> r;
  for_each_equivariant_map(
      a, b,
      [&](const std::vector<Point>& f) {
        r = EquivariantMap{f};
        return false;
      },
      true);
  return r;
}

inline std::vector<EquivariantMap> automorphisms(const GAction& a) {
  std::vector<EquivariantMap> out;
  for_each_equivariant_map(
      a, a,
      [&](const std::vector<Point>& f) {
        out.push_back(EquivariantMap{f});
        return true;
      },
      true);
  return out;
}

struct ActionQuotient {
  GAction quotient;
  EquivariantMap projection;
};

// Collapses the orbits of a set of equivariant automorphisms of e.
inline ActionQuotient quotient_action(const GAction& e, const std::vector<EquivariantMap>& autos) {
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& s = autos[i].map;
    if (!is_equivariant(e, e, s) || !detail::is_injective(s, e.points()))
      throw Error(ErrorKind::NotByAutomorphisms, "map " + std::to_string(i) + " is not an automorphism",
                  {i});
  }
  detail::UnionFind uf(e.points());
  for (const auto& s : autos)
    for (Point x = 0; x < e.points(); ++x) uf.unite(x, s.map[x]);
  std::size_t k = 0;
  auto lab = uf.labels(&k);
  std::vector<Point> table(e.actor().size() * k);
  for (Element g = 0; g < e.actor().size(); ++g)
    for (Point x = 0; x < e.points(); ++x) table[g * k + lab[x]] = lab[e.act(g, x)];
  return ActionQuotient{GAction(e.actor_ptr(), k, std::move(table), e.name() + "/H"),
                        EquivariantMap{lab}};
}

// Relabels points: new point sigma[x] is old point x.
inline GAction relabel(const GAction& a, const std::vector<Point>& sigma) {
  std::vector<Point> table(a.table().size());
  for (Element g = 0; g < a.actor().size(); ++g)
    for (Point x = 0; x < a.points(); ++x)
      table[g * a.points() + sigma[x]] = sigma[a.act(g, x)];
  return GAction(a.actor_ptr(), a.points(), std::move(table), a.name());
}

// All actions on exactly n points up to isomorphism, by brute force over
// generator images. Intended for small monoids (n <= 4).
inline std::vector<GAction> enumerate_actions(const std::shared_ptr<const FiniteMonoid>& actor,
                                              std::size_t n) {
  const auto& m = *actor;
  const auto gens = greedy_generators(m);
  // word structure: element -> (parent element, generator) from the identity
  std::vector<std::pair<Element, std::size_t>> parent(m.size(), {SIZE_MAX, SIZE_MAX});
  std::vector<Element> order{m.identity()};
  std::vector<char> seen(m.size(), 0);
  seen[m.identity()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = m.compose(order[i], gens[k]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = {order[i], k};
        order.push_back(y);
      }
    }
  std::vector<std::vector<Point>> perms;
  {
    auto p = detail::identity_map(n);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::set<std::vector<Point>> canon_seen;
  std::vector<std::pair<std::vector<Point>, GAction>> found;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  std::vector<std::vector<Point>> img(gens.size(), std::vector<Point>(n, 0));
  std::vector<std::size_t> counter(gens.size(), 0);
  auto decode = [&](std::size_t code, std::vector<Point>& f) {
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = code % n;
      code /= n;
    }
  };
  if (n == 0) {
    return {GAction(actor, 0, {}, "0")};
  }
  for (;;) {
    for (std::size_t k = 0; k < gens.size(); ++k) decode(counter[k], img[k]);
    std::vector<Point> table(m.size() * n);
    for (Point x = 0; x < n; ++x) table[m.identity() * n + x] = x;
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto y = order[i];
      auto [p, k] = parent[y];
      for (Point x = 0; x < n; ++x) table[y * n + x] = table[p * n + img[k][x]];
    }
    bool ok = true;
    for (Element a = 0; a < m.size() && ok; ++a)
      for (Element b = 0; b < m.size() && ok; ++b)
        for (Point x = 0; x < n && ok; ++x)
          ok = table[a * n + table[b * n + x]] == table[m.compose(a, b) * n + x];
    if (ok) {
      std::vector<Point> best;
      for (const auto& s : perms) {
        std::vector<Point> key;
        for (auto g : gens) {
          std::vector<Point> row(n);
          for (Point x = 0; x < n; ++x) row[s[x]] = s[table[g * n + x]];
          key.insert(key.end(), row.begin(), row.end());
        }
        if (best.empty() || key < best) best = std::move(key);
      }
      if (canon_seen.insert(best).second)
        found.emplace_back(best, GAction(actor, n, std::move(table)));
    }
    std::size_t k = 0;
    while (k < gens.size() && ++counter[k] == total) counter[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GAction> out;
  for (auto& [key, act] : found) {
    act.rename(std::to_string(n) + "." + std::to_string(out.size()));
    out.push_back(std::move(act));
  }
  return out;
}

}  // namespace galois
