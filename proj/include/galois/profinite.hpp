#pragma once

// Finite inverse systems of finite groups with surjective transitions and
// their limits (threads). A level "refines" another when a chain of edges
// leads from it to the other; the meet of two levels is their coarsest
// common refinement.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/actions.hpp"
#include "galois/algebra.hpp"
#include "galois/galois.hpp"

namespace galois {

struct SystemEdge {
  std::size_t hi = 0, lo = 0;  // G_hi -> G_lo
  GroupHom map;
};

class InverseSystem {
 public:
  InverseSystem(std::string name, std::vector<std::string> node_names,
                std::vector<std::shared_ptr<const FiniteMonoid>> groups, std::vector<SystemEdge> edges)
      : name_(std::move(name)), names_(std::move(node_names)), groups_(std::move(groups)), edges_(std::move(edges)) {
    validate();
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return groups_.size(); }
  const std::string& node_name(std::size_t i) const { return names_[i]; }
  const FiniteGroup& group(std::size_t i) const { return as_group(*groups_[i]); }
  const std::shared_ptr<const FiniteMonoid>& group_ptr(std::size_t i) const { return groups_[i]; }
  const std::vector<SystemEdge>& edges() const { return edges_; }
  std::optional<std::size_t> find_node(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  // i refines j (i == j included)
  bool refines(std::size_t i, std::size_t j) const { return static_cast<bool>(path_[i][j]); }
  // composite transition G_i -> G_j along any path; nullopt when i does not refine j
  const std::optional<std::vector<Element>>& transition(std::size_t i, std::size_t j) const { return path_[i][j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i][j]; }
  // a refinement of every level
  std::size_t finest() const { return finest_; }

 private:
  void validate() {
    const auto n = groups_.size();
    if (n == 0) throw Error(ErrorKind::InvalidSystem, "system without nodes");
    if (names_.size() != n) throw Error(ErrorKind::InvalidSystem, "node names and groups differ in number");
    for (const auto& g : groups_)
      if (!g || !g->is_group()) throw Error(ErrorKind::InvalidSystem, "node without a group");
    for (const auto& e : edges_) {
      if (e.hi >= n || e.lo >= n || e.hi == e.lo) throw Error(ErrorKind::InvalidSystem, "bad edge", {e.hi, e.lo});
      if (!is_homomorphism(*groups_[e.hi], *groups_[e.lo], e.map.map))
        throw Error(ErrorKind::InvalidSystem, "edge " + names_[e.hi] + " -> " + names_[e.lo] + " is not a homomorphism",
                    {e.hi, e.lo});
      if (!hom_is_surjective(e.map, *groups_[e.lo]))
        throw Error(ErrorKind::InvalidSystem, "edge " + names_[e.hi] + " -> " + names_[e.lo] + " is not surjective",
                    {e.hi, e.lo});
    }
    // composites by relaxation; two different composites break functoriality
    path_.assign(n, std::vector<std::optional<std::vector<Element>>>(n));
    for (std::size_t i = 0; i < n; ++i) path_[i][i] = detail::identity_map(groups_[i]->size());
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : edges_) {
          if (!path_[i][e.hi]) continue;
          auto comp = detail::compose_maps(e.map.map, *path_[i][e.hi]);
          auto& slot = path_[i][e.lo];
          if (!slot) {
            slot = std::move(comp);
            changed = true;
          } else if (*slot != comp) {
            throw Error(ErrorKind::InvalidSystem,
                        "two paths " + names_[i] + " -> " + names_[e.lo] + " give different maps", {i, e.lo});
          }
        }
      if (!changed) break;
      if (round == n) throw Error(ErrorKind::InvalidSystem, "edges form a cycle");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && path_[i][j] && path_[j][i]) throw Error(ErrorKind::InvalidSystem, "edges form a cycle", {i, j});
    meet_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> common;
        for (std::size_t k = 0; k < n; ++k)
          if (path_[k][i] && path_[k][j]) common.push_back(k);
        std::optional<std::size_t> m;
        for (auto k : common)
          if (std::all_of(common.begin(), common.end(), [&](std::size_t l) { return path_[l][k].has_value(); })) {
            m = k;
            break;
          }
        if (!m)
          throw Error(ErrorKind::InvalidSystem, "levels " + names_[i] + " and " + names_[j] + " have no meet", {i, j});
        meet_[i][j] = *m;
      }
    finest_ = 0;
    for (std::size_t i = 1; i < n; ++i) finest_ = meet_[finest_][i];
  }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::shared_ptr<const FiniteMonoid>> groups_;
  std::vector<SystemEdge> edges_;
  std::vector<std::vector<std::optional<std::vector<Element>>>> path_;
  std::vector<std::vector<std::size_t>> meet_;
  std::size_t finest_ = 0;
};

// ---- threads ----

struct ThreadGroup {
  std::shared_ptr<const FiniteMonoid> group;
  std::vector<std::vector<Element>> threads;  // threads[t][node]
  std::vector<GroupHom> projections;          // per node

  const FiniteGroup& as_finite_group() const { return as_group(*group); }
};

// All compatible families, by backtracking over nodes; componentwise product.
inline ThreadGroup limit_threads(const InverseSystem& s, std::size_t cap = kDefaultGroupCap) {
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    if (s.group(i).size() > cap)
      throw Error(ErrorKind::SizeCapExceeded, "node group " + s.node_name(i) + " too large", {i, cap});
  ThreadGroup out;
  std::vector<Element> cur(n, 0);
  auto consistent = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (const auto& t = s.transition(k, j); t && (*t)[cur[k]] != cur[j]) return false;
      if (const auto& t = s.transition(j, k); t && (*t)[cur[j]] != cur[k]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (out.threads.size() >= cap)
        throw Error(ErrorKind::SizeCapExceeded, "more than " + std::to_string(cap) + " threads", {cap});
      out.threads.push_back(cur);
      return;
    }
    for (Element g = 0; g < s.group(k).size(); ++g) {
      cur[k] = g;
      if (consistent(k)) self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::map<std::vector<Element>, Element> index;
  for (std::size_t t = 0; t < out.threads.size(); ++t) index[out.threads[t]] = t;
  RawTable raw{"lim " + s.name(), out.threads.size(), {}, {}};
  for (const auto& a : out.threads)
    for (const auto& b : out.threads) {
      std::vector<Element> ab(n);
      for (std::size_t i = 0; i < n; ++i) ab[i] = s.group(i).compose(a[i], b[i]);
      raw.compose.push_back(index.at(ab));
    }
  out.group = share(validate_group(raw, cap));
  for (std::size_t i = 0; i < n; ++i) {
    GroupHom p;
    for (const auto& t : out.threads) p.map.push_back(t[i]);
    out.projections.push_back(std::move(p));
  }
  return out;
}

struct ProjectionVerdict {
  std::size_t node = 0;
  bool surjective = true;
  std::optional<Element> unreached;
};

inline std::vector<ProjectionVerdict> projections_surjective(const InverseSystem& s, const ThreadGroup& lim) {
  std::vector<ProjectionVerdict> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ProjectionVerdict v{i, true, std::nullopt};
    std::vector<char> hit(s.group(i).size(), 0);
    for (auto g : lim.projections[i].map) hit[g] = 1;
    for (Element g = 0; g < hit.size(); ++g)
      if (!hit[g]) {
        v.surjective = false;
        v.unreached = g;
        break;
      }
    out.push_back(v);
  }
  return out;
}

// ---- continuous actions ----

struct ContinuousActionSpec {
  std::size_t level = 0;
  GAction level_action;
  bool unique = true;                    // a single coarsest level admits the action
  std::vector<std::size_t> admissible;  // every level the action factors through
};

// e factors through the projection to level i when the kernel acts trivially
inline bool factors_at(const ThreadGroup& lim, const GAction& e, std::size_t i, const FiniteMonoid& level) {
  auto k = hom_kernel(lim.projections[i], level);
  for (auto t : k.members)
    for (Point x = 0; x < e.points(); ++x)
      if (e.act(t, x) != x) return false;
  return true;
}

// The level action induced through a surjective projection.
inline GAction level_action(const InverseSystem& s, const ThreadGroup& lim, const GAction& e, std::size_t i) {
  const auto& g = s.group(i);
  std::vector<Point> table(g.size() * e.points(), 0);
  std::vector<char> seen(g.size(), 0);
  for (Element t = 0; t < lim.threads.size(); ++t) {
    auto h = lim.projections[i].map[t];
    if (seen[h]) continue;
    seen[h] = 1;
    for (Point x = 0; x < e.points(); ++x) table[h * e.points() + x] = e.act(t, x);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::InvalidSystem, "projection to " + s.node_name(i) + " is not surjective", {i});
  return GAction(s.group_ptr(i), e.points(), std::move(table), e.name() + "@" + s.node_name(i));
}

// Coarsest level through which e factors. Incomparable coarsest levels are
// resolved by node order and reported through unique = false.
inline ContinuousActionSpec factor_action(const InverseSystem& s, const ThreadGroup& lim, const GAction& e) {
  if (e.actor().size() != lim.group->size() || !e.actor().same_table(*lim.group))
    throw Error(ErrorKind::ActorMismatch, "action is not an action of the thread group");
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (factors_at(lim, e, i, s.group(i))) ok.push_back(i);
  std::vector<std::size_t> coarsest;
  for (auto i : ok)
    if (std::none_of(ok.begin(), ok.end(), [&](std::size_t j) { return j != i && s.refines(i, j); }))
      coarsest.push_back(i);
  // the finest level always admits e, so ok and coarsest are nonempty
  const auto level = coarsest.front();
  return ContinuousActionSpec{level, level_action(s, lim, e, level), coarsest.size() == 1, ok};
}

// A level action pulled back along the projection.
inline GAction inflate(const ThreadGroup& lim, std::size_t i, const GAction& level) {
  std::vector<Point> table;
  for (Element t = 0; t < lim.threads.size(); ++t) {
    auto h = lim.projections[i].map[t];
    for (Point x = 0; x < level.points(); ++x) table.push_back(level.act(h, x));
  }
  return GAction(lim.group, level.points(), std::move(table), level.name());
}

struct TaggedAction {
  GAction action;
  ContinuousActionSpec factor;
};

inline std::vector<TaggedAction> transitive_thread_actions(const InverseSystem& s, const ThreadGroup& lim,
                                                           std::size_t max_points) {
  std::vector<TaggedAction> out;
  for (auto& e : classify_transitive(lim.group)) {
    if (e.points() > max_points) continue;
    auto f = factor_action(s, lim, e);
    out.push_back({std::move(e), std::move(f)});
  }
  return out;
}

// ---- systems from Galois diagrams ----

namespace detail {

// Aut(A)^op as a group on automorphism indices: a . b = b o a
inline FiniteGroup automorphism_group_op(const FiniteConcreteCategory& c, const GaloisCertificate& cert,
                                         std::string name) {
  std::map<Arrow, std::size_t> idx;
  for (std::size_t i = 0; i < cert.automorphisms.size(); ++i) idx[cert.automorphisms[i]] = i;
  RawTable raw{std::move(name), cert.automorphisms.size(), {}, {}};
  for (const auto& a : cert.automorphisms)
    for (const auto& b : cert.automorphisms) raw.compose.push_back(idx.at(c.compose(b, a)));
  return validate_group(raw, raw.size);
}

}  // namespace detail

// Levels Aut(A)^op over the Galois objects, edges the transitions rho.
inline InverseSystem system_from_diagram(const FiniteConcreteCategory& c, const GaloisDiagram& d,
                                         std::string name = "galois") {
  std::vector<std::string> names;
  std::vector<std::shared_ptr<const FiniteMonoid>> groups;
  for (const auto& n : d.nodes) {
    names.push_back(c.object_name(n.node.object));
    groups.push_back(share(detail::automorphism_group_op(c, n, "Aut(" + names.back() + ")^op")));
  }
  std::vector<SystemEdge> edges;
  for (const auto& t : d.transitions) edges.push_back({t.from, t.to, GroupHom{t.rho}});
  return InverseSystem(std::move(name), std::move(names), std::move(groups), std::move(edges));
}

}  // namespace galois
