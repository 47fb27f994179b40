#pragma once

// Galois objects, closures and the cofinal Galois diagram of a connected
// category with fiber functor F. A point a of F(A) plays the role of an
// arrow P -> A from the (pro-)representing object, so a^* : [A,X] -> F(X)
// is evaluation at a.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois/axioms.hpp"
#include "galois/category.hpp"

namespace galois {

struct GaloisCertificate {
  PointedObject node;
  std::vector<Arrow> automorphisms;
  std::vector<Point> evaluation;      // evaluation[i] = F(automorphisms[i])(a)
  std::vector<std::size_t> by_point;  // inverse table
};

namespace detail {

inline std::optional<std::vector<std::size_t>> evaluation_inverse(const FiniteConcreteCategory& c,
                                                                  const std::vector<Arrow>& arrows, Point a,
                                                                  std::size_t target, std::vector<Point>* eval) {
  if (arrows.size() != target) return std::nullopt;
  std::vector<std::size_t> inv(target, SIZE_MAX);
  if (eval) eval->clear();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto y = c.fiber(arrows[i])[a];
    if (inv[y] != SIZE_MAX) return std::nullopt;
    inv[y] = i;
    if (eval) eval->push_back(y);
  }
  return inv;
}

}  // namespace detail

// Aut(A) -> F(A), h -> F(h)(a), is a bijection. The same is re-checked at
// every other point of F(A); a point-dependent answer means the category
// breaks the C axioms.
inline std::optional<GaloisCertificate> is_galois(const FiniteConcreteCategory& c, PointedObject p) {
  const auto n = c.fiber_size(p.object);
  if (p.point >= n) throw Error(ErrorKind::PointOutOfRange, "point outside the fiber", {p.object, p.point});
  GaloisCertificate cert;
  cert.node = p;
  cert.automorphisms = automorphism_arrows(c, p.object);
  auto inv = detail::evaluation_inverse(c, cert.automorphisms, p.point, n, &cert.evaluation);
  for (Point b = 0; b < n; ++b) {
    bool other = detail::evaluation_inverse(c, cert.automorphisms, b, n, nullptr).has_value();
    if (other != inv.has_value())
      throw Error(ErrorKind::AxiomPrereqFailed,
                  "Galois property of " + c.object_name(p.object) + " depends on the point", {p.object, p.point, b});
  }
  if (!inv) return std::nullopt;
  cert.by_point = std::move(*inv);
  return cert;
}

inline bool is_galois_object(const FiniteConcreteCategory& c, ObjectId a) {
  return c.fiber_size(a) > 0 && is_galois(c, {a, 0}).has_value();
}

struct NormalityAgreement {
  bool galois = false;
  bool normal = false;
  bool agree() const { return galois == normal; }
};

// G/H in G-sets is Galois exactly when H is normal
inline NormalityAgreement is_galois_iff_normal_check(const std::shared_ptr<const FiniteMonoid>& g, const Subgroup& h) {
  const auto& gg = as_group(*g);
  require_subgroup(gg, h);
  auto c = category_of_actions("G/H", {coset_action(g, h)});
  return {is_galois(c, {0, 0}).has_value(), is_normal(gg, h)};
}

// ---- closure ----

struct GaloisClosure {
  GaloisCertificate certificate;
  std::vector<Arrow> pi;  // pi[p] : A -> X, the unique arrow with F(pi[p])(a) = p
};

// The meet over all points of X of (x, X), taken among the given objects
// (all objects when empty), then checked to be Galois with a^* : [A,X] -> F(X)
// bijective, and cross-checked against the greatest Galois node below every
// (x, X) found by exhaustive search.
inline GaloisClosure galois_closure(const FiniteConcreteCategory& c, ObjectId x,
                                    std::vector<ObjectId> objects = {}) {
  if (c.fiber_size(x) == 0) throw Error(ErrorKind::AxiomPrereqFailed, "closure of an object with empty fiber", {x});
  if (objects.empty()) {
    objects.resize(c.object_count());
    std::iota(objects.begin(), objects.end(), ObjectId{0});
  }
  if (std::find(objects.begin(), objects.end(), x) == objects.end()) objects.push_back(x);
  auto poset = diagram_poset(c, objects);
  std::vector<std::size_t> points;
  for (Point p = 0; p < c.fiber_size(x); ++p) points.push_back(*poset.index_of({x, p}));
  auto m = poset.glb(points);
  if (!m) throw Error(ErrorKind::NoMeet, "points of " + c.object_name(x) + " have no meet", {x});
  const auto node = poset.nodes[*m];
  auto cert = is_galois(c, node);
  if (!cert)
    throw Error(ErrorKind::AxiomPrereqFailed, "meet " + c.object_name(node.object) + " is not Galois",
                {node.object, node.point});
  GaloisClosure out{*cert, {}};
  const auto ax = c.hom(node.object, x);
  auto inv = detail::evaluation_inverse(c, ax, node.point, c.fiber_size(x), nullptr);
  if (!inv)
    throw Error(ErrorKind::AxiomPrereqFailed, "evaluation [A,X] -> F(X) is not bijective at the meet",
                {node.object, x});
  for (auto i : *inv) out.pi.push_back(ax[i]);

  // independent path: Galois nodes below every point of X, greatest one
  std::map<ObjectId, bool> galois;
  std::vector<std::size_t> dominating;
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
    if (!std::all_of(points.begin(), points.end(), [&](std::size_t q) { return poset.leq[k][q] != 0; })) continue;
    auto obj = poset.nodes[k].object;
    auto it = galois.find(obj);
    if (it == galois.end()) it = galois.emplace(obj, is_galois_object(c, obj)).first;
    if (it->second) dominating.push_back(k);
  }
  std::optional<std::size_t> best;
  for (auto k : dominating)
    if (std::all_of(dominating.begin(), dominating.end(), [&](std::size_t j) { return poset.leq[j][k] != 0; })) {
      best = k;
      break;
    }
  if (!best || !poset.equivalent(*best, *m))
    throw Error(ErrorKind::AxiomPrereqFailed, "closure of " + c.object_name(x) + " disagrees with exhaustive search",
                {x, node.object});
  return out;
}

// ---- the cofinal Galois diagram ----

struct GaloisTransition {
  std::size_t from = 0, to = 0;  // node indices; an arrow A_from -> A_to
  Arrow x;                       // F(x)(0) = 0
  std::vector<std::size_t> rho;  // automorphism index of A_from -> of A_to
};

struct GaloisDiagram {
  std::vector<GaloisCertificate> nodes;  // one per Galois object, at point 0
  std::vector<GaloisTransition> transitions;
  std::optional<std::size_t> bottom;       // Galois node below every node
  std::vector<std::vector<std::size_t>> pi;  // pi[n] : Aut(bottom) -> Aut(A_n), when bottom exists

  std::optional<std::size_t> node_of(ObjectId a) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].node.object == a) return i;
    return std::nullopt;
  }
  const GaloisTransition* transition(std::size_t from, std::size_t to) const {
    for (const auto& t : transitions)
      if (t.from == from && t.to == to) return &t;
    return nullptr;
  }
};

namespace detail {

// h -> the automorphism k of B with F(k)(0) = F(x h)(0)
inline std::vector<std::size_t> transition_table(const FiniteConcreteCategory& c, const GaloisCertificate& a,
                                                 const GaloisCertificate& b, const Arrow& x) {
  std::vector<std::size_t> rho;
  for (const auto& h : a.automorphisms) rho.push_back(b.by_point[c.fiber(x)[c.fiber(h)[a.node.point]]]);
  return rho;
}

// rho(h g) = rho(h) rho(g) under composition, and rho onto
inline std::optional<std::string> check_transition(const FiniteConcreteCategory& c, const GaloisCertificate& a,
                                                   const GaloisCertificate& b, const std::vector<std::size_t>& rho) {
  std::map<Arrow, std::size_t> ia, ib;
  for (std::size_t i = 0; i < a.automorphisms.size(); ++i) ia[a.automorphisms[i]] = i;
  for (std::size_t i = 0; i < b.automorphisms.size(); ++i) ib[b.automorphisms[i]] = i;
  for (std::size_t h = 0; h < rho.size(); ++h)
    for (std::size_t g = 0; g < rho.size(); ++g) {
      auto hg = ia.at(c.compose(a.automorphisms[h], a.automorphisms[g]));
      auto rr = ib.at(c.compose(b.automorphisms[rho[h]], b.automorphisms[rho[g]]));
      if (rho[hg] != rr) return "transition is not a homomorphism";
    }
  std::vector<char> hit(b.automorphisms.size(), 0);
  for (auto k : rho) hit[k] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return "transition is not surjective";
  return std::nullopt;
}

}  // namespace detail

// Galois objects of a connected category with their transitions. Throws when
// a transition is not a surjective homomorphism, the Galois nodes are not
// cofinal, or the cone law fails.
inline GaloisDiagram cofinal_galois_diagram(const FiniteConcreteCategory& c) {
  GaloisDiagram d;
  for (ObjectId a = 0; a < c.object_count(); ++a)
    if (c.fiber_size(a) > 0)
      if (auto cert = is_galois(c, {a, 0})) d.nodes.push_back(std::move(*cert));
  const auto n = d.nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto &a = d.nodes[i], &b = d.nodes[j];
      std::optional<Arrow> x;
      for (const auto& f : c.hom(a.node.object, b.node.object))
        if (c.fiber(f)[0] == 0) {
          x = f;
          break;
        }
      if (!x) continue;
      auto rho = detail::transition_table(c, a, b, *x);
      if (auto err = detail::check_transition(c, a, b, rho))
        throw Error(ErrorKind::AxiomPrereqFailed,
                    *err + ": " + c.object_name(a.node.object) + " -> " + c.object_name(b.node.object),
                    {a.node.object, b.node.object});
      d.transitions.push_back({i, j, *x, std::move(rho)});
    }
  auto poset = diagram_poset(c);
  std::vector<std::size_t> reps;
  for (const auto& g : d.nodes) reps.push_back(*poset.index_of(g.node));
  if (!poset.is_cofinal(reps)) throw Error(ErrorKind::AxiomPrereqFailed, "Galois nodes are not cofinal");
  for (std::size_t i = 0; i < n && !d.bottom; ++i) {
    bool below_all = true;
    for (std::size_t k = 0; k < poset.nodes.size() && below_all; ++k) below_all = poset.leq[reps[i]][k];
    if (below_all) d.bottom = i;
  }
  if (d.bottom) {
    const auto b = *d.bottom;
    d.pi.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == b) {
        d.pi[j].resize(d.nodes[b].automorphisms.size());
        std::iota(d.pi[j].begin(), d.pi[j].end(), std::size_t{0});
      } else {
        d.pi[j] = d.transition(b, j)->rho;
      }
    }
    for (const auto& t : d.transitions)
      for (std::size_t h = 0; h < d.pi[b].size(); ++h)
        if (t.rho[d.pi[t.from][h]] != d.pi[t.to][h])
          throw Error(ErrorKind::AxiomPrereqFailed, "cone law fails on a transition",
                      {d.nodes[t.from].node.object, d.nodes[t.to].node.object, h});
  }
  return d;
}

// Objects X with [A,X] -> F(X) bijective at a.
inline std::vector<ObjectId> objects_CA(const FiniteConcreteCategory& c, PointedObject a) {
  if (!is_galois(c, a)) throw Error(ErrorKind::NotGalois, c.object_name(a.object) + " is not Galois", {a.object});
  std::vector<ObjectId> out;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    if (detail::evaluation_inverse(c, c.hom(a.object, x), a.point, c.fiber_size(x), nullptr)) out.push_back(x);
  return out;
}

inline FiniteConcreteCategory subcategory_CA(const FiniteConcreteCategory& c, PointedObject a) {
  return full_subcategory(c, objects_CA(c, a), c.name() + "|C_" + c.object_name(a.object));
}

}  // namespace galois
