#pragma once

// Limits and colimits are searched among the existing objects by testing the
// universal property against every object of the category. Candidates whose
// fiber already looks like the set-level answer are tried first; the
// exhaustive pass only runs when none of those is universal.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "galois/category.hpp"

namespace galois {

namespace detail {

inline std::vector<ObjectId> by_size_distance(const FiniteConcreteCategory& c, std::size_t expected) {
  std::vector<ObjectId> ids(c.object_count());
  std::iota(ids.begin(), ids.end(), ObjectId{0});
  auto dist = [&](ObjectId x) {
    auto s = c.fiber_size(x);
    return s > expected ? s - expected : expected - s;
  };
  std::stable_sort(ids.begin(), ids.end(), [&](ObjectId a, ObjectId b) { return dist(a) < dist(b); });
  return ids;
}

// labels of the equivalence on {0..n-1} generated by pairs
inline std::vector<std::size_t> classes_of(std::size_t n, const std::vector<std::pair<Point, Point>>& pairs,
                                           std::size_t* count) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  return uf.labels(count);
}

// F(q) constant on classes and inducing a bijection classes -> F(Q)
inline bool induces_bijection(const std::vector<Point>& fq, const std::vector<std::size_t>& cls,
                              std::size_t nclasses, std::size_t target) {
  if (nclasses != target) return false;
  std::vector<Point> img(nclasses, SIZE_MAX);
  std::vector<char> hit(target, 0);
  for (Point p = 0; p < fq.size(); ++p) {
    auto& r = img[cls[p]];
    if (r == SIZE_MAX) {
      if (hit[fq[p]]) return false;
      hit[fq[p]] = 1;
      r = fq[p];
    } else if (r != fq[p]) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// ---- terminal / initial ----

inline std::optional<ObjectId> find_terminal(const FiniteConcreteCategory& c) {
  for (auto t : detail::by_size_distance(c, 1)) {
    bool ok = true;
    for (ObjectId x = 0; x < c.object_count() && ok; ++x) ok = c.hom_size(x, t) == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<ObjectId> find_initial(const FiniteConcreteCategory& c) {
  for (auto t : detail::by_size_distance(c, 0)) {
    bool ok = true;
    for (ObjectId x = 0; x < c.object_count() && ok; ++x) ok = c.hom_size(t, x) == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

// ---- products ----

struct ProductCone {
  ObjectId apex = 0;
  Arrow p1, p2;
};

inline bool is_product_cone(const FiniteConcreteCategory& c, const ProductCone& k) {
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    const auto nx = c.hom_size(w, k.p1.dst), ny = c.hom_size(w, k.p2.dst);
    if (c.hom_size(w, k.apex) != nx * ny) return false;
    std::vector<char> seen(nx * ny, 0);
    for (const auto& u : c.hom(w, k.apex)) {
      auto key = c.compose(k.p1, u).index * ny + c.compose(k.p2, u).index;
      if (seen[key]) return false;
      seen[key] = 1;
    }
  }
  return true;
}

// F(P) -> F(X) x F(Y) is a bijection
inline bool product_preserved(const FiniteConcreteCategory& c, const ProductCone& k) {
  const auto nx = c.fiber_size(k.p1.dst), ny = c.fiber_size(k.p2.dst);
  if (c.fiber_size(k.apex) != nx * ny) return false;
  std::vector<char> seen(nx * ny, 0);
  const auto &a = c.fiber(k.p1), &b = c.fiber(k.p2);
  for (Point z = 0; z < a.size(); ++z) {
    auto key = a[z] * ny + b[z];
    if (seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

inline std::optional<ProductCone> find_product(const FiniteConcreteCategory& c, ObjectId x, ObjectId y) {
  const auto expected = c.fiber_size(x) * c.fiber_size(y);
  for (int pass = 0; pass < 2; ++pass)
    for (auto p : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(p) != expected) continue;
      for (const auto& p1 : c.hom(p, x))
        for (const auto& p2 : c.hom(p, y)) {
          ProductCone k{p, p1, p2};
          const bool pre = product_preserved(c, k);
          if ((pass == 0) != pre) continue;
          if (is_product_cone(c, k)) return k;
        }
    }
  return std::nullopt;
}

// ---- equalizers ----

struct EqualizerCone {
  ObjectId apex = 0;
  Arrow e;
};

inline bool is_equalizer(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g, const EqualizerCone& k) {
  if (c.compose(f, k.e) != c.compose(g, k.e)) return false;
  const auto& fe = c.fiber(k.e);
  if (c.faithful() && detail::is_injective(fe, c.fiber_size(f.src))) {
    // e is mono, so only existence of factorizations needs checking
    std::vector<Point> back(c.fiber_size(f.src), SIZE_MAX);
    for (Point p = 0; p < fe.size(); ++p) back[fe[p]] = p;
    const auto &ff = c.fiber(f), &fg = c.fiber(g);
    for (ObjectId w = 0; w < c.object_count(); ++w)
      for (const auto& u : c.hom(w, f.src)) {
        const auto& fu = c.fiber(u);
        bool equalized = true;
        for (auto p : fu) equalized = equalized && ff[p] == fg[p];
        if (!equalized) continue;
        std::vector<Point> v(fu.size());
        for (Point p = 0; p < fu.size(); ++p) {
          if (back[fu[p]] == SIZE_MAX) return false;
          v[p] = back[fu[p]];
        }
        if (!c.arrow_with_fiber(w, k.apex, v)) return false;
      }
    return true;
  }
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    std::vector<char> target(c.hom_size(w, f.src), 0);
    std::size_t expected = 0;
    for (const auto& u : c.hom(w, f.src))
      if (c.compose(f, u) == c.compose(g, u)) {
        target[u.index] = 1;
        ++expected;
      }
    if (c.hom_size(w, k.apex) != expected) return false;
    std::vector<char> seen(target.size(), 0);
    for (const auto& v : c.hom(w, k.apex)) {
      auto u = c.compose(k.e, v).index;
      if (!target[u] || seen[u]) return false;
      seen[u] = 1;
    }
  }
  return true;
}

inline bool equalizer_preserved(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g,
                                const EqualizerCone& k) {
  const auto &ff = c.fiber(f), &fg = c.fiber(g), &fe = c.fiber(k.e);
  std::vector<char> in(ff.size(), 0);
  std::size_t n = 0;
  for (Point x = 0; x < ff.size(); ++x)
    if (ff[x] == fg[x]) {
      in[x] = 1;
      ++n;
    }
  if (fe.size() != n || !detail::is_injective(fe, ff.size())) return false;
  for (auto x : fe)
    if (!in[x]) return false;
  return true;
}

inline std::optional<EqualizerCone> find_equalizer(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g) {
  std::size_t expected = 0;
  for (Point x = 0; x < c.fiber(f).size(); ++x) expected += c.fiber(f)[x] == c.fiber(g)[x];
  for (int pass = 0; pass < 2; ++pass)
    for (auto e : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(e) != expected) continue;
      for (const auto& a : c.hom(e, f.src)) {
        EqualizerCone k{e, a};
        if ((pass == 0) != equalizer_preserved(c, f, g, k)) continue;
        if (is_equalizer(c, f, g, k)) return k;
      }
    }
  return std::nullopt;
}

// ---- pullbacks ----

struct PullbackCone {
  ObjectId apex = 0;
  Arrow p1, p2;  // p1 : P -> X, p2 : P -> Y
};

bool pullback_preserved(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g, const PullbackCone& k);

inline bool is_pullback(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g, const PullbackCone& k) {
  if (c.compose(f, k.p1) != c.compose(g, k.p2)) return false;
  if (c.faithful() && pullback_preserved(c, f, g, k)) {
    // arrows into the apex are told apart by their legs, and every
    // compatible pair has a fiber-level factorization: only counts matter
    for (ObjectId w = 0; w < c.object_count(); ++w) {
      std::map<std::vector<Point>, std::size_t> left;
      for (const auto& u : c.hom(w, f.src)) ++left[detail::compose_maps(c.fiber(f), c.fiber(u))];
      std::size_t expected = 0;
      for (const auto& v : c.hom(w, g.src)) {
        auto it = left.find(detail::compose_maps(c.fiber(g), c.fiber(v)));
        if (it != left.end()) expected += it->second;
      }
      if (c.hom_size(w, k.apex) != expected) return false;
    }
    return true;
  }
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    const auto ny = c.hom_size(w, g.src);
    std::vector<char> target(c.hom_size(w, f.src) * ny, 0);
    std::size_t expected = 0;
    for (const auto& u : c.hom(w, f.src))
      for (const auto& v : c.hom(w, g.src))
        if (c.compose(f, u) == c.compose(g, v)) {
          target[u.index * ny + v.index] = 1;
          ++expected;
        }
    if (c.hom_size(w, k.apex) != expected) return false;
    std::vector<char> seen(target.size(), 0);
    for (const auto& t : c.hom(w, k.apex)) {
      auto key = c.compose(k.p1, t).index * ny + c.compose(k.p2, t).index;
      if (!target[key] || seen[key]) return false;
      seen[key] = 1;
    }
  }
  return true;
}

inline bool pullback_preserved(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g,
                               const PullbackCone& k) {
  const auto &ff = c.fiber(f), &fg = c.fiber(g), &a = c.fiber(k.p1), &b = c.fiber(k.p2);
  const auto ny = fg.size();
  std::vector<char> target(ff.size() * ny, 0);
  std::size_t n = 0;
  for (Point x = 0; x < ff.size(); ++x)
    for (Point y = 0; y < ny; ++y)
      if (ff[x] == fg[y]) {
        target[x * ny + y] = 1;
        ++n;
      }
  if (a.size() != n) return false;
  std::vector<char> seen(target.size(), 0);
  for (Point z = 0; z < a.size(); ++z) {
    auto key = a[z] * ny + b[z];
    if (!target[key] || seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

inline std::size_t set_pullback_size(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g) {
  std::size_t n = 0;
  for (auto a : c.fiber(f))
    for (auto b : c.fiber(g)) n += a == b;
  return n;
}

inline std::optional<PullbackCone> find_pullback(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g) {
  const auto expected = set_pullback_size(c, f, g);
  for (int pass = 0; pass < 2; ++pass)
    for (auto p : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(p) != expected) continue;
      for (const auto& p1 : c.hom(p, f.src))
        for (const auto& p2 : c.hom(p, g.src)) {
          PullbackCone k{p, p1, p2};
          if (c.compose(f, p1) != c.compose(g, p2)) continue;
          if ((pass == 0) != pullback_preserved(c, f, g, k)) continue;
          if (is_pullback(c, f, g, k)) return k;
        }
    }
  return std::nullopt;
}

// ---- coproducts ----

struct CoproductCocone {
  ObjectId apex = 0;
  std::vector<Arrow> injections;
};

inline bool is_coproduct(const FiniteConcreteCategory& c, const CoproductCocone& k) {
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    std::size_t expected = 1;
    std::vector<std::size_t> radix;
    for (const auto& i : k.injections) {
      radix.push_back(c.hom_size(i.src, w));
      expected *= radix.back();
    }
    if (c.hom_size(k.apex, w) != expected) return false;
    std::vector<char> seen(expected, 0);
    for (const auto& u : c.hom(k.apex, w)) {
      std::size_t key = 0;
      for (std::size_t j = 0; j < k.injections.size(); ++j)
        key = key * radix[j] + c.compose(u, k.injections[j]).index;
      if (seen[key]) return false;
      seen[key] = 1;
    }
  }
  return true;
}

// injective fibers with disjoint images covering F(K)
inline bool coproduct_preserved(const FiniteConcreteCategory& c, const CoproductCocone& k) {
  std::vector<char> hit(c.fiber_size(k.apex), 0);
  std::size_t n = 0;
  for (const auto& i : k.injections)
    for (auto y : c.fiber(i)) {
      if (hit[y]) return false;
      hit[y] = 1;
      ++n;
    }
  return n == hit.size();
}

inline std::optional<CoproductCocone> find_coproduct(const FiniteConcreteCategory& c, ObjectId x, ObjectId y) {
  const auto expected = c.fiber_size(x) + c.fiber_size(y);
  for (int pass = 0; pass < 2; ++pass)
    for (auto k : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(k) != expected) continue;
      for (const auto& i1 : c.hom(x, k)) {
        if (pass == 0 && !detail::is_injective(c.fiber(i1), c.fiber_size(k))) continue;
        for (const auto& i2 : c.hom(y, k)) {
          CoproductCocone cc{k, {i1, i2}};
          if ((pass == 0) != coproduct_preserved(c, cc)) continue;
          if (is_coproduct(c, cc)) return cc;
        }
      }
    }
  return std::nullopt;
}

// n copies of x (or any list of summands) by iterated binary coproducts
inline std::optional<CoproductCocone> find_coproduct_of(const FiniteConcreteCategory& c,
                                                        const std::vector<ObjectId>& parts) {
  if (parts.empty()) {
    auto i = find_initial(c);
    if (!i) return std::nullopt;
    return CoproductCocone{*i, {}};
  }
  CoproductCocone acc{parts[0], {c.identity(parts[0])}};
  for (std::size_t j = 1; j < parts.size(); ++j) {
    auto b = find_coproduct(c, acc.apex, parts[j]);
    if (!b) return std::nullopt;
    CoproductCocone next{b->apex, {}};
    for (const auto& i : acc.injections) next.injections.push_back(c.compose(b->injections[0], i));
    next.injections.push_back(b->injections[1]);
    acc = std::move(next);
  }
  return acc;
}

// ---- quotients by groups of automorphisms ----

struct QuotientCocone {
  ObjectId apex = 0;
  Arrow q;
};

inline bool is_quotient(const FiniteConcreteCategory& c, const std::vector<Arrow>& group, const QuotientCocone& k) {
  for (const auto& h : group)
    if (c.compose(k.q, h) != k.q) return false;
  const auto a = k.q.src;
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    std::vector<char> target(c.hom_size(a, w), 0);
    std::size_t expected = 0;
    for (const auto& g : c.hom(a, w)) {
      bool inv = true;
      for (const auto& h : group) inv = inv && c.compose(g, h) == g;
      if (inv) {
        target[g.index] = 1;
        ++expected;
      }
    }
    if (c.hom_size(k.apex, w) != expected) return false;
    std::vector<char> seen(target.size(), 0);
    for (const auto& u : c.hom(k.apex, w)) {
      auto g = c.compose(u, k.q).index;
      if (!target[g] || seen[g]) return false;
      seen[g] = 1;
    }
  }
  return true;
}

inline std::vector<std::size_t> orbit_labels(const FiniteConcreteCategory& c, ObjectId a,
                                             const std::vector<Arrow>& group, std::size_t* count) {
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& h : group)
    for (Point x = 0; x < c.fiber_size(a); ++x) pairs.push_back({x, c.fiber(h)[x]});
  return detail::classes_of(c.fiber_size(a), pairs, count);
}

// F(A)/H -> F(A/H) is a bijection
inline bool quotient_preserved(const FiniteConcreteCategory& c, const std::vector<Arrow>& group,
                               const QuotientCocone& k) {
  std::size_t n = 0;
  auto cls = orbit_labels(c, k.q.src, group, &n);
  return detail::induces_bijection(c.fiber(k.q), cls, n, c.fiber_size(k.apex));
}

inline std::optional<QuotientCocone> find_quotient(const FiniteConcreteCategory& c, ObjectId a,
                                                   const std::vector<Arrow>& group) {
  std::size_t expected = 0;
  orbit_labels(c, a, group, &expected);
  for (int pass = 0; pass < 2; ++pass)
    for (auto q : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(q) != expected) continue;
      for (const auto& arr : c.hom(a, q)) {
        QuotientCocone k{q, arr};
        bool inv = true;
        for (const auto& h : group) inv = inv && c.compose(arr, h) == arr;
        if (!inv) continue;
        if ((pass == 0) != quotient_preserved(c, group, k)) continue;
        if (is_quotient(c, group, k)) return k;
      }
    }
  return std::nullopt;
}

// ---- coequalizers ----

inline bool is_coequalizer(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g, const QuotientCocone& k) {
  if (c.compose(k.q, f) != c.compose(k.q, g)) return false;
  const auto y = f.dst;
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    std::vector<char> target(c.hom_size(y, w), 0);
    std::size_t expected = 0;
    for (const auto& u : c.hom(y, w))
      if (c.compose(u, f) == c.compose(u, g)) {
        target[u.index] = 1;
        ++expected;
      }
    if (c.hom_size(k.apex, w) != expected) return false;
    std::vector<char> seen(target.size(), 0);
    for (const auto& v : c.hom(k.apex, w)) {
      auto u = c.compose(v, k.q).index;
      if (!target[u] || seen[u]) return false;
      seen[u] = 1;
    }
  }
  return true;
}

inline std::vector<std::size_t> coequalizer_labels(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g,
                                                   std::size_t* count) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 0; x < c.fiber(f).size(); ++x) pairs.push_back({c.fiber(f)[x], c.fiber(g)[x]});
  return detail::classes_of(c.fiber_size(f.dst), pairs, count);
}

inline bool coequalizer_preserved(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g,
                                  const QuotientCocone& k) {
  std::size_t n = 0;
  auto cls = coequalizer_labels(c, f, g, &n);
  return detail::induces_bijection(c.fiber(k.q), cls, n, c.fiber_size(k.apex));
}

inline std::optional<QuotientCocone> find_coequalizer(const FiniteConcreteCategory& c, const Arrow& f, const Arrow& g) {
  std::size_t expected = 0;
  coequalizer_labels(c, f, g, &expected);
  for (int pass = 0; pass < 2; ++pass)
    for (auto q : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(q) != expected) continue;
      for (const auto& arr : c.hom(f.dst, q)) {
        QuotientCocone k{q, arr};
        if (c.compose(arr, f) != c.compose(arr, g)) continue;
        if ((pass == 0) != coequalizer_preserved(c, f, g, k)) continue;
        if (is_coequalizer(c, f, g, k)) return k;
      }
    }
  return std::nullopt;
}

// ---- induced arrows ----

// the arrow K -> z restricting to legs[j] on the j-th summand
inline std::optional<Arrow> copair(const FiniteConcreteCategory& c, const CoproductCocone& k,
                                   const std::vector<Arrow>& legs, ObjectId z) {
  for (const auto& u : c.hom(k.apex, z)) {
    bool ok = true;
    for (std::size_t j = 0; j < legs.size() && ok; ++j) ok = c.compose(u, k.injections[j]) == legs[j];
    if (ok) return u;
  }
  return std::nullopt;
}

// the arrow w -> P with p1 t = u and p2 t = v
inline std::optional<Arrow> pair_into(const FiniteConcreteCategory& c, ObjectId w, const Arrow& p1,
                                      const Arrow& p2, const Arrow& u, const Arrow& v) {
  for (const auto& t : c.hom(w, p1.src))
    if (c.compose(p1, t) == u && c.compose(p2, t) == v) return t;
  return std::nullopt;
}

// some t with m t = g (m usually mono)
inline std::optional<Arrow> lift_through(const FiniteConcreteCategory& c, const Arrow& m, const Arrow& g) {
  for (const auto& t : c.hom(g.src, m.src))
    if (c.compose(m, t) == g) return t;
  return std::nullopt;
}

// ---- epi-mono factorizations and summands ----

struct Factorization {
  Arrow e;  // strict epi X -> I
  Arrow i;  // mono I -> Y
};

inline std::optional<Factorization> try_epi_mono_factor(const FiniteConcreteCategory& c, const Arrow& f) {
  c.check_arrow(f);
  const auto& ff = c.fiber(f);
  std::set<Point> image(ff.begin(), ff.end());
  if (c.faithful()) {
    for (auto obj : detail::by_size_distance(c, image.size())) {
      if (c.fiber_size(obj) != image.size()) break;
      for (const auto& i : c.hom(obj, f.dst)) {
        const auto& fi = c.fiber(i);
        if (std::set<Point>(fi.begin(), fi.end()) != image) continue;
        std::vector<Point> back(c.fiber_size(f.dst), SIZE_MAX);
        for (Point p = 0; p < fi.size(); ++p) back[fi[p]] = p;
        std::vector<Point> fe(ff.size());
        for (Point x = 0; x < ff.size(); ++x) fe[x] = back[ff[x]];
        auto e = c.arrow_with_fiber(f.src, obj, fe);
        if (e && is_strict_epi(c, *e) && is_mono(c, i)) return Factorization{*e, i};
      }
    }
  }
  for (auto obj : detail::by_size_distance(c, image.size()))
    for (const auto& i : c.hom(obj, f.dst)) {
      if (!is_mono(c, i)) continue;
      for (const auto& e : c.hom(f.src, obj))
        if (c.compose(i, e) == f && is_strict_epi(c, e)) return Factorization{e, i};
    }
  return std::nullopt;
}

inline Factorization epi_mono_factor(const FiniteConcreteCategory& c, const Arrow& f) {
  if (auto r = try_epi_mono_factor(c, f)) return *r;
  throw Error(ErrorKind::NoImageObject, "no strict epi-mono factorization of " + c.describe(f));
}

// j : J -> Y with (Y; i, j) a coproduct of I and J
inline std::optional<Arrow> complement_summand(const FiniteConcreteCategory& c, const Arrow& i) {
  const auto y = i.dst;
  const auto expected = c.fiber_size(y) - std::min(c.fiber_size(y), c.fiber_size(i.src));
  for (int pass = 0; pass < 2; ++pass)
    for (auto j_obj : detail::by_size_distance(c, expected)) {
      if (pass == 0 && c.fiber_size(j_obj) != expected) continue;
      for (const auto& j : c.hom(j_obj, y)) {
        CoproductCocone cc{y, {i, j}};
        if ((pass == 0) != coproduct_preserved(c, cc)) continue;
        if (is_coproduct(c, cc)) return j;
      }
    }
  return std::nullopt;
}

}  // namespace galois
