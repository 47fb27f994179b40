#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "galois/error.hpp"
#include "galois/util.hpp"

namespace galois {

// Unvalidated tables as read from a file or built by hand. inverse may be
// left empty; it is then computed (groups) or ignored (monoids).
struct RawTable {
  std::string name;
  std::size_t size = 0;
  std::vector<Element> compose;  // row-major, compose[a * size + b] = ab
  std::vector<Element> inverse;
};

class FiniteMonoid;
class FiniteGroup;
FiniteMonoid validate_monoid(const RawTable& raw, std::size_t cap);
FiniteGroup validate_group(const RawTable& raw, std::size_t cap);

class FiniteMonoid {
 public:
  FiniteMonoid() : name_("C1"), n_(1), table_{0}, identity_(0) {}
  virtual ~FiniteMonoid() = default;
  FiniteMonoid(const FiniteMonoid&) = default;
  FiniteMonoid& operator=(const FiniteMonoid&) = default;

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  std::size_t size() const { return n_; }
  Element identity() const { return identity_; }
  Element compose(Element a, Element b) const { return table_[a * n_ + b]; }
  const std::vector<Element>& table() const { return table_; }
  bool is_group() const { return !inverse_.empty(); }
  const std::vector<Element>& inverse_table() const { return inverse_; }
  Element inverse(Element a) const {
    if (inverse_.empty())
      throw Error(ErrorKind::MonoidActorUnsupported, "monoid " + name_ + " has no inverses");
    return inverse_[a];
  }
  bool same_table(const FiniteMonoid& o) const {
    return n_ == o.n_ && identity_ == o.identity_ && table_ == o.table_;
  }
  RawTable raw() const { return RawTable{name_, n_, table_, inverse_}; }

 protected:
  std::string name_;
  std::size_t n_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;

  friend FiniteMonoid validate_monoid(const RawTable&, std::size_t);
  friend FiniteGroup validate_group(const RawTable&, std::size_t);
};

class FiniteGroup : public FiniteMonoid {
 public:
  FiniteGroup() { inverse_ = {0}; }
  Element inverse(Element a) const { return inverse_[a]; }

 private:
  friend FiniteGroup validate_group(const RawTable&, std::size_t);
};

namespace detail {

inline void check_table_shape(const RawTable& raw, std::size_t cap) {
  if (raw.size == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  if (raw.size > cap)
    throw Error(ErrorKind::SizeCapExceeded,
                "size " + std::to_string(raw.size) + " exceeds cap " + std::to_string(cap),
                {raw.size, cap});
  if (raw.compose.size() != raw.size * raw.size)
    throw Error(ErrorKind::MalformedTable, "compose table has wrong length");
  for (std::size_t i = 0; i < raw.compose.size(); ++i)
    if (raw.compose[i] >= raw.size)
      throw Error(ErrorKind::MalformedTable, "entry out of range at (" +
                                                 std::to_string(i / raw.size) + "," +
                                                 std::to_string(i % raw.size) + ")",
                  {i / raw.size, i % raw.size});
}

inline void check_associative(const RawTable& raw) {
  const std::size_t n = raw.size;
  const auto& t = raw.compose;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = t[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (t[ij * n + k] != t[i * n + t[j * n + k]])
          throw Error(ErrorKind::NonAssociative,
                      "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")",
                      {i, j, k});
    }
}

inline Element find_identity(const RawTable& raw) {
  const std::size_t n = raw.size;
  const auto& t = raw.compose;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  Element witness = 0;
  for (Element e = 0; e < n; ++e)
    if (t[e * n + e] == e) {
      witness = e;
      break;
    }
  throw Error(ErrorKind::BadIdentity, "no two-sided identity; element " +
                                          std::to_string(witness) + " is not neutral",
              {witness});
}

}  // namespace detail

inline FiniteMonoid validate_monoid(const RawTable& raw, std::size_t cap = kDefaultGroupCap) {
  detail::check_table_shape(raw, cap);
  detail::check_associative(raw);
  FiniteMonoid m;
  m.name_ = raw.name;
  m.n_ = raw.size;
  m.table_ = raw.compose;
  m.identity_ = detail::find_identity(raw);
  m.inverse_.clear();
  return m;
}

inline FiniteGroup validate_group(const RawTable& raw, std::size_t cap = kDefaultGroupCap) {
  detail::check_table_shape(raw, cap);
  detail::check_associative(raw);
  const Element e = detail::find_identity(raw);
  const std::size_t n = raw.size;
  const auto& t = raw.compose;
  if (!raw.inverse.empty() && raw.inverse.size() != n)
    throw Error(ErrorKind::MalformedTable, "inverse row has wrong length");
  std::vector<Element> inv(n);
  for (Element i = 0; i < n; ++i) {
    if (!raw.inverse.empty()) {
      const auto j = raw.inverse[i];
      if (j >= n || t[i * n + j] != e || t[j * n + i] != e)
        throw Error(ErrorKind::BadInverse, "listed inverse of " + std::to_string(i) + " is wrong",
                    {i});
      inv[i] = j;
      continue;
    }
    bool found = false;
    for (Element j = 0; j < n && !found; ++j)
      if (t[i * n + j] == e && t[j * n + i] == e) {
        inv[i] = j;
        found = true;
      }
    if (!found)
      throw Error(ErrorKind::BadInverse, "element " + std::to_string(i) + " has no inverse", {i});
  }
  FiniteGroup g;
  g.name_ = raw.name;
  g.n_ = n;
  g.table_ = raw.compose;
  g.identity_ = e;
  g.inverse_ = std::move(inv);
  return g;
}

// Closure of a set of generators under the monoid product (for a finite
// group this is the generated subgroup). Result sorted.
inline std::vector<Element> generated(const FiniteMonoid& m, const std::vector<Element>& gens) {
  std::vector<char> in(m.size(), 0);
  std::vector<Element> out{m.identity()};
  in[m.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      auto y = m.compose(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Lowest-index-first greedy generating set.
inline std::vector<Element> greedy_generators(const FiniteMonoid& m) {
  std::vector<Element> gens;
  std::vector<char> in(m.size(), 0);
  in[m.identity()] = 1;
  for (Element x = 0; x < m.size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (auto y : generated(m, gens)) in[y] = 1;
  }
  return gens;
}

inline std::size_t element_order(const FiniteMonoid& g, Element x) {
  std::size_t k = 1;
  Element p = x;
  while (p != g.identity()) {
    p = g.compose(p, x);
    if (++k > g.size()) return 0;  // never reaches identity (monoid)
  }
  return k;
}

struct Subgroup {
  std::vector<Element> members;  // sorted

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// size first, then lexicographic member list
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members < b.members;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty()) return false;
  if (!std::is_sorted(h.members.begin(), h.members.end())) return false;
  if (std::adjacent_find(h.members.begin(), h.members.end()) != h.members.end()) return false;
  if (h.members.back() >= g.size()) return false;
  if (!h.contains(g.identity())) return false;
  for (auto a : h.members) {
    if (!h.contains(g.inverse(a))) return false;
    for (auto b : h.members)
      if (!h.contains(g.compose(a, b))) return false;
  }
  return true;
}

inline void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h))
    throw Error(ErrorKind::NotASubgroup, "{" + detail::join(h.members, ",") + "} in " + g.name());
}

inline Subgroup whole_group(const FiniteGroup& g) {
  return Subgroup{detail::identity_map(g.size())};
}
inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

inline std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap) {
  if (g.size() > cap)
    throw Error(ErrorKind::SizeCapExceeded, "group " + g.name() + " larger than cap",
                {g.size(), cap});
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> members, gens;
  members.push_back({g.identity()});
  gens.push_back({});
  seen.insert(members[0]);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<char> in(g.size(), 0);
    for (auto x : members[i]) in[x] = 1;
    for (Element x = 0; x < g.size(); ++x) {
      if (in[x]) continue;
      auto ng = gens[i];
      ng.push_back(x);
      auto k = generated(g, ng);
      if (seen.insert(k).second) {
        members.push_back(std::move(k));
        gens.push_back(std::move(ng));
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(members.size());
  for (auto& m : members) out.push_back(Subgroup{std::move(m)});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// x h x^-1
inline Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element x) {
  Subgroup r;
  r.members.reserve(h.size());
  for (auto m : h.members) r.members.push_back(g.compose(g.compose(x, m), g.inverse(x)));
  std::sort(r.members.begin(), r.members.end());
  return r;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.size(); ++x)
    if (conjugate(g, h, x) != h) return false;
  return true;
}

// Classes in order of their least member; each class sorted canonically.
inline std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(
    const FiniteGroup& g, std::size_t cap = kDefaultGroupCap) {
  auto subs = subgroups(g, cap);
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = i;
  std::vector<char> done(subs.size(), 0);
  std::vector<std::vector<Subgroup>> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::set<std::size_t> cls;
    for (Element x = 0; x < g.size(); ++x) cls.insert(index.at(conjugate(g, subs[i], x).members));
    std::vector<Subgroup> c;
    for (auto j : cls) {
      done[j] = 1;
      c.push_back(subs[j]);
    }
    classes.push_back(std::move(c));
  }
  return classes;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
  return r;
}

inline Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup(g, h);
  Subgroup core = h;
  for (Element x = 0; x < g.size(); ++x) core = intersect(core, conjugate(g, h, x));
  return core;
}

inline FiniteMonoid opposite(const FiniteMonoid& m) {
  RawTable raw{m.name() + "^op", m.size(), std::vector<Element>(m.size() * m.size()), {}};
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b) raw.compose[a * m.size() + b] = m.compose(b, a);
  return validate_monoid(raw, SIZE_MAX);
}

inline FiniteGroup opposite(const FiniteGroup& g) {
  RawTable raw{g.name() + "^op", g.size(), std::vector<Element>(g.size() * g.size()),
               g.inverse_table()};
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b) raw.compose[a * g.size() + b] = g.compose(b, a);
  auto r = validate_group(raw, SIZE_MAX);
  // opposite of an opposite gets its old name back
  const auto& n = g.name();
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^op") == 0) r.rename(n.substr(0, n.size() - 3));
  return r;
}

struct GroupHom {
  std::vector<Element> map;
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

inline bool is_homomorphism(const FiniteMonoid& src, const FiniteMonoid& dst,
                            const std::vector<Element>& map) {
  if (map.size() != src.size()) return false;
  for (auto y : map)
    if (y >= dst.size()) return false;
  if (map[src.identity()] != dst.identity()) return false;
  for (Element a = 0; a < src.size(); ++a)
    for (Element b = 0; b < src.size(); ++b)
      if (map[src.compose(a, b)] != dst.compose(map[a], map[b])) return false;
  return true;
}

inline GroupHom make_hom(const FiniteMonoid& src, const FiniteMonoid& dst,
                         std::vector<Element> map) {
  if (!is_homomorphism(src, dst, map))
    throw Error(ErrorKind::NotAHomomorphism, src.name() + " -> " + dst.name());
  return GroupHom{std::move(map)};
}

inline Subgroup hom_image(const GroupHom& f) {
  Subgroup r{f.map};
  std::sort(r.members.begin(), r.members.end());
  r.members.erase(std::unique(r.members.begin(), r.members.end()), r.members.end());
  return r;
}

inline bool hom_is_surjective(const GroupHom& f, const FiniteMonoid& dst) {
  return hom_image(f).size() == dst.size();
}

inline Subgroup hom_kernel(const GroupHom& f, const FiniteMonoid& dst) {
  Subgroup k;
  for (Element a = 0; a < f.map.size(); ++a)
    if (f.map[a] == dst.identity()) k.members.push_back(a);
  return k;
}

namespace detail {

// Extends a partial assignment of generator images to a map on the whole
// subgroup they generate; false on conflict.
inline bool extend_from_generators(const FiniteMonoid& g1, const FiniteMonoid& g2,
                                   const std::vector<Element>& gens,
                                   const std::vector<Element>& images, std::size_t used,
                                   std::vector<Element>& map) {
  std::fill(map.begin(), map.end(), SIZE_MAX);
  map[g1.identity()] = g2.identity();
  std::vector<Element> queue{g1.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto u = queue[i];
    for (std::size_t k = 0; k < used; ++k) {
      auto v = g1.compose(u, gens[k]);
      auto img = g2.compose(map[u], images[k]);
      if (map[v] == SIZE_MAX) {
        map[v] = img;
        queue.push_back(v);
      } else if (map[v] != img) {
        return false;
      }
    }
  }
  return true;
}

inline bool partial_injective(const std::vector<Element>& map, std::size_t codomain) {
  std::vector<char> seen(codomain, 0);
  for (auto v : map) {
    if (v == SIZE_MAX) continue;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace detail

inline std::optional<GroupHom> group_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2,
                                                std::size_t cap = kDefaultGroupCap) {
  if (g1.size() > cap || g2.size() > cap)
    throw Error(ErrorKind::SizeCapExceeded, "isomorphism test beyond cap");
  if (g1.size() != g2.size()) return std::nullopt;
  const std::size_t n = g1.size();
  std::vector<std::size_t> ord1(n), ord2(n);
  for (Element x = 0; x < n; ++x) {
    ord1[x] = element_order(g1, x);
    ord2[x] = element_order(g2, x);
  }
  {
    auto a = ord1, b = ord2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto gens = greedy_generators(g1);
  std::vector<Element> images(gens.size());
  std::vector<Element> map(n);
  std::optional<GroupHom> result;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      if (!detail::extend_from_generators(g1, g2, gens, images, k, map)) return false;
      if (!detail::is_injective(map, n)) return false;
      result = GroupHom{map};
      return true;
    }
    for (Element y = 0; y < n; ++y) {
      if (ord2[y] != ord1[gens[k]]) continue;
      images[k] = y;
      if (!detail::extend_from_generators(g1, g2, gens, images, k + 1, map)) continue;
      if (!detail::partial_injective(map, n)) continue;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

// ---- catalog ----

using Permutation = std::vector<std::size_t>;

struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;  // element i acts as elements[i]
};

// Elements sorted lexicographically (identity first); product is composition
// a*b = a after b.
inline PermutationGroup permutation_group(std::string name, const std::vector<Permutation>& gens,
                                          std::size_t degree, std::size_t cap = kDefaultGroupCap) {
  std::set<Permutation> seen{detail::identity_map(degree)};
  std::vector<Permutation> queue{detail::identity_map(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      auto p = detail::compose_maps(queue[i], s);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::SizeCapExceeded, "permutation group " + name + " beyond cap");
        queue.push_back(std::move(p));
      }
    }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  std::map<Permutation, std::size_t> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = i;
  RawTable raw{std::move(name), elems.size(), {}, {}};
  raw.compose.resize(elems.size() * elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      raw.compose[a * elems.size() + b] = idx.at(detail::compose_maps(elems[a], elems[b]));
  return PermutationGroup{validate_group(raw, cap), std::move(elems)};
}

inline FiniteGroup cyclic_group(std::size_t n) {
  RawTable raw{"C" + std::to_string(n), n, std::vector<Element>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) raw.compose[a * n + b] = (a + b) % n;
  return validate_group(raw, SIZE_MAX);
}

inline FiniteGroup trivial_group() { return cyclic_group(1); }

inline FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = detail::identity_map(n), c(n);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return permutation_group("S" + std::to_string(n), gens, n, SIZE_MAX).group;
}

inline FiniteGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation c = detail::identity_map(n);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return permutation_group("A" + std::to_string(n), gens, n, SIZE_MAX).group;
}

// symmetries of the n-gon, order 2n
inline FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::MalformedTable, "dihedral group needs n >= 3");
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return permutation_group("D" + std::to_string(n), {r, s}, n, SIZE_MAX).group;
}

inline FiniteGroup klein_four_group() {
  return permutation_group("V4", {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4).group;
}

// index = 4*sign + unit, units 1,i,j,k
inline FiniteGroup quaternion_group() {
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  RawTable raw{"Q8", 8, std::vector<Element>(64), {}};
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t ua = a % 4, ub = b % 4;
      std::size_t s = (a / 4 + b / 4 + static_cast<std::size_t>(sign[ua][ub])) % 2;
      raw.compose[a * 8 + b] = 4 * s + static_cast<std::size_t>(unit[ua][ub]);
    }
  return validate_group(raw);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.size() * b.size();
  RawTable raw{a.name() + "x" + b.name(), n, std::vector<Element>(n * n), {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      raw.compose[x * n + y] = a.compose(x / b.size(), y / b.size()) * b.size() +
                               b.compose(x % b.size(), y % b.size());
  return validate_group(raw, SIZE_MAX);
}

// Monoid of all maps generated by the given self-maps of {0..degree-1};
// identity first, the rest lexicographic; product is composition.
inline FiniteMonoid transformation_monoid(std::string name,
                                          const std::vector<std::vector<std::size_t>>& gens,
                                          std::size_t degree) {
  const auto id = detail::identity_map(degree);
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      auto p = detail::compose_maps(queue[i], s);
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  std::vector<std::vector<std::size_t>> elems{id};
  for (const auto& p : seen)
    if (p != id) elems.push_back(p);
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = i;
  RawTable raw{std::move(name), elems.size(), std::vector<Element>(elems.size() * elems.size()), {}};
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      raw.compose[a * elems.size() + b] = idx.at(detail::compose_maps(elems[a], elems[b]));
  return validate_monoid(raw, SIZE_MAX);
}

// {1, e} with e idempotent
inline FiniteMonoid idempotent_monoid() { return transformation_monoid("M2e", {{0, 0}}, 2); }

// {1, a, a^2} with a^3 = a^2
inline FiniteMonoid nilpotent_monoid() { return transformation_monoid("M3n", {{1, 2, 2}}, 3); }

inline FiniteMonoid full_transformation_monoid(std::size_t n) {
  std::vector<std::vector<std::size_t>> gens;
  if (n >= 2) {
    auto t = detail::identity_map(n);
    std::swap(t[0], t[1]);
    std::vector<std::size_t> c(n), e = detail::identity_map(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    e[1] = 0;
    gens = {t, c, e};
  }
  return transformation_monoid("T" + std::to_string(n), gens, n);
}

// Recognised names: C<n>, Z/<n>, S<n>, A<n>, D<n> (order 2n), V4, Q8, 1.
inline std::optional<FiniteGroup> named_group(std::string_view name) {
  auto num = [&](std::size_t skip) -> std::optional<std::size_t> {
    if (name.size() <= skip) return std::nullopt;
    std::size_t v = 0;
    for (auto c : name.substr(skip)) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > 1000) return std::nullopt;
    }
    return v;
  };
  if (name == "1" || name == "trivial") return trivial_group();
  if (name == "V4") return klein_four_group();
  if (name == "Q8") return quaternion_group();
  if (name.starts_with("Z/")) {
    if (auto n = num(2); n && *n >= 1 && *n <= 64) {
      auto g = cyclic_group(*n);
      g.rename(std::string(name));
      return g;
    }
    return std::nullopt;
  }
  if (name.empty()) return std::nullopt;
  auto n = num(1);
  if (!n) return std::nullopt;
  switch (name[0]) {
    case 'C': if (*n >= 1 && *n <= 64) return cyclic_group(*n); break;
    case 'S': if (*n >= 1 && *n <= 4) return symmetric_group(*n); break;
    case 'A': if (*n >= 1 && *n <= 5) return alternating_group(*n); break;
    case 'D': if (*n >= 3 && *n <= 32) return dihedral_group(*n); break;
    default: break;
  }
  return std::nullopt;
}

// Groups as above plus the monoids M2e, M3n, T<n>. Groups keep their
// dynamic type so as_group() works on the result.
inline std::shared_ptr<const FiniteMonoid> named_monoid(std::string_view name) {
  if (name == "M2e") return std::make_shared<const FiniteMonoid>(idempotent_monoid());
  if (name == "M3n") return std::make_shared<const FiniteMonoid>(nilpotent_monoid());
  if (name.size() == 2 && name[0] == 'T' && name[1] >= '1' && name[1] <= '3')
    return std::make_shared<const FiniteMonoid>(
        full_transformation_monoid(static_cast<std::size_t>(name[1] - '0')));
  if (auto g = named_group(name)) return std::make_shared<const FiniteGroup>(std::move(*g));
  return nullptr;
}

inline const FiniteGroup& as_group(const FiniteMonoid& m) {
  if (auto g = dynamic_cast<const FiniteGroup*>(&m)) return *g;
  throw Error(ErrorKind::MonoidActorUnsupported, m.name() + " is not a group");
}

inline std::shared_ptr<const FiniteMonoid> share(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}
inline std::shared_ptr<const FiniteMonoid> share(FiniteMonoid m) {
  return std::make_shared<const FiniteMonoid>(std::move(m));
}

}  // namespace galois
