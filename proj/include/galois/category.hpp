#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "galois/actions.hpp"

namespace galois {

using ObjectId = std::size_t;

// An arrow is the index-th element of hom(src, dst).
struct Arrow {
  ObjectId src = 0;
  ObjectId dst = 0;
  std::size_t index = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct HomSet {
  std::vector<std::vector<Point>> fibers;
  // fiber -> first arrow carrying it
  std::unordered_map<std::vector<Point>, std::size_t, detail::VecHash> by_fiber;

  void add(std::vector<Point> f) {
    by_fiber.emplace(f, fibers.size());
    fibers.push_back(std::move(f));
  }
};

class CategoryBackend {
 public:
  virtual ~CategoryBackend() = default;
  virtual std::size_t object_count() const = 0;
  virtual const std::string& object_name(ObjectId) const = 0;
  virtual std::size_t fiber_size(ObjectId) const = 0;
  virtual const HomSet& hom(ObjectId, ObjectId) const = 0;
  // index of g after f inside hom(f.src, g.dst)
  virtual std::size_t compose(const Arrow& g, const Arrow& f) const = 0;
  virtual std::size_t identity_index(ObjectId) const = 0;
  // fibers separate arrows in every hom-set
  virtual bool faithful() const = 0;
  virtual std::string arrow_name(const Arrow& a) const {
    return object_name(a.src) + "->" + object_name(a.dst) + "#" + std::to_string(a.index);
  }
};

// ---- explicit tables (files, fixtures) ----

struct TableCategoryData {
  struct Object {
    std::string name;
    std::size_t fiber = 0;
  };
  struct ArrowRecord {
    std::string name;
    ObjectId src = 0;
    ObjectId dst = 0;
    std::vector<Point> fiber;
  };
  struct Composite {
    std::size_t g = 0, f = 0, h = 0;  // g after f = h, indices into arrows
  };
  std::string name;
  std::vector<Object> objects;
  std::vector<ArrowRecord> arrows;
  std::vector<Composite> composites;
};

class TableBackend final : public CategoryBackend {
 public:
  explicit TableBackend(TableCategoryData data) : data_(std::move(data)) { build(); }

  std::size_t object_count() const override { return data_.objects.size(); }
  const std::string& object_name(ObjectId x) const override { return data_.objects[x].name; }
  std::size_t fiber_size(ObjectId x) const override { return data_.objects[x].fiber; }
  const HomSet& hom(ObjectId x, ObjectId y) const override { return homs_[x * object_count() + y]; }
  std::size_t compose(const Arrow& g, const Arrow& f) const override {
    auto gi = global(g), fi = global(f);
    return local_[comp_.at(key(gi, fi))];
  }
  std::size_t identity_index(ObjectId x) const override { return identity_[x]; }
  bool faithful() const override { return faithful_; }
  std::string arrow_name(const Arrow& a) const override { return data_.arrows[global(a)].name; }
  const TableCategoryData& data() const { return data_; }
  std::size_t global(const Arrow& a) const { return ids_[a.src * object_count() + a.dst][a.index]; }

 private:
  static std::uint64_t key(std::size_t g, std::size_t f) {
    return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
  }

  void build() {
    const auto n = object_count();
    homs_.assign(n * n, {});
    ids_.assign(n * n, {});
    local_.resize(data_.arrows.size());
    for (std::size_t i = 0; i < data_.arrows.size(); ++i) {
      const auto& a = data_.arrows[i];
      if (a.src >= n || a.dst >= n)
        throw Error(ErrorKind::InvalidCategory, "arrow " + a.name + " has unknown endpoint");
      if (a.fiber.size() != data_.objects[a.src].fiber)
        throw Error(ErrorKind::InvalidCategory, "arrow " + a.name + " fiber has wrong length");
      for (auto y : a.fiber)
        if (y >= data_.objects[a.dst].fiber)
          throw Error(ErrorKind::InvalidCategory, "arrow " + a.name + " fiber out of range");
      auto& h = homs_[a.src * n + a.dst];
      local_[i] = h.fibers.size();
      ids_[a.src * n + a.dst].push_back(i);
      h.add(a.fiber);
    }
    faithful_ = true;
    for (const auto& h : homs_) faithful_ = faithful_ && h.by_fiber.size() == h.fibers.size();
    for (const auto& c : data_.composites) {
      if (c.g >= data_.arrows.size() || c.f >= data_.arrows.size() || c.h >= data_.arrows.size())
        throw Error(ErrorKind::InvalidCategory, "composite refers to unknown arrow");
      const auto &g = data_.arrows[c.g], &f = data_.arrows[c.f], &h = data_.arrows[c.h];
      if (f.dst != g.src || h.src != f.src || h.dst != g.dst)
        throw Error(ErrorKind::InvalidCategory,
                    "composite " + g.name + " " + f.name + " = " + h.name + " is ill-typed");
      if (!comp_.emplace(key(c.g, c.f), c.h).second)
        throw Error(ErrorKind::InvalidCategory, "composite " + g.name + " " + f.name + " given twice");
    }
    // composites not listed are inferred from fibers when that is unambiguous
    for (std::size_t gi = 0; gi < data_.arrows.size(); ++gi)
      for (std::size_t fi = 0; fi < data_.arrows.size(); ++fi) {
        const auto &g = data_.arrows[gi], &f = data_.arrows[fi];
        if (f.dst != g.src || comp_.count(key(gi, fi))) continue;
        const auto fib = detail::compose_maps(g.fiber, f.fiber);
        const auto& ids = ids_[f.src * n + g.dst];
        std::size_t found = SIZE_MAX, count = 0;
        for (auto id : ids)
          if (data_.arrows[id].fiber == fib) {
            found = id;
            ++count;
          }
        if (count != 1)
          throw Error(ErrorKind::InvalidCategory,
                      "composite " + g.name + " " + f.name + " missing and not determined by fibers");
        comp_.emplace(key(gi, fi), found);
      }
    identity_.assign(n, SIZE_MAX);
    for (ObjectId x = 0; x < n; ++x) {
      for (auto e : ids_[x * n + x]) {
        bool ok = data_.arrows[e].fiber == detail::identity_map(data_.objects[x].fiber);
        for (std::size_t a = 0; a < data_.arrows.size() && ok; ++a) {
          if (data_.arrows[a].src == x) ok = comp_.at(key(a, e)) == a;
          if (ok && data_.arrows[a].dst == x) ok = comp_.at(key(e, a)) == a;
        }
        if (ok) {
          identity_[x] = local_[e];
          break;
        }
      }
      if (identity_[x] == SIZE_MAX)
        throw Error(ErrorKind::InvalidCategory, "object " + data_.objects[x].name + " has no identity");
    }
    for (std::size_t hi = 0; hi < data_.arrows.size(); ++hi)
      for (std::size_t gi = 0; gi < data_.arrows.size(); ++gi) {
        if (data_.arrows[gi].dst != data_.arrows[hi].src) continue;
        for (std::size_t fi = 0; fi < data_.arrows.size(); ++fi) {
          if (data_.arrows[fi].dst != data_.arrows[gi].src) continue;
          if (comp_.at(key(comp_.at(key(hi, gi)), fi)) != comp_.at(key(hi, comp_.at(key(gi, fi)))))
            throw Error(ErrorKind::InvalidCategory, "composition not associative at " +
                                                        data_.arrows[hi].name + "," +
                                                        data_.arrows[gi].name + "," +
                                                        data_.arrows[fi].name);
        }
      }
    for (const auto& [k, h] : comp_) {
      auto gi = static_cast<std::size_t>(k >> 32), fi = static_cast<std::size_t>(k & 0xffffffffu);
      if (detail::compose_maps(data_.arrows[gi].fiber, data_.arrows[fi].fiber) != data_.arrows[h].fiber)
        throw Error(ErrorKind::InvalidCategory, "fiber is not functorial at " +
                                                    data_.arrows[gi].name + " " +
                                                    data_.arrows[fi].name);
    }
  }

  TableCategoryData data_;
  std::vector<HomSet> homs_;
  std::vector<std::vector<std::size_t>> ids_;
  std::vector<std::size_t> local_;
  std::unordered_map<std::uint64_t, std::size_t> comp_;
  std::vector<std::size_t> identity_;
  bool faithful_ = true;
};

// ---- categories of finite sets with commuting endomaps (G-sets, M-sets, covers) ----

// An object is a finite set with one self-map per generator of the actor;
// arrows are the maps commuting with all generators, enumerated on first use.
struct ActionObject {
  std::string name;
  std::size_t points = 0;
  std::vector<std::vector<Point>> gens;
};

class ActionBackend final : public CategoryBackend {
 public:
  explicit ActionBackend(std::vector<ActionObject> objects) : objects_(std::move(objects)) {
    const auto n = objects_.size();
    cache_ = std::vector<std::unique_ptr<HomSet>>(n * n);
    for (const auto& o : objects_) {
      if (!objects_.empty() && o.gens.size() != objects_[0].gens.size())
        throw Error(ErrorKind::InvalidCategory, "objects disagree on generator count");
      for (const auto& g : o.gens) {
        if (g.size() != o.points) throw Error(ErrorKind::InvalidCategory, "bad generator map");
        for (auto y : g)
          if (y >= o.points) throw Error(ErrorKind::InvalidCategory, "bad generator map");
      }
    }
  }

  std::size_t object_count() const override { return objects_.size(); }
  const std::string& object_name(ObjectId x) const override { return objects_[x].name; }
  std::size_t fiber_size(ObjectId x) const override { return objects_[x].points; }
  const HomSet& hom(ObjectId x, ObjectId y) const override {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = cache_[x * objects_.size() + y];
    if (!slot) {
      slot = std::make_unique<HomSet>();
      auto* h = slot.get();
      detail::enumerate_commuting_maps(objects_[x].gens, objects_[y].gens, objects_[x].points,
                                       objects_[y].points, false,
                                       [h](const std::vector<Point>& f) {
                                         h->add(f);
                                         return true;
                                       });
    }
    return *slot;
  }
  std::size_t compose(const Arrow& g, const Arrow& f) const override {
    const auto& fib = detail::compose_maps(hom(g.src, g.dst).fibers[g.index],
                                           hom(f.src, f.dst).fibers[f.index]);
    return hom(f.src, g.dst).by_fiber.at(fib);
  }
  std::size_t identity_index(ObjectId x) const override {
    return hom(x, x).by_fiber.at(detail::identity_map(objects_[x].points));
  }
  bool faithful() const override { return true; }
  const ActionObject& object(ObjectId x) const { return objects_[x]; }

 private:
  std::vector<ActionObject> objects_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<HomSet>> cache_;
};

class SubBackend final : public CategoryBackend {
 public:
  SubBackend(std::shared_ptr<const CategoryBackend> parent, std::vector<ObjectId> ids)
      : parent_(std::move(parent)), ids_(std::move(ids)) {}
  std::size_t object_count() const override { return ids_.size(); }
  const std::string& object_name(ObjectId x) const override { return parent_->object_name(ids_[x]); }
  std::size_t fiber_size(ObjectId x) const override { return parent_->fiber_size(ids_[x]); }
  const HomSet& hom(ObjectId x, ObjectId y) const override { return parent_->hom(ids_[x], ids_[y]); }
  std::size_t compose(const Arrow& g, const Arrow& f) const override {
    return parent_->compose(up(g), up(f));
  }
  std::size_t identity_index(ObjectId x) const override { return parent_->identity_index(ids_[x]); }
  bool faithful() const override { return parent_->faithful(); }
  std::string arrow_name(const Arrow& a) const override { return parent_->arrow_name(up(a)); }
  Arrow up(const Arrow& a) const { return Arrow{ids_[a.src], ids_[a.dst], a.index}; }
  const std::vector<ObjectId>& ids() const { return ids_; }

 private:
  std::shared_ptr<const CategoryBackend> parent_;
  std::vector<ObjectId> ids_;
};

// Same arrows and composition as the parent, different fiber functor.
using FiberRule =
    std::function<std::vector<Point>(ObjectId src, ObjectId dst, const std::vector<Point>& parent_fiber)>;

class RefiberBackend final : public CategoryBackend {
 public:
  RefiberBackend(std::shared_ptr<const CategoryBackend> parent, std::vector<std::size_t> sizes,
                 FiberRule rule)
      : parent_(std::move(parent)), sizes_(std::move(sizes)), rule_(std::move(rule)) {
    const auto n = parent_->object_count();
    cache_ = std::vector<std::unique_ptr<HomSet>>(n * n);
  }
  std::size_t object_count() const override { return parent_->object_count(); }
  const std::string& object_name(ObjectId x) const override { return parent_->object_name(x); }
  std::size_t fiber_size(ObjectId x) const override { return sizes_[x]; }
  const HomSet& hom(ObjectId x, ObjectId y) const override {
    const auto& ph = parent_->hom(x, y);
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = cache_[x * object_count() + y];
    if (!slot) {
      slot = std::make_unique<HomSet>();
      for (const auto& f : ph.fibers) slot->add(rule_(x, y, f));
    }
    return *slot;
  }
  std::size_t compose(const Arrow& g, const Arrow& f) const override { return parent_->compose(g, f); }
  std::size_t identity_index(ObjectId x) const override { return parent_->identity_index(x); }
  bool faithful() const override { return false; }
  std::string arrow_name(const Arrow& a) const override { return parent_->arrow_name(a); }

 private:
  std::shared_ptr<const CategoryBackend> parent_;
  std::vector<std::size_t> sizes_;
  FiberRule rule_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<HomSet>> cache_;
};

// ---- the category handle ----

class FiniteConcreteCategory {
 public:
  FiniteConcreteCategory(std::shared_ptr<const CategoryBackend> backend, std::string name,
                         std::optional<std::size_t> fiber_cap = std::nullopt)
      : backend_(std::move(backend)), name_(std::move(name)), fiber_cap_(fiber_cap) {}

  const std::string& name() const { return name_; }
  const std::shared_ptr<const CategoryBackend>& backend() const { return backend_; }
  // Every object with at most this many fiber points that could exist is present.
  // Limits and colimits whose set-level size is larger are not searched.
  std::optional<std::size_t> fiber_cap() const { return fiber_cap_; }

  std::size_t object_count() const { return backend_->object_count(); }
  const std::string& object_name(ObjectId x) const { return backend_->object_name(x); }
  std::optional<ObjectId> find_object(std::string_view name) const {
    for (ObjectId x = 0; x < object_count(); ++x)
      if (object_name(x) == name) return x;
    return std::nullopt;
  }
  std::size_t fiber_size(ObjectId x) const { return backend_->fiber_size(x); }
  std::size_t hom_size(ObjectId x, ObjectId y) const { return backend_->hom(x, y).fibers.size(); }
  std::vector<Arrow> hom(ObjectId x, ObjectId y) const {
    std::vector<Arrow> r(hom_size(x, y));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = Arrow{x, y, i};
    return r;
  }
  const std::vector<Point>& fiber(const Arrow& a) const {
    return backend_->hom(a.src, a.dst).fibers[a.index];
  }
  Arrow compose(const Arrow& g, const Arrow& f) const {
    if (f.dst != g.src)
      throw Error(ErrorKind::ArrowNotInCategory, describe(g) + " after " + describe(f) + " not composable");
    return Arrow{f.src, g.dst, backend_->compose(g, f)};
  }
  Arrow identity(ObjectId x) const { return Arrow{x, x, backend_->identity_index(x)}; }
  bool is_identity(const Arrow& a) const { return a.src == a.dst && a == identity(a.src); }
  bool faithful() const { return backend_->faithful(); }
  std::optional<Arrow> arrow_with_fiber(ObjectId x, ObjectId y, const std::vector<Point>& fib) const {
    const auto& h = backend_->hom(x, y);
    auto it = h.by_fiber.find(fib);
    if (it == h.by_fiber.end()) return std::nullopt;
    return Arrow{x, y, it->second};
  }
  void check_arrow(const Arrow& a) const {
    if (a.src >= object_count() || a.dst >= object_count() || a.index >= hom_size(a.src, a.dst))
      throw Error(ErrorKind::ArrowNotInCategory, "arrow " + std::to_string(a.src) + "->" +
                                                     std::to_string(a.dst) + "#" +
                                                     std::to_string(a.index));
  }
  std::string describe(const Arrow& a) const { return backend_->arrow_name(a); }

 private:
  std::shared_ptr<const CategoryBackend> backend_;
  std::string name_;
  std::optional<std::size_t> fiber_cap_;
};

inline FiniteConcreteCategory make_table_category(TableCategoryData data,
                                                  std::optional<std::size_t> fiber_cap = std::nullopt) {
  auto name = data.name;
  return FiniteConcreteCategory(std::make_shared<const TableBackend>(std::move(data)), name, fiber_cap);
}

inline FiniteConcreteCategory make_action_category(std::string name, std::vector<ActionObject> objects,
                                                   std::optional<std::size_t> fiber_cap = std::nullopt) {
  return FiniteConcreteCategory(std::make_shared<const ActionBackend>(std::move(objects)),
                                std::move(name), fiber_cap);
}

inline FiniteConcreteCategory full_subcategory(const FiniteConcreteCategory& c,
                                               std::vector<ObjectId> ids, std::string name = {},
                                               std::optional<std::size_t> fiber_cap = std::nullopt) {
  for (auto x : ids)
    if (x >= c.object_count()) throw Error(ErrorKind::InvalidCategory, "unknown object in subcategory");
  if (name.empty()) name = c.name() + "|sub";
  return FiniteConcreteCategory(std::make_shared<const SubBackend>(c.backend(), std::move(ids)),
                                std::move(name), fiber_cap);
}

// Subcategory ids in the parent, when c was built by full_subcategory.
inline std::optional<std::vector<ObjectId>> parent_ids(const FiniteConcreteCategory& c) {
  if (auto s = dynamic_cast<const SubBackend*>(c.backend().get())) return s->ids();
  return std::nullopt;
}

inline FiniteConcreteCategory refibered(const FiniteConcreteCategory& c, std::vector<std::size_t> sizes,
                                        FiberRule rule, std::string name) {
  return FiniteConcreteCategory(
      std::make_shared<const RefiberBackend>(c.backend(), std::move(sizes), std::move(rule)),
      std::move(name), c.fiber_cap());
}

// Explicit tables for every arrow; only sensible for small categories.
inline TableCategoryData to_table(const FiniteConcreteCategory& c) {
  TableCategoryData d;
  d.name = c.name();
  std::map<Arrow, std::size_t> gid;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    d.objects.push_back({c.object_name(x), c.fiber_size(x)});
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < c.object_count(); ++y)
      for (const auto& a : c.hom(x, y)) {
        gid[a] = d.arrows.size();
        d.arrows.push_back({"a" + std::to_string(d.arrows.size()), x, y, c.fiber(a)});
      }
  if (!c.faithful())
    for (const auto& [g, gi] : gid)
      for (const auto& [f, fi] : gid)
        if (f.dst == g.src) d.composites.push_back({gi, fi, gid.at(c.compose(g, f))});
  return d;
}

// ---- arrow predicates ----

inline std::optional<Arrow> inverse_of(const FiniteConcreteCategory& c, const Arrow& f) {
  c.check_arrow(f);
  if (c.fiber_size(f.src) != c.fiber_size(f.dst)) {
    if (c.faithful()) return std::nullopt;
  }
  const auto idx = c.identity(f.src), idy = c.identity(f.dst);
  if (c.faithful()) {
    const auto& ff = c.fiber(f);
    if (!detail::is_injective(ff, c.fiber_size(f.dst))) return std::nullopt;
    std::vector<Point> inv(ff.size());
    for (Point x = 0; x < ff.size(); ++x) inv[ff[x]] = x;
    auto g = c.arrow_with_fiber(f.dst, f.src, inv);
    if (g && c.compose(*g, f) == idx && c.compose(f, *g) == idy) return g;
    return std::nullopt;
  }
  for (const auto& g : c.hom(f.dst, f.src))
    if (c.compose(g, f) == idx && c.compose(f, g) == idy) return g;
  return std::nullopt;
}

inline bool is_iso(const FiniteConcreteCategory& c, const Arrow& f) { return inverse_of(c, f).has_value(); }

// Faithful fibers reflect monos, so an injective fiber settles it; otherwise
// every pair of arrows into the source is tried.
inline bool is_mono(const FiniteConcreteCategory& c, const Arrow& f) {
  c.check_arrow(f);
  if (c.faithful() && detail::is_injective(c.fiber(f), c.fiber_size(f.dst))) return true;
  std::vector<ObjectId> ws(c.object_count());
  std::iota(ws.begin(), ws.end(), ObjectId{0});
  std::stable_sort(ws.begin(), ws.end(),
                   [&](ObjectId a, ObjectId b) { return c.fiber_size(a) < c.fiber_size(b); });
  const auto& ff = c.fiber(f);
  for (auto w : ws) {
    if (c.faithful()) {
      // composites compared by fiber, so hom(w, dst) is never enumerated
      std::set<std::vector<Point>> seen;
      for (const auto& u : c.hom(w, f.src))
        if (!seen.insert(detail::compose_maps(ff, c.fiber(u))).second) return false;
      continue;
    }
    std::vector<char> seen(c.hom_size(w, f.dst), 0);
    for (const auto& u : c.hom(w, f.src)) {
      auto k = c.compose(f, u).index;
      if (seen[k]) return false;
      seen[k] = 1;
    }
  }
  return true;
}

inline std::vector<Arrow> automorphism_arrows(const FiniteConcreteCategory& c, ObjectId x) {
  std::vector<Arrow> out;
  for (const auto& h : c.hom(x, x))
    if (is_iso(c, h)) out.push_back(h);
  return out;
}

// Endomorphisms of X as a monoid: element i is arrows[i], product i*j is arrows[i] after arrows[j].
// When every endomorphism is invertible the monoid is returned as a FiniteGroup.
struct EndMonoid {
  std::shared_ptr<const FiniteMonoid> monoid;
  std::vector<Arrow> arrows;
};

inline EndMonoid endomorphism_monoid(const FiniteConcreteCategory& c, ObjectId x, bool automorphisms_only) {
  EndMonoid r;
  r.arrows = automorphisms_only ? automorphism_arrows(c, x) : c.hom(x, x);
  const auto n = r.arrows.size();
  std::map<Arrow, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[r.arrows[i]] = i;
  RawTable raw{"End(" + c.object_name(x) + ")", n, std::vector<Element>(n * n), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.compose[i * n + j] = pos.at(c.compose(r.arrows[i], r.arrows[j]));
  bool all_iso = automorphisms_only;
  if (!all_iso) {
    all_iso = true;
    for (const auto& a : r.arrows) all_iso = all_iso && is_iso(c, a);
  }
  if (all_iso) {
    raw.name = "Aut(" + c.object_name(x) + ")";
    r.monoid = share(validate_group(raw, SIZE_MAX));
  } else {
    r.monoid = share(validate_monoid(raw, SIZE_MAX));
  }
  return r;
}

inline EndMonoid automorphism_group(const FiniteConcreteCategory& c, ObjectId x) {
  return endomorphism_monoid(c, x, true);
}

namespace detail {

// Equivalence on F(X) generated by pairs (F(u)w, F(v)w) with f u = f v.
// With a faithful fiber, g is compatible with f exactly when F(g) is
// constant on its classes.
inline std::vector<std::size_t> kernel_relation_classes(const FiniteConcreteCategory& c, const Arrow& f) {
  UnionFind uf(c.fiber_size(f.src));
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    const auto nw = c.fiber_size(w);
    if (nw == 0) continue;
    std::unordered_map<std::size_t, std::size_t> first;  // composite index -> first u
    for (const auto& u : c.hom(w, f.src)) {
      auto k = c.compose(f, u).index;
      auto [it, fresh] = first.emplace(k, u.index);
      if (fresh) continue;
      const auto& fu = c.fiber(u);
      const auto& fv = c.fiber(Arrow{w, f.src, it->second});
      for (Point p = 0; p < nw; ++p) uf.unite(fu[p], fv[p]);
    }
  }
  return uf.labels();
}

}  // namespace detail

// Every compatible g : X -> Z factors uniquely through f, for every Z in c.
inline bool is_strict_epi(const FiniteConcreteCategory& c, const Arrow& f) {
  c.check_arrow(f);
  const ObjectId x = f.src, y = f.dst;
  if (c.faithful()) {
    const auto cls = detail::kernel_relation_classes(c, f);
    const auto& ff = c.fiber(f);
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      std::unordered_map<std::vector<Point>, std::size_t, detail::VecHash> through;
      for (const auto& h : c.hom(y, z)) ++through[detail::compose_maps(c.fiber(h), ff)];
      for (const auto& g : c.hom(x, z)) {
        const auto& fg = c.fiber(g);
        std::vector<Point> rep(c.fiber_size(x), SIZE_MAX);
        bool compatible = true;
        for (Point p = 0; p < fg.size() && compatible; ++p) {
          auto& r = rep[cls[p]];
          if (r == SIZE_MAX) r = fg[p];
          compatible = r == fg[p];
        }
        if (!compatible) continue;
        auto it = through.find(fg);
        if (it == through.end() || it->second != 1) return false;
      }
    }
    return true;
  }
  // general case: compatibility tested on all pairs of arrows into X
  std::vector<std::vector<std::pair<Arrow, Arrow>>> pairs(c.object_count());
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    std::unordered_map<std::size_t, Arrow> first;
    for (const auto& u : c.hom(w, x)) {
      auto k = c.compose(f, u).index;
      auto [it, fresh] = first.emplace(k, u);
      if (!fresh) pairs[w].push_back({it->second, u});
    }
  }
  for (ObjectId z = 0; z < c.object_count(); ++z) {
    std::vector<std::size_t> through(c.hom_size(x, z), 0);
    for (const auto& h : c.hom(y, z)) ++through[c.compose(h, f).index];
    for (const auto& g : c.hom(x, z)) {
      bool compatible = true;
      for (ObjectId w = 0; w < c.object_count() && compatible; ++w)
        for (const auto& [u, v] : pairs[w])
          if (c.compose(g, u) != c.compose(g, v)) {
            compatible = false;
            break;
          }
      if (compatible && through[g.index] != 1) return false;
    }
  }
  return true;
}

// ---- builders ----

inline ActionObject action_object(const GAction& a, std::string name) {
  return ActionObject{std::move(name), a.points(), a.generator_maps()};
}

struct GSetCatalog {
  std::vector<GAction> transitive;      // classify_transitive order
  std::vector<std::string> type_names;  // o<size> with a letter when sizes repeat
  std::vector<GAction> objects;
  std::vector<std::vector<std::size_t>> multiplicities;  // per object, per transitive type
};

// All G-sets with at most max_points points (as multisets of transitive
// types), plus every transitive G-set; the empty G-set comes first.
inline GSetCatalog gset_catalog(const std::shared_ptr<const FiniteMonoid>& g, std::size_t max_points,
                                std::size_t max_objects = 2000) {
  GSetCatalog cat;
  cat.transitive = classify_transitive(g);
  const auto t = cat.transitive.size();
  std::map<std::size_t, std::size_t> per_size, seen_size;
  for (const auto& e : cat.transitive) ++per_size[e.points()];
  for (const auto& e : cat.transitive) {
    std::string n = "o" + std::to_string(e.points());
    if (per_size[e.points()] > 1) n += static_cast<char>('a' + seen_size[e.points()]++);
    cat.type_names.push_back(n);
  }
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur(t, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == t) {
      all.push_back(cur);
      return;
    }
    for (std::size_t k = 0; used + k * cat.transitive[i].points() <= max_points; ++k) {
      cur[i] = k;
      self(self, i + 1, used + k * cat.transitive[i].points());
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  for (std::size_t i = 0; i < t; ++i)
    if (cat.transitive[i].points() > max_points) {
      std::vector<std::size_t> m(t, 0);
      m[i] = 1;
      all.push_back(m);
    }
  auto points = [&](const std::vector<std::size_t>& m) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < t; ++i) s += m[i] * cat.transitive[i].points();
    return s;
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    auto pa = points(a), pb = points(b);
    if (pa != pb) return pa < pb;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  if (all.size() > max_objects)
    throw Error(ErrorKind::SizeCapExceeded, "G-set category would have " + std::to_string(all.size()) +
                                                " objects", {all.size(), max_objects});
  for (const auto& m : all) {
    std::optional<GAction> acc;
    std::string name;
    for (std::size_t i = 0; i < t; ++i) {
      if (m[i] == 0) continue;
      if (!name.empty()) name += "+";
      if (m[i] > 1) name += std::to_string(m[i]) + "*";
      name += cat.type_names[i];
      for (std::size_t k = 0; k < m[i]; ++k)
        acc = acc ? disjoint_union(*acc, cat.transitive[i]) : cat.transitive[i];
    }
    if (!acc) {
      acc = GAction(g, 0, {}, "0");
      name = "0";
    }
    acc->rename(name);
    cat.objects.push_back(*acc);
    cat.multiplicities.push_back(m);
  }
  return cat;
}

inline FiniteConcreteCategory category_of_actions(std::string name, const std::vector<GAction>& objects,
                                                  std::optional<std::size_t> fiber_cap = std::nullopt) {
  std::vector<ActionObject> objs;
  for (const auto& a : objects) objs.push_back(action_object(a, a.name()));
  return make_action_category(std::move(name), std::move(objs), fiber_cap);
}

inline FiniteConcreteCategory build_gset_category(const std::shared_ptr<const FiniteMonoid>& g,
                                                  std::size_t max_points) {
  auto cat = gset_catalog(g, max_points);
  return category_of_actions(g->name() + "-sets<=" + std::to_string(max_points), cat.objects, max_points);
}

// Transitive G-sets only (one per conjugacy class of subgroups).
inline FiniteConcreteCategory transitive_gset_category(const std::shared_ptr<const FiniteMonoid>& g) {
  auto cat = gset_catalog(g, 0);
  std::vector<GAction> objs(cat.objects.begin() + 1, cat.objects.end());
  return category_of_actions("t" + g->name() + "-sets", objs);
}

// All M-sets with at most max_points points, up to isomorphism.
inline std::vector<GAction> mset_objects(const std::shared_ptr<const FiniteMonoid>& m, std::size_t max_points) {
  std::vector<GAction> out;
  for (std::size_t n = 0; n <= max_points; ++n)
    for (auto& a : enumerate_actions(m, n)) {
      if (n == 0) a.rename("0");
      out.push_back(std::move(a));
    }
  return out;
}

inline FiniteConcreteCategory build_mset_category(const std::shared_ptr<const FiniteMonoid>& m,
                                                  std::size_t max_points) {
  if (m->is_group() && dynamic_cast<const FiniteGroup*>(m.get())) return build_gset_category(m, max_points);
  return category_of_actions(m->name() + "-sets<=" + std::to_string(max_points), mset_objects(m, max_points),
                             max_points);
}

}  // namespace galois
