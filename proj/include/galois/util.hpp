#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace galois {

using Element = std::size_t;
using Point = std::size_t;

inline constexpr std::size_t kDefaultGroupCap = 64;

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// g after f, as plain functions on indices
inline std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& g,
                                             const std::vector<std::size_t>& f) {
  std::vector<std::size_t> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

inline std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), std::size_t{0});
  return r;
}

inline bool is_injective(const std::vector<std::size_t>& f, std::size_t codomain) {
  std::vector<char> seen(codomain, 0);
  for (auto y : f) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

inline bool is_surjective(const std::vector<std::size_t>& f, std::size_t codomain) {
  std::vector<char> seen(codomain, 0);
  std::size_t hit = 0;
  for (auto y : f)
    if (!seen[y]) {
      seen[y] = 1;
      ++hit;
    }
  return hit == codomain;
}

inline std::string join(const std::vector<std::size_t>& v, std::string_view sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(identity_map(n)) {}
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  // class labels 0..k-1 numbered by first appearance
  std::vector<std::size_t> labels(std::size_t* count = nullptr) {
    std::vector<std::size_t> lab(parent.size(), SIZE_MAX), rootlab(parent.size(), SIZE_MAX);
    std::size_t k = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      auto r = find(i);
      if (rootlab[r] == SIZE_MAX) rootlab[r] = k++;
      lab[i] = rootlab[r];
    }
    if (count) *count = k;
    return lab;
  }
};

}  // namespace detail

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace galois
