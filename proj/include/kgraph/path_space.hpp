#pragma once
// path_space.hpp — degree-indexed path enumeration and Λ^{≤n}.
//
// Enumerations walk color-sorted words directly, so each morphism is produced
// exactly once, in deterministic (edge-id lexicographic) order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/path.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

// vΛ^n: paths with range v and degree n.
inline std::vector<Path> paths_with_range(const Skeleton& s, int32_t v, const Degree& n) {
  if (n.rank() != s.rank()) throw std::invalid_argument("paths_with_range: degree rank mismatch");
  std::vector<Path> out;
  std::vector<int32_t> word;
  std::function<void(int32_t, std::size_t, int32_t)> go =
      [&](int32_t cur, std::size_t color, int32_t remaining) {
        if (remaining == 0) {
          std::size_t c = color + 1;
          while (c <= s.rank() && n[c - 1] == 0) ++c;
          if (c > s.rank()) {
            out.push_back(Path{v, word});
            return;
          }
          go(cur, c, n[c - 1]);
          return;
        }
        for (int32_t e : s.edges_with_range(cur, static_cast<int32_t>(color))) {
          word.push_back(e);
          go(s.edge(e).source, color, remaining - 1);
          word.pop_back();
        }
      };
  go(v, 0, 0);
  return out;
}

// Λ^n v: paths with source v and degree n.
inline std::vector<Path> paths_with_source(const Skeleton& s, int32_t v, const Degree& n) {
  if (n.rank() != s.rank()) throw std::invalid_argument("paths_with_source: degree rank mismatch");
  std::vector<Path> out;
  std::vector<int32_t> word;  // built source end first, reversed on emit
  std::function<void(int32_t, std::size_t, int32_t)> go =
      [&](int32_t cur, std::size_t color, int32_t remaining) {
        if (remaining == 0) {
          if (color == 1) {
            std::vector<int32_t> w(word.rbegin(), word.rend());
            int32_t range = w.empty() ? v : s.edge(w.front()).range;
            out.push_back(Path{range, std::move(w)});
            return;
          }
          go(cur, color - 1, n[color - 2]);
          return;
        }
        for (int32_t e : s.edges_with_source(cur, static_cast<int32_t>(color))) {
          word.push_back(e);
          go(s.edge(e).range, color, remaining - 1);
          word.pop_back();
        }
      };
  go(v, s.rank(), n[s.rank() - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

// vΛ^{≤n}: d(λ) <= n and, whenever d(λ)_i < n_i, the source emits no
// color-(i+1) edge.
inline std::vector<Path> paths_leq(const Skeleton& s, int32_t v, const Degree& n) {
  std::vector<Path> out;
  for (const Degree& m : degrees_leq(n)) {
    for (Path& p : paths_with_range(s, v, m)) {
      int32_t src = source_of(s, p);
      bool keep = true;
      for (std::size_t i = 0; i < s.rank() && keep; ++i)
        if (m[i] < n[i] && !s.edges_with_range(src, static_cast<int32_t>(i + 1)).empty())
          keep = false;
      if (keep) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when no directed cycle exists in the 1-skeleton (colors pooled).
inline bool is_acyclic(const Skeleton& s) {
  enum { White, Grey, Black };
  std::vector<int> mark(s.vertex_count(), White);
  std::function<bool(int32_t)> dfs = [&](int32_t v) -> bool {
    mark[v] = Grey;
    for (int32_t e : s.edges_with_range(v)) {
      int32_t w = s.edge(e).source;
      if (mark[w] == Grey) return false;
      if (mark[w] == White && !dfs(w)) return false;
    }
    mark[v] = Black;
    return true;
  };
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (mark[v] == White && !dfs(static_cast<int32_t>(v))) return false;
  return true;
}

// All morphisms of an acyclic skeleton, sorted. Throws on cyclic input.
inline std::vector<Path> all_paths(const Skeleton& s) {
  if (!is_acyclic(s)) throw std::invalid_argument("all_paths: skeleton has a cycle");
  std::vector<Path> out;
  std::vector<int32_t> word;
  std::function<void(int32_t, int32_t)> go = [&](int32_t cur, int32_t min_color) {
    for (int32_t e : s.edges_with_range(cur)) {
      if (s.edge(e).color < min_color) continue;
      word.push_back(e);
      out.push_back(Path{word.empty() ? cur : s.edge(word.front()).range, word});
      go(s.edge(e).source, s.edge(e).color);
      word.pop_back();
    }
  };
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    out.push_back(vertex_path(static_cast<int32_t>(v)));
    go(static_cast<int32_t>(v), 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Largest degree any path of an acyclic skeleton can have (per color, the
// longest monochrome chain).
inline Degree max_path_degree(const Skeleton& s) {
  if (!is_acyclic(s)) throw std::invalid_argument("max_path_degree: skeleton has a cycle");
  Degree bound(s.rank());
  for (const Path& p : all_paths(s)) bound = join(bound, degree_of(s, p));
  return bound;
}

}  // namespace kgraph
