#pragma once
// boundary.hpp — boundary paths, constructive prefixes, aperiodicity reports.
//
// A boundary path of an acyclic skeleton is a path whose source emits no
// edge, together with the least marker n_min ≤ d(x) such that every position
// n ≥ n_min that is extremal in coordinate i (n_i = d(x)_i) sits at a vertex
// with no color-(i+1) edge. Acyclic graphs have finitely many, so the
// enumeration is exact; cyclic graphs are refused.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/path.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

struct BoundaryPath {
  Path path;
  Degree n_min;
  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
};

namespace detail {

// Does `n` satisfy the extremal-coordinate condition for x?
inline bool boundary_marker_ok(const Skeleton& s, const Path& x, const Degree& d,
                               const Degree& n) {
  // Walk every n' with n <= n' <= d; prune using the box product.
  std::vector<Degree> grid;
  Degree cur = n;
  std::function<bool(std::size_t)> walk = [&](std::size_t i) -> bool {
    if (i == s.rank()) {
      int32_t at = vertex_at(s, x, cur);
      for (std::size_t c = 0; c < s.rank(); ++c)
        if (cur[c] == d[c] &&
            !s.edges_with_range(at, static_cast<int32_t>(c + 1)).empty())
          return false;
      return true;
    }
    for (int32_t t = n[i]; t <= d[i]; ++t) {
      cur[i] = t;
      if (!walk(i + 1)) return false;
    }
    return true;
  };
  return walk(0);
}

}  // namespace detail

// Least valid marker for a maximal path, minimized coordinatewise from d(x).
inline Degree boundary_marker(const Skeleton& s, const Path& x) {
  Degree d = degree_of(s, x);
  Degree n = d;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    while (n[i] > 0) {
      Degree cand = n;
      --cand[i];
      if (!detail::boundary_marker_ok(s, x, d, cand)) break;
      n = cand;
    }
  }
  return n;
}

// All boundary paths of an acyclic skeleton, sorted by path.
inline std::vector<BoundaryPath> boundary_paths(const Skeleton& s) {
  if (!is_acyclic(s))
    throw std::invalid_argument("boundary_paths: cyclic skeletons are not supported");
  std::vector<BoundaryPath> out;
  for (const Path& p : all_paths(s)) {
    int32_t src = source_of(s, p);
    if (!s.edges_with_range(src).empty()) continue;
    out.push_back({p, boundary_marker(s, p)});
  }
  return out;
}

// Boundary paths with range v.
inline std::vector<BoundaryPath> boundary_paths_at(const Skeleton& s, int32_t v) {
  std::vector<BoundaryPath> out;
  for (BoundaryPath& b : boundary_paths(s))
    if (b.path.range == v) out.push_back(std::move(b));
  return out;
}

// One step of the constructive prefix: at step i (1-based) try to append an
// edge of color ((i-1) mod k)+1 at the current source; skip if none exists.
struct PrefixTrace {
  Path current;
  std::vector<std::optional<int32_t>> appended;  // edge per step, or skip
};

inline PrefixTrace boundary_prefix(const Skeleton& s, int32_t v, std::size_t steps) {
  if (v < 0 || v >= static_cast<int32_t>(s.vertex_count()))
    throw std::invalid_argument("boundary_prefix: vertex out of range");
  PrefixTrace tr;
  tr.current = vertex_path(v);
  for (std::size_t i = 1; i <= steps; ++i) {
    int32_t color = static_cast<int32_t>((i - 1) % s.rank()) + 1;
    int32_t at = source_of(s, tr.current);
    auto candidates = s.edges_with_range(at, color);
    if (candidates.empty()) {
      tr.appended.push_back(std::nullopt);
      continue;
    }
    int32_t e = candidates.front();
    tr.current = compose(s, tr.current, Path{at, {e}});
    tr.appended.push_back(e);
  }
  return tr;
}

// Aperiodicity: does every vertex admit a boundary path x with λx ≠ µx for
// all distinct λ, µ ending at that vertex? Exact for acyclic skeletons
// (verdict EXACT_HOLDS or EXACT_FAILS); cyclic skeletons get INCONCLUSIVE
// plus the pairs a sampled prefix fails to distinguish up to `depth`.
struct AperiodicityReport {
  enum class Verdict { ExactHolds, ExactFails, Inconclusive };
  struct Pair {
    int32_t vertex;
    Path a, b;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Pair> failure;         // EXACT_FAILS only
  std::vector<Pair> undistinguished;   // INCONCLUSIVE only, capped
  bool truncated = false;
  friend bool operator==(const AperiodicityReport&, const AperiodicityReport&) = default;
};

inline std::string to_string(AperiodicityReport::Verdict v) {
  switch (v) {
    case AperiodicityReport::Verdict::ExactHolds: return "EXACT_HOLDS";
    case AperiodicityReport::Verdict::ExactFails: return "EXACT_FAILS";
    case AperiodicityReport::Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "unknown";
}

inline AperiodicityReport aperiodicity_report(const Skeleton& s, const Degree& depth,
                                              std::size_t max_pairs = 64) {
  if (depth.rank() != s.rank())
    throw std::invalid_argument("aperiodicity_report: depth rank mismatch");
  AperiodicityReport rep;

  if (is_acyclic(s)) {
    std::vector<Path> all = all_paths(s);
    auto bps = boundary_paths(s);
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      std::vector<Path> into;  // Λv
      for (const Path& p : all)
        if (source_of(s, p) == static_cast<int32_t>(v)) into.push_back(p);
      bool vertex_ok = false;
      std::optional<AperiodicityReport::Pair> first_collision;
      for (const BoundaryPath& x : bps) {
        if (x.path.range != static_cast<int32_t>(v)) continue;
        bool separates = true;
        for (std::size_t i = 0; i < into.size() && separates; ++i)
          for (std::size_t j = i + 1; j < into.size() && separates; ++j)
            if (compose(s, into[i], x.path) == compose(s, into[j], x.path)) {
              separates = false;
              if (!first_collision)
                first_collision = {{static_cast<int32_t>(v), into[i], into[j]}};
            }
        if (separates) {
          vertex_ok = true;
          break;
        }
      }
      if (!vertex_ok) {
        rep.verdict = AperiodicityReport::Verdict::ExactFails;
        if (first_collision) {
          rep.failure = first_collision;
        } else {
          AperiodicityReport::Pair none;
          none.vertex = static_cast<int32_t>(v);
          none.a = none.b = vertex_path(static_cast<int32_t>(v));
          rep.failure = none;
        }
        return rep;
      }
    }
    rep.verdict = AperiodicityReport::Verdict::ExactHolds;
    return rep;
  }

  rep.verdict = AperiodicityReport::Verdict::Inconclusive;
  int32_t rounds = 0;
  for (std::size_t i = 0; i < depth.rank(); ++i) rounds = std::max(rounds, depth[i]);
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    PrefixTrace tr =
        boundary_prefix(s, static_cast<int32_t>(v), s.rank() * static_cast<std::size_t>(rounds));
    const Path& x = tr.current;
    std::vector<Path> into;
    for (const Degree& m : degrees_leq(depth))
      for (Path& p : paths_with_source(s, static_cast<int32_t>(v), m)) into.push_back(std::move(p));
    std::sort(into.begin(), into.end());
    for (std::size_t i = 0; i < into.size(); ++i)
      for (std::size_t j = i + 1; j < into.size(); ++j) {
        Path a = compose(s, into[i], x);
        Path b = compose(s, into[j], x);
        Degree common = meet(degree_of(s, a), degree_of(s, b));
        if (prefix(s, a, common) == prefix(s, b, common)) {
          if (rep.undistinguished.size() >= max_pairs) {
            rep.truncated = true;
            return rep;
          }
          rep.undistinguished.push_back({static_cast<int32_t>(v), into[i], into[j]});
        }
      }
  }
  return rep;
}

}  // namespace kgraph
