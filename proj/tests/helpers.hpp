#pragma once
// helpers.hpp — independent oracles and seeded generators for the test suite.
// Everything here recomputes results by a different route than the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/extension.hpp"
#include "kgraph/fixtures.hpp"
#include "kgraph/path.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph::testing {

// All composable raw edge words of a given degree with range v, in any color
// order (not just normal forms). Oracle for the sorted-word enumerations.
inline std::vector<std::vector<int32_t>> raw_words(const Skeleton& s, int32_t v,
                                                   const Degree& n) {
  std::vector<std::vector<int32_t>> out;
  std::vector<int32_t> word;
  Degree used(s.rank());
  std::function<void(int32_t)> go = [&](int32_t cur) {
    if (used == n) {
      out.push_back(word);
      return;
    }
    for (int32_t e : s.edges_with_range(cur)) {
      std::size_t c = static_cast<std::size_t>(s.edge(e).color - 1);
      if (used[c] >= n[c]) continue;
      ++used[c];
      word.push_back(e);
      go(s.edge(e).source);
      word.pop_back();
      --used[c];
    }
  };
  go(v);
  return out;
}

// Normalize by applying randomly chosen out-of-order adjacent swaps. Any
// order must reach the same sorted word as the deterministic pass.
inline Path random_order_normal_form(const Skeleton& s, std::vector<int32_t> w,
                                     std::mt19937& rng) {
  if (w.empty()) throw std::invalid_argument("random_order_normal_form: empty word");
  int32_t range = s.edge(w.front()).range;
  while (true) {
    std::vector<std::size_t> hot;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (s.edge(w[i]).color > s.edge(w[i + 1]).color) hot.push_back(i);
    if (hot.empty()) break;
    std::size_t i = hot[std::uniform_int_distribution<std::size_t>(0, hot.size() - 1)(rng)];
    auto r = s.swap_pair(w[i], w[i + 1]);
    if (!r) throw std::logic_error("random_order_normal_form: missing square");
    w[i] = r->first;
    w[i + 1] = r->second;
  }
  return Path{range, std::move(w)};
}

// Definition-level exhaustiveness: scan every µ ∈ vΛ with d(µ) ≤ bound and
// look for a member of E meeting it. Exact when bound dominates all path
// degrees (acyclic); a refutation is exact at any bound.
struct BruteForceResult {
  bool exhaustive;
  std::optional<Path> refutation;
};

inline BruteForceResult brute_force_exhaustive(const Skeleton& s, int32_t v,
                                               const std::vector<Path>& E,
                                               const Degree& bound) {
  for (const Degree& m : degrees_leq(bound)) {
    for (const Path& mu : paths_with_range(s, v, m)) {
      bool met = false;
      for (const Path& lam : E)
        if (!lambda_min(s, lam, mu).empty()) {
          met = true;
          break;
        }
      if (!met) return {false, mu};
    }
  }
  return {true, std::nullopt};
}

// Iterative tower for the composite closure: E_0 = E and E_i = all staircase
// composites λ_1 (λ_2 truncated past d(λ_1)) (λ_3 truncated past d(λ_2)) …
// over members of ∨E_{i-1} with pointwise nondecreasing degrees, stabilizing
// after Σ N steps. Oracle for the least-fixpoint closure.
inline std::vector<Path> tower_pi(const Skeleton& s, std::vector<Path> E) {
  std::sort(E.begin(), E.end());
  E.erase(std::unique(E.begin(), E.end()), E.end());
  Degree N(s.rank());
  for (const Path& p : E) N = join(N, degree_of(s, p));
  auto step = [&s](const std::vector<Path>& prev) {
    std::vector<Path> ve = vee(s, prev);
    std::set<Path> out;
    std::set<std::pair<Path, Degree>> seen;
    std::function<void(const Path&, const Degree&)> grow = [&](const Path& c,
                                                               const Degree& last) {
      if (!seen.insert({c, last}).second) return;
      out.insert(c);
      for (const Path& mu : ve) {
        Degree dm = degree_of(s, mu);
        if (!leq(last, dm)) continue;
        Path tail = segment(s, mu, last, dm);
        if (tail.range != source_of(s, c)) continue;
        grow(compose(s, c, tail), dm);
      }
    };
    for (const Path& lam : ve) grow(lam, degree_of(s, lam));
    return std::vector<Path>(out.begin(), out.end());
  };
  std::vector<Path> cur = E;
  for (int64_t i = 0; i < N.total(); ++i) cur = step(cur);
  if (step(cur) != cur) throw std::logic_error("tower_pi: failed to stabilize");
  return cur;
}

// Does the composite-closure rule hold of `set` as given?
inline bool closure_rule_holds(const Skeleton& s, const std::vector<Path>& set) {
  auto contains = [&set](const Path& p) {
    return std::binary_search(set.begin(), set.end(), p);
  };
  for (const Path& lam : set)
    for (const Path& mu : set) {
      if (!(degree_of(s, lam) == degree_of(s, mu)) || source_of(s, lam) != source_of(s, mu))
        continue;
      for (const Path& sig : set)
        for (auto& [alpha, beta] : lambda_min(s, mu, sig)) {
          (void)beta;
          if (!contains(compose(s, lam, alpha))) return false;
        }
    }
  return true;
}

// -------- seeded skeleton generators --------

// Random 1-graph on up to max_v vertices. Acyclic mode only emits edges from
// a higher-indexed source to a lower-indexed range.
inline SkeletonInput random_1graph(std::mt19937& rng, int max_v, bool acyclic) {
  SkeletonInput in;
  in.rank = 1;
  int n = std::uniform_int_distribution<int>(2, max_v)(rng);
  for (int i = 0; i < n; ++i) in.vertices.push_back("v" + std::to_string(i));
  int edges = std::uniform_int_distribution<int>(1, 2 * n)(rng);
  for (int t = 0; t < edges; ++t) {
    int r, src;
    if (acyclic) {
      r = std::uniform_int_distribution<int>(0, n - 2)(rng);
      src = std::uniform_int_distribution<int>(r + 1, n - 1)(rng);
    } else {
      r = std::uniform_int_distribution<int>(0, n - 1)(rng);
      src = std::uniform_int_distribution<int>(0, n - 1)(rng);
    }
    in.edges.push_back({"t" + std::to_string(t), 1, "v" + std::to_string(r),
                        "v" + std::to_string(src)});
  }
  if (!acyclic) {
    // Guarantee at least one cycle.
    int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
    in.edges.push_back({"tc", 1, "v" + std::to_string(r), "v" + std::to_string(r)});
  }
  return in;
}

// Disjoint union with id prefixes; valid whenever the parts are.
inline SkeletonInput disjoint_union(const std::vector<SkeletonInput>& parts) {
  SkeletonInput out;
  for (const SkeletonInput& p : parts) out.rank = std::max(out.rank, p.rank);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string pre = "p" + std::to_string(i) + "_";
    const SkeletonInput& p = parts[i];
    for (const std::string& v : p.vertices) out.vertices.push_back(pre + v);
    for (const EdgeInput& e : p.edges)
      out.edges.push_back({pre + e.id, e.color, pre + e.range, pre + e.source});
    for (const SquareInput& q : p.squares)
      out.squares.push_back({{pre + q.path_a[0], pre + q.path_a[1]},
                             {pre + q.path_b[0], pre + q.path_b[1]}});
  }
  return out;
}

// Random valid 2-graph: a product of two random 1-graphs, optionally glued
// (disjointly) with a rank-2 gadget so non-product shapes appear too.
inline SkeletonInput random_2graph(std::mt19937& rng, bool acyclic) {
  SkeletonInput a = random_1graph(rng, 4, acyclic);
  SkeletonInput b = random_1graph(rng, 3, true);
  SkeletonInput prod = product_skeleton(build_skeleton(a), build_skeleton(b));
  int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<SkeletonInput> parts{prod};
  if (extra == 1) parts.push_back(fixture_g_lambda1());
  if (extra == 2) parts.push_back(fixture_g_square());
  if (extra == 3 && !acyclic) parts.push_back(fixture_g_loop2());
  SkeletonInput out = disjoint_union(parts);
  out.rank = 2;
  return out;
}

inline std::vector<Path> paths_by_ids(const Skeleton& s,
                                      const std::vector<std::string>& literals) {
  std::vector<Path> out;
  for (const std::string& t : literals) out.push_back(parse_path(s, t));
  return out;
}

// All subsets of `universe` of size 1..max_size.
inline std::vector<std::vector<Path>> small_subsets(const std::vector<Path>& universe,
                                                    std::size_t max_size) {
  std::vector<std::vector<Path>> out;
  std::vector<Path> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (std::size_t j = i; j < universe.size(); ++j) {
      cur.push_back(universe[j]);
      go(j + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

}  // namespace kgraph::testing
