#pragma once
// extension.hpp — common-extension combinatorics and exhaustive-set decisions.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/path.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

// Λ^min(λ, µ): pairs (α, β) with λα = µβ of degree d(λ) ∨ d(µ). Empty when
// the ranges differ. Ordered by α.
inline std::vector<std::pair<Path, Path>> lambda_min(const Skeleton& s, const Path& lam,
                                                     const Path& mu) {
  std::vector<std::pair<Path, Path>> out;
  if (lam.range != mu.range) return out;
  Degree dl = degree_of(s, lam), dm = degree_of(s, mu);
  Degree N = join(dl, dm);
  for (const Path& alpha : paths_with_range(s, source_of(s, lam), N - dl)) {
    Path tau = compose(s, lam, alpha);
    if (prefix(s, tau, dm) == mu) out.emplace_back(alpha, segment(s, tau, dm, N));
  }
  return out;
}

// MCE(F): common extensions of minimal degree ⋁ d(α). Empty unless all of F
// shares one range. MCE(∅) is empty by convention.
inline std::vector<Path> mce(const Skeleton& s, const std::vector<Path>& F) {
  std::vector<Path> out;
  if (F.empty()) return out;
  for (const Path& p : F)
    if (p.range != F.front().range) return out;
  Degree N(s.rank());
  for (const Path& p : F) N = join(N, degree_of(s, p));
  for (const Path& tau : paths_with_range(s, F.front().range, N)) {
    bool all = true;
    for (const Path& p : F)
      if (prefix(s, tau, degree_of(s, p)) != p) {
        all = false;
        break;
      }
    if (all) out.push_back(tau);
  }
  return out;
}

// ∨F: union of MCE(G) over nonempty G ⊆ F. Contains F, finite, closed under
// minimal common extensions. Computed as the closure of F under pairwise
// MCE: any τ ∈ MCE(G ∪ {h}) extends some σ ∈ MCE(G) with d(τ) = d(σ) ∨ d(h),
// so subsets never contribute more than iterated pairs do.
inline std::vector<Path> vee(const Skeleton& s, const std::vector<Path>& F) {
  std::set<Path> acc(F.begin(), F.end());
  std::vector<Path> fresh(acc.begin(), acc.end());
  while (!fresh.empty()) {
    std::vector<Path> next;
    std::vector<Path> known(acc.begin(), acc.end());
    for (const Path& a : fresh)
      for (const Path& b : known)
        for (Path& tau : mce(s, {a, b}))
          if (acc.insert(tau).second) next.push_back(std::move(tau));
    fresh = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

// Ext(µ; E) = ⋃_{λ∈E} { α : (α, β) ∈ Λ^min(µ, λ) }: the ways µ must be
// extended to pass through E. Sorted, deduplicated.
inline std::vector<Path> ext_set(const Skeleton& s, const Path& mu, const std::vector<Path>& E) {
  std::set<Path> acc;
  for (const Path& lam : E)
    for (auto& [alpha, beta] : lambda_min(s, mu, lam)) {
      (void)beta;
      acc.insert(alpha);
    }
  return {acc.begin(), acc.end()};
}

// I(E) = ⋃_i { λ(0, e_i) : λ ∈ E, d(λ)_i > 0 }: the initial edges of E.
inline std::vector<Path> i_set(const Skeleton& s, const std::vector<Path>& E) {
  std::set<Path> acc;
  for (const Path& lam : E) {
    Degree d = degree_of(s, lam);
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (d[i] > 0) acc.insert(prefix(s, lam, Degree::unit(s.rank(), i)));
  }
  return {acc.begin(), acc.end()};
}

// L(E) = Σ_i max_{λ∈E} d(λ)_i; the induction weight that Ext strictly
// decreases on initial edges. L(∅) = 0.
inline int64_t l_weight(const Skeleton& s, const std::vector<Path>& E) {
  if (E.empty()) return 0;
  Degree m(s.rank());
  for (const Path& lam : E) m = join(m, degree_of(s, lam));
  return m.total();
}

// -------- exhaustive-set decision --------
//
// E ⊆ vΛ is exhaustive when every µ ∈ vΛ has Λ^min(λ, µ) ≠ ∅ for some λ ∈ E.
// Decision: a state (v, E) is false when E = ∅; true when E contains a
// degree-0 path; otherwise it is the conjunction over edges f ∈ vΛ of the
// state (s(f), Ext(f; E)). States are memoized; the false states are the
// least fixpoint of "some successor is false", so dependency cycles that
// never reach an empty branch are true. A false verdict carries a witness µ
// (the concatenated failing edges) with Λ^min(λ, µ) = ∅ for every λ ∈ E.

struct ExhaustiveState {
  int32_t vertex;
  std::vector<Path> set;  // canonical: sorted, deduplicated
  bool exhaustive;
  friend bool operator==(const ExhaustiveState&, const ExhaustiveState&) = default;
};

struct ExhaustiveCertificate {
  bool exhaustive = false;
  std::optional<Path> witness;          // present iff not exhaustive
  std::vector<ExhaustiveState> visited; // discovery order
  friend bool operator==(const ExhaustiveCertificate&, const ExhaustiveCertificate&) = default;
};

inline ExhaustiveCertificate is_exhaustive(const Skeleton& s, int32_t v,
                                           const std::vector<Path>& E) {
  for (const Path& p : E)
    if (p.range != v) throw std::invalid_argument("is_exhaustive: set member has wrong range");

  using StateKey = std::pair<int32_t, std::vector<Path>>;
  // Canonical state: sorted, deduplicated, prefix-minimal. A member that
  // extends another member is redundant: every µ it meets, its prefix meets
  // too (a common extension restricts along the factorisation). Dropping it
  // changes neither the verdict nor witness validity, and keeps the explored
  // state space small.
  auto canon = [&s](std::vector<Path> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<Path> keep;
    for (const Path& q : set) {
      bool redundant = false;
      Degree dq = degree_of(s, q);
      for (const Path& p : set) {
        if (p == q) continue;
        Degree dp = degree_of(s, p);
        if (leq(dp, dq) && !(dp == dq) && prefix(s, q, dp) == p) {
          redundant = true;
          break;
        }
      }
      if (!redundant) keep.push_back(q);
    }
    return keep;
  };

  struct Node {
    StateKey key;
    bool base_false = false;
    bool base_true = false;
    std::vector<std::pair<int32_t, std::size_t>> children;  // (edge, node)
  };
  std::map<StateKey, std::size_t> index;
  std::vector<Node> nodes;

  std::deque<std::size_t> queue;
  auto intern = [&](int32_t vert, std::vector<Path> set) {
    StateKey key{vert, canon(std::move(set))};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::size_t id = nodes.size();
    index.emplace(key, id);
    nodes.push_back({key, false, false, {}});
    queue.push_back(id);
    return id;
  };

  std::size_t root = intern(v, E);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    const auto key = nodes[id].key;  // copy; nodes may reallocate below
    if (key.second.empty()) {
      nodes[id].base_false = true;
      continue;
    }
    bool has_vertex = false;
    for (const Path& p : key.second)
      if (p.is_vertex()) {
        has_vertex = true;
        break;
      }
    if (has_vertex) {
      nodes[id].base_true = true;
      continue;
    }
    for (int32_t e : s.edges_with_range(key.first)) {
      Path f{key.first, {e}};
      std::size_t child = intern(s.edge(e).source, ext_set(s, f, key.second));
      nodes[id].children.emplace_back(e, child);
    }
  }

  // Least fixpoint of falsehood.
  std::vector<bool> is_false(nodes.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (is_false[i]) continue;
      bool f = nodes[i].base_false;
      for (auto& [e, c] : nodes[i].children) {
        (void)e;
        if (is_false[c]) f = true;
      }
      if (f) {
        is_false[i] = true;
        changed = true;
      }
    }
  }

  ExhaustiveCertificate cert;
  cert.exhaustive = !is_false[root];
  for (std::size_t i = 0; i < nodes.size(); ++i)
    cert.visited.push_back({nodes[i].key.first, nodes[i].key.second, !is_false[i]});

  if (!cert.exhaustive) {
    // Descend along strictly decreasing distance to an empty branch. A
    // greedy "any false child" walk could cycle on cyclic graphs, so rank
    // the false states first.
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(nodes.size(), kInf);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].base_false) dist[i] = 0;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (auto& [e, c] : nodes[i].children) {
          (void)e;
          if (dist[c] != kInf && dist[c] + 1 < dist[i]) {
            dist[i] = dist[c] + 1;
            moved = true;
          }
        }
    }
    if (dist[root] == kInf) throw std::logic_error("is_exhaustive: broken false chain");
    std::vector<int32_t> word;
    std::size_t cur = root;
    while (!nodes[cur].base_false) {
      bool advanced = false;
      for (auto& [e, c] : nodes[cur].children) {
        if (dist[c] + 1 == dist[cur]) {
          word.push_back(e);
          cur = c;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("is_exhaustive: broken false chain");
    }
    cert.witness = word.empty() ? vertex_path(v) : normal_form(s, word);
  }
  return cert;
}

// -------- shape predicates --------

// Locally convex: for every v, colors i ≠ j, λ ∈ vΛ^{e_i}, µ ∈ vΛ^{e_j},
// both s(λ)Λ^{e_j} and s(µ)Λ^{e_i} are nonempty.
inline bool is_locally_convex(const Skeleton& s) {
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    for (std::size_t i = 1; i <= s.rank(); ++i) {
      for (std::size_t j = i + 1; j <= s.rank(); ++j) {
        auto ei = s.edges_with_range(static_cast<int32_t>(v), static_cast<int32_t>(i));
        auto ej = s.edges_with_range(static_cast<int32_t>(v), static_cast<int32_t>(j));
        if (ei.empty() || ej.empty()) continue;
        for (int32_t a : ei)
          if (s.edges_with_range(s.edge(a).source, static_cast<int32_t>(j)).empty())
            return false;
        for (int32_t b : ej)
          if (s.edges_with_range(s.edge(b).source, static_cast<int32_t>(i)).empty())
            return false;
      }
    }
  }
  return true;
}

// |vΛ^{e_i}| for every vertex and color. Finite skeletons are always
// row-finite; the counts expose sources (zero rows).
struct RowFinitenessReport {
  // counts[v][i] = |vΛ^{e_{i+1}}|
  std::vector<std::vector<int64_t>> counts;
  bool row_finite = true;
};

inline RowFinitenessReport row_finiteness_report(const Skeleton& s) {
  RowFinitenessReport rep;
  rep.counts.assign(s.vertex_count(), std::vector<int64_t>(s.rank(), 0));
  for (const Edge& e : s.edges()) ++rep.counts[e.range][e.color - 1];
  return rep;
}

}  // namespace kgraph
