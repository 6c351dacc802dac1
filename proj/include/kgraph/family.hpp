#pragma once
// family.hpp — concrete operator families over an ordered basis: the
// boundary-path representation, restriction to generators, and the memoized
// extension of a generator family to all paths.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgraph/boundary.hpp"
#include "kgraph/path.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"
#include "kgraph/sparse.hpp"

namespace kgraph {

// Assignment λ ↦ S_λ of square integer matrices over a fixed basis. When
// degree_bound is set, ops covers exactly the paths of degree ≤ bound;
// otherwise it covers every path of an acyclic skeleton.
struct OperatorFamily {
  std::vector<std::string> basis;
  std::map<Path, IntMatrix> ops;
  std::optional<Degree> degree_bound;

  std::size_t dim() const { return basis.size(); }
  bool has(const Path& p) const { return ops.count(p) > 0; }
  const IntMatrix& op(const Path& p) const {
    auto it = ops.find(p);
    if (it == ops.end()) throw std::invalid_argument("OperatorFamily: no operator for path");
    return it->second;
  }

  friend bool operator==(const OperatorFamily& a, const OperatorFamily& b) = default;
};

// S_λ e_x = e_{λx} when s(λ) = r(x), else 0. Exact 0/1 matrices over the
// boundary-path basis; acyclic skeletons only.
inline OperatorFamily boundary_representation(const Skeleton& s) {
  auto bps = boundary_paths(s);
  std::map<Path, std::size_t> index;
  OperatorFamily fam;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    index.emplace(bps[i].path, i);
    fam.basis.push_back(display(s, bps[i].path));
  }
  for (const Path& lam : all_paths(s)) {
    IntMatrix m(bps.size(), bps.size());
    for (const auto& [x, col] : index) {
      if (x.range != source_of(s, lam)) continue;
      Path lx = compose(s, lam, x);
      m.set(index.at(lx), col, 1);  // λx is boundary: same source, sink criterion
    }
    fam.ops.emplace(lam, std::move(m));
  }
  return fam;
}

// Keep only the vertex and single-edge operators.
inline OperatorFamily restrict_to_generators(const Skeleton& s, const OperatorFamily& fam) {
  OperatorFamily out;
  out.basis = fam.basis;
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    Path p = vertex_path(static_cast<int32_t>(v));
    out.ops.emplace(p, fam.op(p));
  }
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    Path p{s.edge(static_cast<int32_t>(e)).range, {static_cast<int32_t>(e)}};
    out.ops.emplace(p, fam.op(p));
  }
  return out;
}

// Extend a generator family multiplicatively: S_λ = S_{e_1} ⋯ S_{e_m} along
// the normal form. Every color-leading factorisation λ = (first color-c
// edge)·(rest) must give the same matrix, otherwise the generators break the
// square relations and the extension is rejected. Covers all paths when the
// skeleton is acyclic and no bound is given; cyclic skeletons require bound.
inline OperatorFamily extend_generators(const Skeleton& s, const OperatorFamily& gen,
                                        std::optional<Degree> bound = std::nullopt) {
  const std::size_t dim = gen.dim();
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    Path p = vertex_path(static_cast<int32_t>(v));
    if (!gen.has(p)) throw std::invalid_argument("extend_generators: missing vertex operator");
    if (gen.op(p).rows() != dim || gen.op(p).cols() != dim)
      throw std::invalid_argument("extend_generators: operator shape mismatch");
  }
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    Path p{s.edge(static_cast<int32_t>(e)).range, {static_cast<int32_t>(e)}};
    if (!gen.has(p)) throw std::invalid_argument("extend_generators: missing edge operator");
    if (gen.op(p).rows() != dim || gen.op(p).cols() != dim)
      throw std::invalid_argument("extend_generators: operator shape mismatch");
  }

  std::vector<Path> targets;
  if (bound) {
    if (bound->rank() != s.rank())
      throw std::invalid_argument("extend_generators: bound rank mismatch");
    for (std::size_t v = 0; v < s.vertex_count(); ++v)
      for (const Degree& n : degrees_leq(*bound))
        for (Path& p : paths_with_range(s, static_cast<int32_t>(v), n))
          targets.push_back(std::move(p));
  } else {
    if (!is_acyclic(s))
      throw std::invalid_argument("extend_generators: cyclic skeletons need a degree bound");
    targets = all_paths(s);
  }

  OperatorFamily out;
  out.basis = gen.basis;
  out.degree_bound = bound;

  std::map<Path, IntMatrix> memo;
  std::function<const IntMatrix&(const Path&)> get = [&](const Path& p) -> const IntMatrix& {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    if (p.is_vertex() || p.edges.size() == 1) return memo.emplace(p, gen.op(p)).first->second;
    Path head{p.range, {p.edges.front()}};
    Path tail{s.edge(p.edges.front()).source,
              std::vector<int32_t>(p.edges.begin() + 1, p.edges.end())};
    IntMatrix m = get(head) * get(tail);
    return memo.emplace(p, std::move(m)).first->second;
  };

  for (const Path& p : targets) {
    const IntMatrix& m = get(p);
    // consistency across every color-leading factorisation
    Degree d = degree_of(s, p);
    if (d.total() >= 2)
      for (std::size_t c = 0; c < s.rank(); ++c) {
        if (d[c] == 0) continue;
        Degree ec = Degree::unit(s.rank(), c);
        Path head = segment(s, p, Degree(s.rank()), ec);
        Path tail = segment(s, p, ec, d);
        if (!(get(head) * get(tail) == m))
          throw std::invalid_argument(
              "extend_generators: generators are inconsistent across the squares at " +
              display(s, p));
      }
    out.ops.emplace(p, m);
  }
  return out;
}

}  // namespace kgraph
