#pragma once
// verify.hpp — relation checkers over concrete operator families: the
// defining relations, their generator-level form, the classical sum
// relations and rejected variants, plus the structural identity suite for
// core approximations. All checks are exact integer matrix equalities.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraph/core.hpp"
#include "kgraph/extension.hpp"
#include "kgraph/family.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"
#include "kgraph/sparse.hpp"

namespace kgraph {

struct CheckCounterexample {
  std::vector<Path> paths;                      // offending tuple or set
  std::optional<IntMatrix::Difference> diff;    // first lhs/rhs disagreement
  std::string note;
  friend bool operator==(const CheckCounterexample&, const CheckCounterexample&) = default;
};

struct CheckRelation {
  std::string id;
  bool pass = true;
  std::size_t checked = 0;
  std::vector<CheckCounterexample> counterexamples;  // capped
  friend bool operator==(const CheckRelation&, const CheckRelation&) = default;
};

struct CheckReport {
  std::vector<CheckRelation> relations;
  std::map<std::string, bool> flags;

  bool pass() const {
    for (const CheckRelation& r : relations)
      if (!r.pass) return false;
    return true;
  }
  const CheckRelation& relation(const std::string& id) const {
    for (const CheckRelation& r : relations)
      if (r.id == id) return r;
    throw std::invalid_argument("CheckReport: no relation " + id);
  }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

namespace detail {

constexpr std::size_t kMaxCounterexamples = 8;

inline void record(CheckRelation& rel, const IntMatrix& lhs, const IntMatrix& rhs,
                   std::vector<Path> paths, std::string note = {}) {
  ++rel.checked;
  auto diff = IntMatrix::first_difference(lhs, rhs);
  if (!diff) return;
  rel.pass = false;
  if (rel.counterexamples.size() < kMaxCounterexamples)
    rel.counterexamples.push_back({std::move(paths), diff, std::move(note)});
}

// All subsets of the edge set at v (as paths) that are exhaustive.
inline std::vector<std::vector<Path>> exhaustive_edge_sets(const Skeleton& s, int32_t v) {
  std::vector<Path> edges;
  for (int32_t e : s.edges_with_range(v)) edges.push_back(Path{v, {e}});
  std::vector<std::vector<Path>> out;
  if (edges.size() > 20) throw std::invalid_argument("exhaustive_edge_sets: too many edges");
  for (std::size_t mask = 1; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Path> E;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask & (std::size_t{1} << i)) E.push_back(edges[i]);
    if (is_exhaustive(s, v, E).exhaustive) out.push_back(std::move(E));
  }
  return out;
}

inline void set_flags(const Skeleton& s, const OperatorFamily& fam, CheckReport& rep) {
  bool well = true;
  for (const auto& [p, m] : fam.ops) {
    (void)p;
    if (m.rows() != fam.dim() || m.cols() != fam.dim() || !m.is_partial_permutation())
      well = false;
  }
  bool nonzero = true;
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (fam.op(vertex_path(static_cast<int32_t>(v))).is_zero()) nonzero = false;
  rep.flags["family-wellformed"] = well;
  rep.flags["vertex-projections-nonzero"] = nonzero;
}

}  // namespace detail

inline IntMatrix range_projection(const OperatorFamily& fam, const Path& p) {
  const IntMatrix& m = fam.op(p);
  return m * m.transpose();
}

// -------- the defining relations --------

// extra_sets: additional finite exhaustive subsets for the product relation;
// each must share a range and be exhaustive there.
inline CheckReport check_ck_family(const Skeleton& s, const OperatorFamily& fam,
                                   const std::vector<std::vector<Path>>& extra_sets = {}) {
  CheckReport rep;
  detail::set_flags(s, fam, rep);

  CheckRelation orth{"vertex-orthogonality"};
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    Path pv = vertex_path(static_cast<int32_t>(v));
    const IntMatrix& tv = fam.op(pv);
    detail::record(orth, tv * tv, tv, {pv}, "idempotent");
    detail::record(orth, tv.transpose(), tv, {pv}, "symmetric");
    for (std::size_t w = v + 1; w < s.vertex_count(); ++w) {
      Path pw = vertex_path(static_cast<int32_t>(w));
      detail::record(orth, fam.op(pv) * fam.op(pw), IntMatrix(fam.dim(), fam.dim()),
                     {pv, pw}, "orthogonal");
    }
  }
  rep.relations.push_back(std::move(orth));

  CheckRelation comp{"composition"};
  for (const auto& [lam, slam] : fam.ops)
    for (const auto& [mu, smu] : fam.ops) {
      if (source_of(s, lam) != mu.range) continue;
      Path lm = compose(s, lam, mu);
      if (!fam.has(lm)) continue;  // outside a bounded family's window
      detail::record(comp, slam * smu, fam.op(lm), {lam, mu});
    }
  rep.relations.push_back(std::move(comp));

  CheckRelation lmin{"lmin-expansion"};
  for (const auto& [lam, slam] : fam.ops)
    for (const auto& [mu, smu] : fam.ops) {
      IntMatrix rhs(fam.dim(), fam.dim());
      for (auto& [alpha, beta] : lambda_min(s, lam, mu))
        rhs = rhs + fam.op(alpha) * fam.op(beta).transpose();
      detail::record(lmin, slam.transpose() * smu, rhs, {lam, mu});
    }
  rep.relations.push_back(std::move(lmin));

  CheckRelation prod{"exhaustive-product"};
  auto check_product = [&](int32_t v, const std::vector<Path>& E) {
    const IntMatrix& tv = fam.op(vertex_path(v));
    IntMatrix acc = tv;
    for (const Path& lam : E) acc = acc * (tv - range_projection(fam, lam));
    detail::record(prod, acc, IntMatrix(fam.dim(), fam.dim()), E,
                   "at " + s.vertex_name(v));
  };
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    for (const auto& E : detail::exhaustive_edge_sets(s, static_cast<int32_t>(v)))
      check_product(static_cast<int32_t>(v), E);
  for (const auto& E : extra_sets) {
    if (E.empty()) throw std::invalid_argument("check_ck_family: empty extra set");
    int32_t v = E.front().range;
    for (const Path& p : E)
      if (p.range != v) throw std::invalid_argument("check_ck_family: extra set range mix");
    if (!is_exhaustive(s, v, E).exhaustive)
      throw std::invalid_argument("check_ck_family: extra set is not exhaustive");
    check_product(v, E);
  }
  rep.relations.push_back(std::move(prod));
  return rep;
}

// -------- generator-level relations --------

// gen must assign exactly the vertices and single edges.
inline CheckReport check_generator_family(const Skeleton& s, const OperatorFamily& gen) {
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (!gen.has(vertex_path(static_cast<int32_t>(v))))
      throw std::invalid_argument("check_generator_family: missing vertex operator");
  for (std::size_t e = 0; e < s.edge_count(); ++e)
    if (!gen.has(Path{s.edge(static_cast<int32_t>(e)).range, {static_cast<int32_t>(e)}}))
      throw std::invalid_argument("check_generator_family: missing edge operator");

  CheckReport rep;
  detail::set_flags(s, gen, rep);

  std::vector<Path> gens;
  for (const auto& [p, m] : gen.ops) {
    (void)m;
    gens.push_back(p);
  }

  CheckRelation orth{"gen-vertex-orthogonality"};
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    Path pv = vertex_path(static_cast<int32_t>(v));
    const IntMatrix& tv = gen.op(pv);
    detail::record(orth, tv * tv, tv, {pv}, "idempotent");
    detail::record(orth, tv.transpose(), tv, {pv}, "symmetric");
    for (std::size_t w = v + 1; w < s.vertex_count(); ++w) {
      Path pw = vertex_path(static_cast<int32_t>(w));
      detail::record(orth, gen.op(pv) * gen.op(pw), IntMatrix(gen.dim(), gen.dim()),
                     {pv, pw}, "orthogonal");
    }
  }
  rep.relations.push_back(std::move(orth));

  // t_λ t_α = t_µ t_β whenever λα = µβ among generators: group the
  // composable generator pairs by their product path.
  CheckRelation sq{"gen-square-compatibility"};
  std::map<Path, std::vector<std::pair<Path, Path>>> by_product;
  for (const Path& a : gens)
    for (const Path& b : gens) {
      if (source_of(s, a) != b.range) continue;
      by_product[compose(s, a, b)].emplace_back(a, b);
    }
  for (const auto& [p, factorisations] : by_product) {
    const auto& [a0, b0] = factorisations.front();
    IntMatrix first = gen.op(a0) * gen.op(b0);
    for (std::size_t i = 1; i < factorisations.size(); ++i) {
      const auto& [a, b] = factorisations[i];
      detail::record(sq, gen.op(a) * gen.op(b), first, {a, b, a0, b0},
                     "factorisations of " + display(s, p));
    }
  }
  rep.relations.push_back(std::move(sq));

  CheckRelation lmin{"gen-lmin-expansion"};
  for (const Path& a : gens) {
    if (a.is_vertex()) continue;
    for (const Path& b : gens) {
      if (b.is_vertex()) continue;
      IntMatrix rhs(gen.dim(), gen.dim());
      for (auto& [alpha, beta] : lambda_min(s, a, b))
        rhs = rhs + gen.op(alpha) * gen.op(beta).transpose();
      detail::record(lmin, gen.op(a).transpose() * gen.op(b), rhs, {a, b});
    }
  }
  rep.relations.push_back(std::move(lmin));

  CheckRelation prod{"gen-exhaustive-product"};
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    for (const auto& E : detail::exhaustive_edge_sets(s, static_cast<int32_t>(v))) {
      const IntMatrix& tv = gen.op(vertex_path(static_cast<int32_t>(v)));
      IntMatrix acc = tv;
      for (const Path& lam : E) acc = acc * (tv - range_projection(gen, lam));
      detail::record(prod, acc, IntMatrix(gen.dim(), gen.dim()), E,
                     "at " + s.vertex_name(static_cast<int32_t>(v)));
    }
  rep.relations.push_back(std::move(prod));
  return rep;
}

// -------- classical relations and rejected variants --------

// t_v = Σ_{λ ∈ vΛ^{≤n}} t_λ t*_λ for every n ≤ bound.
inline CheckReport check_classical_relations(const Skeleton& s, const OperatorFamily& fam,
                                             std::optional<Degree> bound = std::nullopt) {
  Degree limit = bound ? *bound
                       : (fam.degree_bound ? *fam.degree_bound : max_path_degree(s));
  CheckReport rep;
  detail::set_flags(s, fam, rep);
  CheckRelation sum{"classical-sum"};
  for (const Degree& n : degrees_leq(limit))
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      Path pv = vertex_path(static_cast<int32_t>(v));
      IntMatrix rhs(fam.dim(), fam.dim());
      for (const Path& lam : paths_leq(s, static_cast<int32_t>(v), n))
        rhs = rhs + range_projection(fam, lam);
      detail::record(sum, fam.op(pv), rhs, {pv}, "n=" + to_string(n));
    }
  rep.relations.push_back(std::move(sum));
  return rep;
}

enum class Variant { A1, A2 };

// A1 is the classical sum over vΛ^{≤n}; A2 replaces the product relation by
// t_v = Σ_{λ∈E} t_λt*_λ over finite exhaustive E ⊆ vΛ ∖ {v}.
inline CheckReport check_variant_relations(const Skeleton& s, const OperatorFamily& fam,
                                           Variant variant,
                                           const std::vector<std::vector<Path>>& extra_sets = {},
                                           std::optional<Degree> bound = std::nullopt) {
  if (variant == Variant::A1) return check_classical_relations(s, fam, bound);
  CheckReport rep;
  detail::set_flags(s, fam, rep);
  CheckRelation sum{"variant-a2-sum"};
  auto check_sum = [&](int32_t v, const std::vector<Path>& E) {
    IntMatrix rhs(fam.dim(), fam.dim());
    for (const Path& lam : E) rhs = rhs + range_projection(fam, lam);
    detail::record(sum, fam.op(vertex_path(v)), rhs, E, "at " + s.vertex_name(v));
  };
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    for (const auto& E : detail::exhaustive_edge_sets(s, static_cast<int32_t>(v)))
      check_sum(static_cast<int32_t>(v), E);
  for (const auto& E : extra_sets) {
    if (E.empty()) throw std::invalid_argument("check_variant_relations: empty extra set");
    int32_t v = E.front().range;
    for (const Path& p : E) {
      if (p.range != v)
        throw std::invalid_argument("check_variant_relations: extra set range mix");
      if (p.is_vertex())
        throw std::invalid_argument("check_variant_relations: A2 sets exclude the vertex");
    }
    if (!is_exhaustive(s, v, E).exhaustive)
      throw std::invalid_argument("check_variant_relations: extra set is not exhaustive");
    check_sum(v, E);
  }
  rep.relations.push_back(std::move(sum));
  return rep;
}

// -------- core structural identities --------

// Q_λ = t_λt*_λ ∏_{ν ∈ T(d(λ), s(λ))} (t_λt*_λ − t_{λν}t*_{λν}).
inline IntMatrix q_projection(const Skeleton& s, const OperatorFamily& fam,
                              const PiClosure& pc, const Path& lam) {
  IntMatrix p = range_projection(fam, lam);
  IntMatrix acc = p;
  for (const Path& nu : t_extension_set(s, pc, degree_of(s, lam), source_of(s, lam)))
    acc = acc * (p - range_projection(fam, compose(s, lam, nu)));
  return acc;
}

// Θ(λ, µ) = Q_λ t_λ t*_µ.
inline IntMatrix theta_matrix(const Skeleton& s, const OperatorFamily& fam,
                              const PiClosure& pc, const Path& lam, const Path& mu) {
  return q_projection(s, fam, pc, lam) * fam.op(lam) * fam.op(mu).transpose();
}

// Exact identity suite for the core approximation M^t_{ΠE} built on `base`.
inline CheckReport structural_suite(const Skeleton& s, const OperatorFamily& fam,
                                    const std::vector<Path>& base) {
  PiClosure pc = pi_closure(s, base);
  CheckReport rep;
  detail::set_flags(s, fam, rep);
  const std::size_t dim = fam.dim();
  const IntMatrix zero(dim, dim);
  int32_t v0 = pc.elements.front().range;
  const IntMatrix& tv = fam.op(vertex_path(v0));

  // range projections commute and expand through minimal common extensions
  CheckRelation commute{"range-commuting"};
  CheckRelation expand{"range-expansion"};
  for (const Path& lam : pc.elements)
    for (const Path& mu : pc.elements) {
      IntMatrix pl = range_projection(fam, lam), pm = range_projection(fam, mu);
      detail::record(commute, pl * pm, pm * pl, {lam, mu});
      IntMatrix rhs(dim, dim);
      for (auto& [alpha, beta] : lambda_min(s, lam, mu))
        rhs = rhs + range_projection(fam, compose(s, lam, alpha));
      (void)0;  // λα = µβ, so either spelling of the common extension works
      detail::record(expand, pl * pm, rhs, {lam, mu});
    }
  rep.relations.push_back(std::move(commute));
  rep.relations.push_back(std::move(expand));

  // t*_λ t_µ = δ_{λ,µ} t_{s(λ)} on each Λ^{≤n} slice
  CheckRelation delta{"iso-delta"};
  for (const Degree& n : degrees_leq(pc.bound))
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      auto slice = paths_leq(s, static_cast<int32_t>(v), n);
      for (const Path& lam : slice)
        for (const Path& mu : slice) {
          IntMatrix lhs = fam.op(lam).transpose() * fam.op(mu);
          IntMatrix rhs =
              lam == mu ? fam.op(vertex_path(source_of(s, lam))) : IntMatrix(dim, dim);
          detail::record(delta, lhs, rhs, {lam, mu}, "n=" + to_string(n));
        }
    }
  rep.relations.push_back(std::move(delta));

  // t_v dominates the orthogonal range sum over each Λ^{≤n} slice
  CheckRelation dom{"domination"};
  for (const Degree& n : degrees_leq(pc.bound))
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      IntMatrix sumv(dim, dim);
      for (const Path& lam : paths_leq(s, static_cast<int32_t>(v), n))
        sumv = sumv + range_projection(fam, lam);
      detail::record(dom, fam.op(vertex_path(static_cast<int32_t>(v))) * sumv, sumv,
                     {vertex_path(static_cast<int32_t>(v))}, "n=" + to_string(n));
    }
  rep.relations.push_back(std::move(dom));

  // partition at the base range: gap product plus Σ Q = t_v
  CheckRelation part{"partition"};
  {
    IntMatrix gaps = tv;
    IntMatrix qsum(dim, dim);
    for (const Path& lam : pc.elements) {
      gaps = gaps * (tv - range_projection(fam, lam));
      qsum = qsum + q_projection(s, fam, pc, lam);
    }
    detail::record(part, gaps + qsum, tv, pc.base);
  }
  rep.relations.push_back(std::move(part));

  // t_µt*_µ resolves into the Q's sitting above µ inside ΠE
  CheckRelation resolve{"range-resolution"};
  for (const Path& mu : pc.elements) {
    IntMatrix rhs = q_projection(s, fam, pc, mu);
    for (const Path& nu : t_extension_set(s, pc, degree_of(s, mu), source_of(s, mu)))
      rhs = rhs + q_projection(s, fam, pc, compose(s, mu, nu));
    detail::record(resolve, range_projection(fam, mu), rhs, {mu});
  }
  rep.relations.push_back(std::move(resolve));

  // Θ matrices behave as matrix units with transpose as adjoint
  CheckRelation adj{"theta-adjoint"};
  CheckRelation units{"theta-product"};
  CheckRelation texpand{"theta-expansion"};
  std::map<std::pair<Degree, int32_t>, std::vector<Path>> classes;
  for (const Path& p : pc.elements)
    classes[{degree_of(s, p), source_of(s, p)}].push_back(p);
  std::vector<std::pair<Path, Path>> symbols;
  for (const auto& [key, members] : classes) {
    (void)key;
    for (const Path& lam : members)
      for (const Path& mu : members) symbols.emplace_back(lam, mu);
  }
  for (const auto& [lam, mu] : symbols) {
    detail::record(adj, theta_matrix(s, fam, pc, lam, mu).transpose(),
                   theta_matrix(s, fam, pc, mu, lam), {lam, mu});
    for (const auto& [sig, tau] : symbols) {
      IntMatrix lhs = theta_matrix(s, fam, pc, lam, mu) * theta_matrix(s, fam, pc, sig, tau);
      IntMatrix rhs = mu == sig ? theta_matrix(s, fam, pc, lam, tau) : zero;
      detail::record(units, lhs, rhs, {lam, mu, sig, tau});
    }
  }
  for (const auto& [key, members] : classes) {
    (void)key;
    for (const Path& lam : members)
      for (const Path& mu : members) {
        IntMatrix rhs(dim, dim);
        for (const ThetaTerm& term : expand_in_theta_basis(s, pc, lam, mu))
          rhs = rhs + theta_matrix(s, fam, pc, term.lambda, term.mu);
        detail::record(texpand, fam.op(lam) * fam.op(mu).transpose(), rhs, {lam, mu});
      }
  }
  rep.relations.push_back(std::move(adj));
  rep.relations.push_back(std::move(units));
  rep.relations.push_back(std::move(texpand));

  // Q_λ = 0 exactly on the classes the support report marks vanishing
  CheckRelation vanish{"vanishing-iff-exhaustive"};
  CoreBlockReport support = theta_support(s, pc);
  for (const Path& lam : pc.elements) {
    bool expected_zero =
        std::binary_search(support.vanishing.begin(), support.vanishing.end(), lam);
    IntMatrix q = q_projection(s, fam, pc, lam);
    detail::record(vanish, q, expected_zero ? zero : q, {lam},
                   expected_zero ? "expected zero" : "expected nonzero");
    if (!expected_zero) {
      ++vanish.checked;
      if (q.is_zero()) {
        vanish.pass = false;
        if (vanish.counterexamples.size() < detail::kMaxCounterexamples)
          vanish.counterexamples.push_back({{lam}, std::nullopt, "vanished unexpectedly"});
      }
    }
  }
  rep.relations.push_back(std::move(vanish));

  // extendor witness: ξ from the non-exhaustive certificate pins a rank-one
  // corner under Q_λ and shifts the Θ's accordingly
  CheckRelation edom{"extendor-domination"};
  CheckRelation eshift{"extendor-shift"};
  for (const auto& [key, members] : classes) {
    auto t = t_extension_set(s, pc, key.first, key.second);
    auto cert = is_exhaustive(s, key.second, t);
    if (cert.exhaustive) continue;
    const Path& xi = *cert.witness;
    for (const Path& lam : members) {
      Path lxi = compose(s, lam, xi);
      if (!fam.has(lxi)) continue;  // outside a bounded family's window
      IntMatrix corner = range_projection(fam, lxi);
      IntMatrix q = q_projection(s, fam, pc, lam);
      detail::record(edom, q * corner, corner, {lam, xi}, "corner under Q");
      for (const auto& [sig, tau] : symbols) {
        IntMatrix lhs = corner * theta_matrix(s, fam, pc, sig, tau);
        if (source_of(s, tau) != xi.range) {
          // τξ does not exist, and λ ≠ σ is then automatic: the product dies
          detail::record(eshift, lhs, zero, {lam, xi, sig, tau});
          continue;
        }
        Path txi = compose(s, tau, xi);
        if (!fam.has(txi)) continue;
        IntMatrix rhs = lam == sig ? fam.op(lxi) * fam.op(txi).transpose() : zero;
        detail::record(eshift, lhs, rhs, {lam, xi, sig, tau});
      }
    }
  }
  rep.relations.push_back(std::move(edom));
  rep.relations.push_back(std::move(eshift));

  // gap identity: when the T-set product at s(λ) vanishes, the gap at the
  // range collapses to the product over extensions
  CheckRelation gap{"gap-projection"};
  for (const Path& lam : pc.elements) {
    auto t = t_extension_set(s, pc, degree_of(s, lam), source_of(s, lam));
    if (t.empty()) continue;
    const IntMatrix& tsrc = fam.op(vertex_path(source_of(s, lam)));
    IntMatrix src_prod = tsrc;
    for (const Path& nu : t) src_prod = src_prod * (tsrc - range_projection(fam, nu));
    if (!src_prod.is_zero()) continue;
    IntMatrix rhs = tv;
    for (const Path& nu : t)
      rhs = rhs * (tv - range_projection(fam, compose(s, lam, nu)));
    detail::record(gap, tv - range_projection(fam, lam), rhs, {lam});
  }
  rep.relations.push_back(std::move(gap));

  return rep;
}

}  // namespace kgraph
