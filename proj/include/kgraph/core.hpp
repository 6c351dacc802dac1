#pragma once
// core.hpp — finite-dimensional core approximations: ΠE closure, T-sets,
// Θ-symbol block reports, formal core elements, and degree-truncation blocks.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/extension.hpp"
#include "kgraph/path.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

// Exact rational with gcd-normalized int64 parts; denominator positive.
class Rational {
public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}
  Rational(int64_t n, int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

// -------- ΠE closure --------

struct PiClosure {
  std::vector<Path> base;      // E, sorted
  std::vector<Path> elements;  // ΠE, sorted
  Degree bound;                // N = ⋁_{λ∈E} d(λ)

  bool contains(const Path& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
  friend bool operator==(const PiClosure&, const PiClosure&) = default;
};

// Least set containing E that is closed under
//   λ,µ,σ ∈ F, d(λ)=d(µ), s(λ)=s(µ), (α,β) ∈ Λ^min(µ,σ) ⟹ λα ∈ F.
// All members of E must share one range; all added paths keep degree ≤ N.
inline PiClosure pi_closure(const Skeleton& s, const std::vector<Path>& E) {
  if (E.empty()) throw std::invalid_argument("pi_closure: empty base set");
  for (const Path& p : E)
    if (p.range != E.front().range)
      throw std::invalid_argument("pi_closure: base paths must share a range");

  PiClosure pc;
  pc.base.assign(E.begin(), E.end());
  std::sort(pc.base.begin(), pc.base.end());
  pc.base.erase(std::unique(pc.base.begin(), pc.base.end()), pc.base.end());

  Degree N(s.rank());
  for (const Path& p : pc.base) N = join(N, degree_of(s, p));
  pc.bound = N;

  std::set<Path> closed(pc.base.begin(), pc.base.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Path> cur(closed.begin(), closed.end());
    for (const Path& lam : cur) {
      Degree dl = degree_of(s, lam);
      int32_t sl = source_of(s, lam);
      for (const Path& mu : cur) {
        if (degree_of(s, mu) != dl || source_of(s, mu) != sl) continue;
        for (const Path& sigma : cur)
          for (auto& [alpha, beta] : lambda_min(s, mu, sigma)) {
            (void)beta;
            Path added = compose(s, lam, alpha);
            if (closed.insert(added).second) grew = true;
          }
      }
    }
  }

  pc.elements.assign(closed.begin(), closed.end());
  for (const Path& p : pc.elements)
    if (!leq(degree_of(s, p), N))
      throw std::logic_error("pi_closure: closure left the degree box");
  return pc;
}

// -------- T-sets --------

// T(n, v) = {ν ∈ vΛ : d(ν) > 0, λν ∈ ΠE} for a representative λ ∈ ΠE with
// d(λ) = n, s(λ) = v. Checks representative independence across all of them.
inline std::vector<Path> t_extension_set(const Skeleton& s, const PiClosure& pc,
                                         const Degree& n, int32_t v) {
  std::vector<Path> reps;
  for (const Path& p : pc.elements)
    if (degree_of(s, p) == n && source_of(s, p) == v) reps.push_back(p);
  if (reps.empty()) throw std::invalid_argument("t_extension_set: no representative in ΠE");

  auto for_rep = [&](const Path& lam) {
    std::set<Path> nus;
    for (const Path& ext : pc.elements) {
      Degree de = degree_of(s, ext);
      if (!leq(n, de) || de == n) continue;
      if (prefix(s, ext, n) != lam) continue;
      nus.insert(segment(s, ext, n, de));
    }
    return nus;
  };

  std::set<Path> first = for_rep(reps.front());
  for (std::size_t i = 1; i < reps.size(); ++i)
    if (for_rep(reps[i]) != first)
      throw std::logic_error("t_extension_set: representative dependence");
  return {first.begin(), first.end()};
}

// -------- Θ block report --------

struct CoreBlock {
  Degree degree;
  int32_t source;
  std::vector<Path> members;  // all λ ∈ ΠE in this (degree, source) class
  friend bool operator==(const CoreBlock&, const CoreBlock&) = default;
};

struct CoreBlockReport {
  std::vector<CoreBlock> blocks;              // classes with non-vanishing Q
  std::vector<Path> vanishing;                // λ ∈ ΠE with Q_λ = 0
  std::map<std::string, ExhaustiveCertificate> certificates;  // keyed by class
  int64_t total_dimension = 0;                // Σ |block|²
  friend bool operator==(const CoreBlockReport&, const CoreBlockReport&) = default;
};

inline std::string core_class_key(const Skeleton& s, const Degree& n, int32_t v) {
  return to_string(n) + "@" + s.vertex_name(v);
}

// Q_λ vanishes exactly when T(d(λ), s(λ)) is exhaustive, so the classes with
// non-exhaustive T-sets survive as matrix-unit blocks.
inline CoreBlockReport theta_support(const Skeleton& s, const PiClosure& pc) {
  std::map<std::pair<Degree, int32_t>, std::vector<Path>> classes;
  for (const Path& p : pc.elements)
    classes[{degree_of(s, p), source_of(s, p)}].push_back(p);

  CoreBlockReport rep;
  for (auto& [key, members] : classes) {
    auto t = t_extension_set(s, pc, key.first, key.second);
    auto cert = is_exhaustive(s, key.second, t);
    rep.certificates.emplace(core_class_key(s, key.first, key.second), cert);
    if (cert.exhaustive) {
      for (const Path& p : members) rep.vanishing.push_back(p);
    } else {
      rep.blocks.push_back({key.first, key.second, members});
      int64_t n = static_cast<int64_t>(members.size());
      rep.total_dimension += n * n;
    }
  }
  std::sort(rep.vanishing.begin(), rep.vanishing.end());
  return rep;
}

// -------- Θ expansion --------

struct ThetaTerm {
  Path lambda, mu;
};

// t_λ t*_µ = Σ_{ν : λν ∈ ΠE} Θ(λν, µν), ν running over extensions inside ΠE
// including the trivial ν = s(λ). Vanishing terms are dropped.
inline std::vector<ThetaTerm> expand_in_theta_basis(const Skeleton& s, const PiClosure& pc,
                                                    const Path& lam, const Path& mu) {
  if (!pc.contains(lam) || !pc.contains(mu))
    throw std::invalid_argument("expand_in_theta_basis: paths must lie in ΠE");
  Degree dl = degree_of(s, lam);
  if (degree_of(s, mu) != dl || source_of(s, mu) != source_of(s, lam))
    throw std::invalid_argument("expand_in_theta_basis: need d(λ)=d(µ), s(λ)=s(µ)");

  CoreBlockReport support = theta_support(s, pc);
  auto vanishes = [&](const Path& p) {
    return std::binary_search(support.vanishing.begin(), support.vanishing.end(), p);
  };

  std::vector<ThetaTerm> out;
  std::vector<Path> nus = {vertex_path(source_of(s, lam))};
  for (Path& nu : t_extension_set(s, pc, dl, source_of(s, lam))) nus.push_back(std::move(nu));
  for (const Path& nu : nus) {
    Path ln = compose(s, lam, nu);
    Path mn = compose(s, mu, nu);
    if (!pc.contains(ln)) continue;
    if (!pc.contains(mn)) throw std::logic_error("expand_in_theta_basis: lopsided extension");
    if (vanishes(ln)) continue;
    out.push_back({ln, mn});
  }
  return out;
}

// -------- formal core elements and the gauge expectation --------

// Finite rational combination of s_λ s*_µ symbols with common source per key.
struct FormalCoreElement {
  std::map<std::pair<Path, Path>, Rational> terms;

  void add(const Skeleton& s, const Path& lam, const Path& mu, const Rational& c) {
    if (source_of(s, lam) != source_of(s, mu))
      throw std::invalid_argument("FormalCoreElement: sources must agree");
    auto it = terms.find({lam, mu});
    Rational sum = (it == terms.end() ? Rational{} : it->second) + c;
    if (sum.is_zero())
      terms.erase({lam, mu});
    else
      terms[{lam, mu}] = sum;
  }

  friend bool operator==(const FormalCoreElement& a, const FormalCoreElement& b) = default;
};

// Φ keeps exactly the terms with d(λ) = d(µ); linear and idempotent.
inline FormalCoreElement gauge_expectation(const Skeleton& s, const FormalCoreElement& a) {
  FormalCoreElement out;
  for (const auto& [key, c] : a.terms)
    if (degree_of(s, key.first) == degree_of(s, key.second)) out.terms.emplace(key, c);
  return out;
}

// -------- F_n block report --------

struct FnBlock {
  int32_t source;
  Degree degree;
  std::vector<Path> members;  // λ ∈ Λ^{≤n} of this degree with this source
  friend bool operator==(const FnBlock&, const FnBlock&) = default;
};

struct FnReport {
  Degree n;
  std::vector<FnBlock> blocks;  // nonempty classes only
  int64_t total_dimension = 0;  // Σ |block|²
  friend bool operator==(const FnReport&, const FnReport&) = default;
};

// Blocks of span{s_λ s*_µ : λ,µ ∈ Λ^{≤n}, d(λ)=d(µ), s(λ)=s(µ)}, keyed by
// (source vertex, degree).
inline FnReport f_n_report(const Skeleton& s, const Degree& n) {
  if (n.rank() != s.rank()) throw std::invalid_argument("f_n_report: rank mismatch");
  std::map<std::pair<int32_t, Degree>, std::vector<Path>> classes;
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    for (const Path& p : paths_leq(s, static_cast<int32_t>(v), n))
      classes[{source_of(s, p), degree_of(s, p)}].push_back(p);

  FnReport rep;
  rep.n = n;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    int64_t size = static_cast<int64_t>(members.size());
    rep.blocks.push_back({key.first, key.second, std::move(members)});
    rep.total_dimension += size * size;
  }
  return rep;
}

}  // namespace kgraph
