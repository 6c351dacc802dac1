#pragma once
// fixtures.hpp — built-in skeletons, the interval construction, products.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

namespace fixture_ids {
// G_LAMBDA1 edge ids, byte-exact UTF-8 (λ = U+03BB, µ = U+00B5).
inline constexpr std::string_view lambda1 = "\xce\xbb\x31";
inline constexpr std::string_view mu1 = "\xc2\xb5\x31";
}  // namespace fixture_ids

// Two edges of different colors into one vertex, nothing else: the minimal
// non-finitely-complete corner. Not locally convex.
inline SkeletonInput fixture_g_lambda1() {
  SkeletonInput in;
  in.rank = 2;
  in.vertices = {"v1", "u", "w"};
  in.edges = {
      {std::string(fixture_ids::lambda1), 1, "v1", "u"},
      {std::string(fixture_ids::mu1), 2, "v1", "w"},
  };
  return in;
}

// One commuting square: e.f = g.h.
inline SkeletonInput fixture_g_square() {
  SkeletonInput in;
  in.rank = 2;
  in.vertices = {"v", "a", "b", "w"};
  in.edges = {
      {"e", 1, "v", "a"},
      {"f", 2, "a", "w"},
      {"g", 2, "v", "b"},
      {"h", 1, "b", "w"},
  };
  in.squares = {{{"e", "f"}, {"g", "h"}}};
  return in;
}

// One vertex, one loop per color, commuting: e.f = f.e.
inline SkeletonInput fixture_g_loop2() {
  SkeletonInput in;
  in.rank = 2;
  in.vertices = {"v"};
  in.edges = {
      {"e", 1, "v", "v"},
      {"f", 2, "v", "v"},
  };
  in.squares = {{{"e", "f"}, {"f", "e"}}};
  return in;
}

// Two independent squares glued at v: extensions of e never meet extensions
// of ep, so range projections at v overlap without being comparable.
inline SkeletonInput fixture_g_nonorth() {
  SkeletonInput in;
  in.rank = 2;
  in.vertices = {"v", "a", "b", "w", "ap", "bp", "wp"};
  in.edges = {
      {"e", 1, "v", "a"},   {"f", 2, "a", "w"},
      {"g", 2, "v", "b"},   {"h", 1, "b", "w"},
      {"ep", 1, "v", "ap"}, {"fp", 2, "ap", "wp"},
      {"gp", 2, "v", "bp"}, {"hp", 1, "bp", "wp"},
  };
  in.squares = {{{"e", "f"}, {"g", "h"}}, {{"ep", "fp"}, {"gp", "hp"}}};
  return in;
}

// Ω(k, m): vertices are lattice points p <= m, one edge of color c from
// p+e_c down to p, all squares commuting. Vertex id "p1-p2-…"; edge id
// "x<c>_<range id>".
inline SkeletonInput omega_skeleton(std::size_t k, const Degree& m) {
  if (k < 1) throw std::invalid_argument("omega_skeleton: rank must be at least 1");
  if (m.rank() != k) throw std::invalid_argument("omega_skeleton: degree rank mismatch");
  auto vid = [&](const Degree& p) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += "-";
      s += std::to_string(p[i]);
    }
    return s;
  };
  SkeletonInput in;
  in.rank = static_cast<int32_t>(k);
  std::vector<Degree> points = degrees_leq(m);
  for (const Degree& p : points) in.vertices.push_back(vid(p));
  auto eid = [&](std::size_t c, const Degree& p) {
    return "x" + std::to_string(c) + "_" + vid(p);
  };
  for (const Degree& p : points) {
    for (std::size_t c = 1; c <= k; ++c) {
      Degree q = p;
      ++q[c - 1];
      if (!leq(q, m)) continue;
      in.edges.push_back({eid(c, p), static_cast<int32_t>(c), vid(p), vid(q)});
    }
  }
  // Square at p for colors c < d: x_c(p).x_d(p+e_c) = x_d(p).x_c(p+e_d).
  for (const Degree& p : points) {
    for (std::size_t c = 1; c <= k; ++c) {
      for (std::size_t d = c + 1; d <= k; ++d) {
        Degree pc = p, pd = p, pcd = p;
        ++pc[c - 1];
        ++pd[d - 1];
        ++pcd[c - 1];
        ++pcd[d - 1];
        if (!leq(pcd, m)) continue;
        in.squares.push_back({{eid(c, p), eid(d, pc)}, {eid(d, p), eid(c, pd)}});
      }
    }
  }
  return in;
}

// Cartesian product: rank adds, a-edges keep their colors, b-edges are
// shifted by rank(a). Ids are "<a>~<b>".
inline SkeletonInput product_skeleton(const Skeleton& a, const Skeleton& b) {
  SkeletonInput in;
  in.rank = static_cast<int32_t>(a.rank() + b.rank());
  auto vid = [&](int32_t va, int32_t vb) {
    return a.vertex_name(va) + "~" + b.vertex_name(vb);
  };
  auto ea_id = [&](int32_t e, int32_t vb) {
    return a.edge(e).id + "~" + b.vertex_name(vb);
  };
  auto eb_id = [&](int32_t va, int32_t e) {
    return a.vertex_name(va) + "~" + b.edge(e).id;
  };
  for (std::size_t va = 0; va < a.vertex_count(); ++va)
    for (std::size_t vb = 0; vb < b.vertex_count(); ++vb)
      in.vertices.push_back(vid(static_cast<int32_t>(va), static_cast<int32_t>(vb)));
  for (std::size_t e = 0; e < a.edges().size(); ++e)
    for (std::size_t vb = 0; vb < b.vertex_count(); ++vb) {
      const Edge& ed = a.edge(static_cast<int32_t>(e));
      in.edges.push_back({ea_id(static_cast<int32_t>(e), static_cast<int32_t>(vb)), ed.color,
                          vid(ed.range, static_cast<int32_t>(vb)),
                          vid(ed.source, static_cast<int32_t>(vb))});
    }
  for (std::size_t va = 0; va < a.vertex_count(); ++va)
    for (std::size_t e = 0; e < b.edges().size(); ++e) {
      const Edge& ed = b.edge(static_cast<int32_t>(e));
      in.edges.push_back({eb_id(static_cast<int32_t>(va), static_cast<int32_t>(e)),
                          ed.color + static_cast<int32_t>(a.rank()),
                          vid(static_cast<int32_t>(va), ed.range),
                          vid(static_cast<int32_t>(va), ed.source)});
    }
  // Lifted a-squares, one per b-vertex.
  for (const Square& q : a.squares())
    for (std::size_t vb = 0; vb < b.vertex_count(); ++vb) {
      int32_t z = static_cast<int32_t>(vb);
      in.squares.push_back({{ea_id(q.x, z), ea_id(q.y, z)}, {ea_id(q.u, z), ea_id(q.w, z)}});
    }
  // Lifted b-squares, one per a-vertex.
  for (const Square& q : b.squares())
    for (std::size_t va = 0; va < a.vertex_count(); ++va) {
      int32_t z = static_cast<int32_t>(va);
      in.squares.push_back({{eb_id(z, q.x), eb_id(z, q.y)}, {eb_id(z, q.u), eb_id(z, q.w)}});
    }
  // Mixed squares: (x at r(y)) . (s(x) at y) = (r(x) at y) . (x at s(y)).
  for (std::size_t ea = 0; ea < a.edges().size(); ++ea)
    for (std::size_t eb = 0; eb < b.edges().size(); ++eb) {
      const Edge& x = a.edge(static_cast<int32_t>(ea));
      const Edge& y = b.edge(static_cast<int32_t>(eb));
      in.squares.push_back({{ea_id(static_cast<int32_t>(ea), y.range),
                             eb_id(x.source, static_cast<int32_t>(eb))},
                            {eb_id(x.range, static_cast<int32_t>(eb)),
                             ea_id(static_cast<int32_t>(ea), y.source)}});
    }
  return in;
}

// Named fixtures for the CLI and tests.
inline SkeletonInput fixture(std::string_view name) {
  if (name == "G_LAMBDA1") return fixture_g_lambda1();
  if (name == "G_SQUARE") return fixture_g_square();
  if (name == "G_LOOP2") return fixture_g_loop2();
  if (name == "G_NONORTH") return fixture_g_nonorth();
  throw std::invalid_argument("unknown fixture: " + std::string(name) +
                              " (expected G_LAMBDA1, G_SQUARE, G_LOOP2, or G_NONORTH)");
}

inline std::vector<std::string> fixture_names() {
  return {"G_LAMBDA1", "G_LOOP2", "G_NONORTH", "G_SQUARE"};
}

}  // namespace kgraph
