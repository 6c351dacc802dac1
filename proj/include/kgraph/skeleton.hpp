#pragma once
// skeleton.hpp — colored 1-skeletons with commuting-square relations.
//
// A skeleton presents a rank-k shape: vertices, edges colored 1..k (each edge
// directed from its source vertex to its range vertex), and squares declaring
// x.y = u.w for mixed-color composable pairs. validate_skeleton checks that
// the data is referentially sound, that squares are well typed, that for each
// color pair the square set induces a bijection between the two interleavings,
// and (rank >= 3) that the two swap routes reversing any three-color word
// agree. Skeletons that pass are immutable and safe to share across threads.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"

namespace kgraph {

struct EdgeInput {
  std::string id;
  int32_t color = 0;  // 1-based
  std::string range;
  std::string source;
  friend bool operator==(const EdgeInput&, const EdgeInput&) = default;
};

struct SquareInput {
  std::array<std::string, 2> path_a;  // edge ids, composed left to right
  std::array<std::string, 2> path_b;
  friend bool operator==(const SquareInput&, const SquareInput&) = default;
};

struct SkeletonInput {
  int32_t rank = 0;
  std::vector<std::string> vertices;
  std::vector<EdgeInput> edges;
  std::vector<SquareInput> squares;
  friend bool operator==(const SkeletonInput&, const SkeletonInput&) = default;
};

enum class ViolationKind {
  MissingSquare,
  DuplicateSquare,
  NonBijective,
  CubeFailure,
  DanglingEndpoint,
};

inline std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::MissingSquare: return "missing-square";
    case ViolationKind::DuplicateSquare: return "duplicate-square";
    case ViolationKind::NonBijective: return "non-bijective";
    case ViolationKind::CubeFailure: return "cube-failure";
    case ViolationKind::DanglingEndpoint: return "dangling-endpoint";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<std::string> ids;  // offending vertex/edge ids
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

struct Edge {
  std::string id;
  int32_t color = 0;   // 1-based
  int32_t range = -1;  // vertex index
  int32_t source = -1; // vertex index
};

// x.y = u.w with color(x) < color(y), color(u) = color(y), color(w) = color(x).
struct Square {
  int32_t x = -1, y = -1, u = -1, w = -1;  // edge indexes
};

namespace detail {

struct ResolvedSquare {
  int32_t x, y, u, w;
};

}  // namespace detail

class Skeleton {
public:
  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(int32_t v) const { return vertices_.at(v); }
  const Edge& edge(int32_t e) const { return edges_.at(e); }

  std::optional<int32_t> vertex_index(std::string_view name) const {
    auto it = vertex_by_name_.find(std::string(name));
    if (it == vertex_by_name_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int32_t> edge_index(std::string_view id) const {
    auto it = edge_by_id_.find(std::string(id));
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
  }

  // Edges e with r(e) = v, ascending edge index (= ascending id).
  const std::vector<int32_t>& edges_with_range(int32_t v) const { return out_.at(v); }
  // Edges e with s(e) = v, ascending edge index.
  const std::vector<int32_t>& edges_with_source(int32_t v) const { return in_.at(v); }

  // vΛ^{e_color}: edges at v of one color, ascending index.
  std::vector<int32_t> edges_with_range(int32_t v, int32_t color) const {
    std::vector<int32_t> r;
    for (int32_t e : out_.at(v))
      if (edges_[e].color == color) r.push_back(e);
    return r;
  }
  std::vector<int32_t> edges_with_source(int32_t v, int32_t color) const {
    std::vector<int32_t> r;
    for (int32_t e : in_.at(v))
      if (edges_[e].color == color) r.push_back(e);
    return r;
  }

  // The square rewrite for an adjacent mixed-color pair: given composable
  // (a, b) with color(a) != color(b), returns (b', a') with the colors
  // exchanged and a.b = b'.a'. Present for every composable mixed pair of a
  // validated skeleton.
  std::optional<std::pair<int32_t, int32_t>> swap_pair(int32_t a, int32_t b) const {
    auto it = swap_.find({a, b});
    if (it == swap_.end()) return std::nullopt;
    return it->second;
  }

  // Construction is via build_skeleton below.
  struct Raw {
    std::size_t rank;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Square> squares;
  };
  explicit Skeleton(Raw raw)
      : rank_(raw.rank),
        vertices_(std::move(raw.vertices)),
        edges_(std::move(raw.edges)),
        squares_(std::move(raw.squares)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      vertex_by_name_[vertices_[i]] = static_cast<int32_t>(i);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      edge_by_id_[edges_[i].id] = static_cast<int32_t>(i);
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out_[edges_[i].range].push_back(static_cast<int32_t>(i));
      in_[edges_[i].source].push_back(static_cast<int32_t>(i));
    }
    for (const Square& q : squares_) {
      swap_[{q.x, q.y}] = {q.u, q.w};
      swap_[{q.u, q.w}] = {q.x, q.y};
    }
  }

private:
  std::size_t rank_;
  std::vector<std::string> vertices_;  // sorted by name
  std::vector<Edge> edges_;            // sorted by id
  std::vector<Square> squares_;
  std::map<std::string, int32_t> vertex_by_name_;
  std::map<std::string, int32_t> edge_by_id_;
  std::vector<std::vector<int32_t>> out_, in_;
  std::map<std::pair<int32_t, int32_t>, std::pair<int32_t, int32_t>> swap_;
};

namespace detail {

// Name resolution and record-level typing. Fills `raw` (sorted) when clean
// enough to proceed; reference problems are reported as dangling-endpoint.
inline void resolve_input(const SkeletonInput& in, Skeleton::Raw& raw,
                          std::vector<detail::ResolvedSquare>& squares,
                          ValidationReport& rep) {
  auto flag = [&](ViolationKind k, std::vector<std::string> ids, std::string detail) {
    rep.violations.push_back({k, std::move(ids), std::move(detail)});
  };

  if (in.rank < 1)
    flag(ViolationKind::DanglingEndpoint, {}, "rank must be at least 1");

  raw.rank = static_cast<std::size_t>(std::max<int32_t>(in.rank, 1));
  raw.vertices = in.vertices;
  std::sort(raw.vertices.begin(), raw.vertices.end());
  for (std::size_t i = 0; i + 1 < raw.vertices.size(); ++i)
    if (raw.vertices[i] == raw.vertices[i + 1])
      flag(ViolationKind::DanglingEndpoint, {raw.vertices[i]}, "duplicate vertex id");
  if (!raw.vertices.empty() && raw.vertices.front().empty())
    flag(ViolationKind::DanglingEndpoint, {}, "empty vertex id");

  std::map<std::string, int32_t> vidx;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i)
    vidx[raw.vertices[i]] = static_cast<int32_t>(i);

  std::vector<EdgeInput> sorted_edges = in.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end(),
            [](const EdgeInput& a, const EdgeInput& b) { return a.id < b.id; });
  std::map<std::string, int32_t> eidx;
  for (const EdgeInput& e : sorted_edges) {
    if (e.id.empty()) {
      flag(ViolationKind::DanglingEndpoint, {}, "empty edge id");
      continue;
    }
    if (eidx.count(e.id)) {
      flag(ViolationKind::DanglingEndpoint, {e.id}, "duplicate edge id");
      continue;
    }
    if (e.color < 1 || e.color > in.rank)
      flag(ViolationKind::DanglingEndpoint, {e.id}, "edge color outside 1..k");
    auto r = vidx.find(e.range);
    auto s = vidx.find(e.source);
    if (r == vidx.end())
      flag(ViolationKind::DanglingEndpoint, {e.id, e.range}, "edge range is not a vertex");
    if (s == vidx.end())
      flag(ViolationKind::DanglingEndpoint, {e.id, e.source}, "edge source is not a vertex");
    if (r == vidx.end() || s == vidx.end() || e.color < 1 || e.color > in.rank) continue;
    eidx[e.id] = static_cast<int32_t>(raw.edges.size());
    raw.edges.push_back({e.id, e.color, r->second, s->second});
  }

  for (const SquareInput& q : in.squares) {
    std::array<int32_t, 4> r{};
    bool ok = true;
    const std::array<const std::string*, 4> ids = {&q.path_a[0], &q.path_a[1],
                                                   &q.path_b[0], &q.path_b[1]};
    for (std::size_t i = 0; i < 4; ++i) {
      auto it = eidx.find(*ids[i]);
      if (it == eidx.end()) {
        flag(ViolationKind::DanglingEndpoint, {*ids[i]}, "square references unknown edge");
        ok = false;
      } else {
        r[i] = it->second;
      }
    }
    if (!ok) continue;

    // Normalize so the first pair carries colors (i, j) with i < j.
    auto color = [&](int32_t e) { return raw.edges[e].color; };
    int32_t x = r[0], y = r[1], u = r[2], w = r[3];
    auto describe = [&]() {
      return std::vector<std::string>{raw.edges[r[0]].id, raw.edges[r[1]].id,
                                      raw.edges[r[2]].id, raw.edges[r[3]].id};
    };
    if (color(x) == color(y) || color(u) == color(w)) {
      flag(ViolationKind::NonBijective, describe(), "square sides must mix two colors");
      continue;
    }
    if (color(x) > color(y)) {
      std::swap(x, u);
      std::swap(y, w);
    }
    if (color(x) > color(y) || color(u) != color(y) || color(w) != color(x)) {
      flag(ViolationKind::NonBijective, describe(), "square sides must carry swapped colors");
      continue;
    }
    auto composable = [&](int32_t a, int32_t b) {
      return raw.edges[a].source == raw.edges[b].range;
    };
    if (!composable(x, y) || !composable(u, w) ||
        raw.edges[x].range != raw.edges[u].range ||
        raw.edges[y].source != raw.edges[w].source) {
      flag(ViolationKind::NonBijective, describe(), "square sides are not parallel composable paths");
      continue;
    }
    squares.push_back({x, y, u, w});
  }
}

}  // namespace detail

inline ValidationReport validate_skeleton(const SkeletonInput& in) {
  ValidationReport rep;
  Skeleton::Raw raw;
  std::vector<detail::ResolvedSquare> squares;
  detail::resolve_input(in, raw, squares, rep);
  if (!rep.ok()) return rep;

  auto flag = [&](ViolationKind k, std::vector<std::string> ids, std::string detail) {
    rep.violations.push_back({k, std::move(ids), std::move(detail)});
  };
  auto eid = [&](int32_t e) { return raw.edges[e].id; };

  // Per color pair i<j: squares must give a bijection between composable
  // (i,j) words and composable (j,i) words.
  std::map<std::pair<int32_t, int32_t>, std::pair<int32_t, int32_t>> fwd, bwd;
  for (const auto& q : squares) {
    if (fwd.count({q.x, q.y}))
      flag(ViolationKind::DuplicateSquare, {eid(q.x), eid(q.y)},
           "two squares share the same first side");
    else if (bwd.count({q.u, q.w}))
      flag(ViolationKind::NonBijective, {eid(q.u), eid(q.w)},
           "two squares share the same second side");
    else {
      fwd[{q.x, q.y}] = {q.u, q.w};
      bwd[{q.u, q.w}] = {q.x, q.y};
    }
  }
  const int32_t k = in.rank;
  const auto& E = raw.edges;
  for (int32_t i = 1; i <= k; ++i) {
    for (int32_t j = i + 1; j <= k; ++j) {
      for (std::size_t a = 0; a < E.size(); ++a) {
        for (std::size_t b = 0; b < E.size(); ++b) {
          if (E[a].source != E[b].range) continue;
          int32_t ai = static_cast<int32_t>(a), bi = static_cast<int32_t>(b);
          if (E[a].color == i && E[b].color == j && !fwd.count({ai, bi}))
            flag(ViolationKind::MissingSquare, {eid(ai), eid(bi)},
                 "composable mixed-color pair has no square");
          if (E[a].color == j && E[b].color == i && !bwd.count({ai, bi}))
            flag(ViolationKind::MissingSquare, {eid(ai), eid(bi)},
                 "composable mixed-color pair has no square");
        }
      }
    }
  }
  if (!rep.ok()) return rep;

  // Cube condition (rank >= 3): the two swap routes that reverse a
  // three-distinct-color word must agree.
  if (k >= 3) {
    auto swap_at = [&](std::array<int32_t, 3>& wrd, int pos) -> bool {
      std::pair<int32_t, int32_t> key{wrd[pos], wrd[pos + 1]};
      auto itf = fwd.find(key);
      if (itf != fwd.end()) {
        wrd[pos] = itf->second.first;
        wrd[pos + 1] = itf->second.second;
        return true;
      }
      auto itb = bwd.find(key);
      if (itb != bwd.end()) {
        wrd[pos] = itb->second.first;
        wrd[pos + 1] = itb->second.second;
        return true;
      }
      return false;
    };
    for (std::size_t a = 0; a < E.size(); ++a)
      for (std::size_t b = 0; b < E.size(); ++b) {
        if (E[a].source != E[b].range || E[a].color == E[b].color) continue;
        for (std::size_t c = 0; c < E.size(); ++c) {
          if (E[b].source != E[c].range) continue;
          if (E[c].color == E[a].color || E[c].color == E[b].color) continue;
          std::array<int32_t, 3> w1 = {static_cast<int32_t>(a), static_cast<int32_t>(b),
                                       static_cast<int32_t>(c)};
          std::array<int32_t, 3> w2 = w1;
          bool ok1 = swap_at(w1, 0) && swap_at(w1, 1) && swap_at(w1, 0);
          bool ok2 = swap_at(w2, 1) && swap_at(w2, 0) && swap_at(w2, 1);
          if (!ok1 || !ok2 || w1 != w2)
            flag(ViolationKind::CubeFailure,
                 {eid(static_cast<int32_t>(a)), eid(static_cast<int32_t>(b)),
                  eid(static_cast<int32_t>(c))},
                 "swap routes disagree on a three-color word");
        }
      }
  }
  return rep;
}

// Validates and constructs; throws std::invalid_argument on a failed report.
inline Skeleton build_skeleton(const SkeletonInput& in) {
  ValidationReport rep = validate_skeleton(in);
  if (!rep.ok()) {
    std::string msg = "invalid skeleton:";
    for (const Violation& v : rep.violations) {
      msg += " [" + to_string(v.kind);
      for (const std::string& id : v.ids) msg += " " + id;
      msg += ": " + v.detail + "]";
    }
    throw std::invalid_argument(msg);
  }
  Skeleton::Raw raw;
  std::vector<detail::ResolvedSquare> squares;
  ValidationReport scratch;
  detail::resolve_input(in, raw, squares, scratch);
  raw.squares.reserve(squares.size());
  for (const auto& q : squares) raw.squares.push_back({q.x, q.y, q.u, q.w});
  return Skeleton(std::move(raw));
}

}  // namespace kgraph
