#pragma once
// path.hpp — morphisms of the category presented by a skeleton.
//
// A Path is stored in color-sorted normal form: the edge word read from the
// range end, with all color-1 edges first, then color-2, and so on. Two
// morphisms are equal iff their normal forms are identical, so Path equality
// is plain field equality. Adjacent mixed-color edges are reordered through
// the skeleton's squares; completeness plus the cube condition make the
// result independent of swap order.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

struct Path {
  int32_t range = -1;           // vertex index
  std::vector<int32_t> edges;   // edge indexes, color-sorted normal form

  bool is_vertex() const { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

inline Path vertex_path(int32_t v) { return Path{v, {}}; }

inline int32_t source_of(const Skeleton& s, const Path& p) {
  return p.edges.empty() ? p.range : s.edge(p.edges.back()).source;
}

inline Degree degree_of(const Skeleton& s, const Path& p) {
  Degree d(s.rank());
  for (int32_t e : p.edges) ++d[static_cast<std::size_t>(s.edge(e).color - 1)];
  return d;
}

inline std::string display(const Skeleton& s, const Path& p) {
  if (p.edges.empty()) return s.vertex_name(p.range);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += s.edge(p.edges[i]).id;
  }
  return out;
}

namespace detail {

// Swap the adjacent pair at position i into color order. Pre: colors differ.
inline void swap_adjacent(const Skeleton& s, std::vector<int32_t>& w, std::size_t i) {
  auto r = s.swap_pair(w[i], w[i + 1]);
  if (!r)
    throw std::logic_error("normal_form: missing square for composable mixed pair (skeleton not validated?)");
  w[i] = r->first;
  w[i + 1] = r->second;
}

inline void check_word(const Skeleton& s, std::span<const int32_t> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= static_cast<int32_t>(s.edges().size()))
      throw std::invalid_argument("normal_form: edge index out of range");
    if (i + 1 < word.size() && s.edge(word[i]).source != s.edge(word[i + 1]).range)
      throw std::invalid_argument("normal_form: word is not composable");
  }
}

}  // namespace detail

// Normal form of a raw composable edge word. The word's first edge is at the
// range end. For an empty word pass the vertex via `range_if_empty`.
inline Path normal_form(const Skeleton& s, std::span<const int32_t> word,
                        int32_t range_if_empty = -1) {
  if (word.empty()) {
    if (range_if_empty < 0 || range_if_empty >= static_cast<int32_t>(s.vertex_count()))
      throw std::invalid_argument("normal_form: empty word needs a vertex");
    return vertex_path(range_if_empty);
  }
  detail::check_word(s, word);
  std::vector<int32_t> w(word.begin(), word.end());
  // Bubble into color order; each swap fixes one inversion.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (s.edge(w[i]).color > s.edge(w[i + 1]).color) {
        detail::swap_adjacent(s, w, i);
        moved = true;
      }
    }
  }
  return Path{s.edge(w.front()).range, std::move(w)};
}

inline Path normal_form(const Skeleton& s, const std::vector<int32_t>& word,
                        int32_t range_if_empty = -1) {
  return normal_form(s, std::span<const int32_t>(word), range_if_empty);
}

inline Path compose(const Skeleton& s, const Path& a, const Path& b) {
  if (source_of(s, a) != b.range)
    throw std::invalid_argument("compose: source/range mismatch");
  if (a.is_vertex()) return b;
  if (b.is_vertex()) return a;
  std::vector<int32_t> w = a.edges;
  w.insert(w.end(), b.edges.begin(), b.edges.end());
  return normal_form(s, w);
}

namespace detail {

// Split a normal-form word after a prefix of the given degree. Peels colors
// in ascending order; a color-c edge walks left through lower colors via
// squares, so both halves come out color-sorted.
inline std::pair<Path, Path> split_at(const Skeleton& s, const Path& p, const Degree& m) {
  std::vector<int32_t> w = p.edges;
  std::vector<int32_t> prefix;
  for (std::size_t c = 1; c <= s.rank(); ++c) {
    for (int32_t t = 0; t < m[c - 1]; ++t) {
      std::size_t pos = 0;
      while (pos < w.size() && s.edge(w[pos]).color != static_cast<int32_t>(c)) ++pos;
      if (pos == w.size()) throw std::logic_error("split_at: degree exceeds path");
      while (pos > 0) {
        swap_adjacent(s, w, pos - 1);
        --pos;
      }
      prefix.push_back(w.front());
      w.erase(w.begin());
    }
  }
  Path head{p.range, std::move(prefix)};
  Path tail{source_of(s, head), std::move(w)};
  return {std::move(head), std::move(tail)};
}

}  // namespace detail

// λ(m, n) with both endpoints clamped to d(λ). Requires m <= n after
// clamping (componentwise).
inline Path segment(const Skeleton& s, const Path& p, const Degree& m, const Degree& n) {
  Degree d = degree_of(s, p);
  Degree mc = meet(m, d), nc = meet(n, d);
  if (!leq(mc, nc)) throw std::invalid_argument("segment: endpoints not ordered after clamping");
  auto [head, tail] = detail::split_at(s, p, mc);
  (void)head;
  auto [mid, rest] = detail::split_at(s, tail, nc - mc);
  (void)rest;
  return mid;
}

// λ(0, n) clamped.
inline Path prefix(const Skeleton& s, const Path& p, const Degree& n) {
  return segment(s, p, Degree(s.rank()), n);
}

// λ(n, d(λ)) clamped.
inline Path suffix(const Skeleton& s, const Path& p, const Degree& n) {
  return segment(s, p, n, degree_of(s, p));
}

// The vertex λ(n) = r(λ(n, d(λ))), n clamped.
inline int32_t vertex_at(const Skeleton& s, const Path& p, const Degree& n) {
  return source_of(s, prefix(s, p, n));
}

// Inverse of display: a vertex id, an edge id, or edge ids joined by dots.
// The result is in normal form. Throws std::invalid_argument on unknown ids,
// ambiguous single tokens, and non-composable words.
inline Path parse_path(const Skeleton& s, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_path: empty literal");
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    tokens.emplace_back(text.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (tokens.size() == 1) {
    auto v = s.vertex_index(tokens[0]);
    auto e = s.edge_index(tokens[0]);
    if (v && e)
      throw std::invalid_argument("parse_path: '" + tokens[0] + "' names both a vertex and an edge");
    if (v) return vertex_path(*v);
    if (!e) throw std::invalid_argument("parse_path: unknown id '" + tokens[0] + "'");
    return Path{s.edge(*e).range, {*e}};
  }
  std::vector<int32_t> word;
  for (const std::string& t : tokens) {
    auto e = s.edge_index(t);
    if (!e) throw std::invalid_argument("parse_path: unknown edge id '" + t + "'");
    word.push_back(*e);
  }
  return normal_form(s, word);
}

}  // namespace kgraph
