#pragma once
// degree.hpp — degree vectors in N^k with the componentwise lattice order.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgraph {

class Degree {
public:
  Degree() = default;
  explicit Degree(std::size_t k) : c_(k, 0) {}
  Degree(std::initializer_list<int32_t> xs) : c_(xs) { check_nonnegative(); }
  explicit Degree(std::vector<int32_t> xs) : c_(std::move(xs)) { check_nonnegative(); }

  // e_i, zero-based coordinate.
  static Degree unit(std::size_t k, std::size_t i) {
    if (i >= k) throw std::invalid_argument("Degree::unit: coordinate out of range");
    Degree d(k);
    d.c_[i] = 1;
    return d;
  }

  std::size_t rank() const { return c_.size(); }
  int32_t operator[](std::size_t i) const { return c_.at(i); }
  int32_t& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<int32_t>& coords() const { return c_; }

  // |n|: sum of coordinates.
  int64_t total() const { return std::accumulate(c_.begin(), c_.end(), int64_t{0}); }
  bool is_zero() const {
    for (int32_t x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Degree&, const Degree&) = default;
  // Lexicographic; used only for deterministic container ordering.
  friend auto operator<=>(const Degree&, const Degree&) = default;

private:
  void check_nonnegative() const {
    for (int32_t x : c_)
      if (x < 0) throw std::invalid_argument("Degree: negative coordinate");
  }
  std::vector<int32_t> c_;
};

inline void require_same_rank(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("Degree: rank mismatch");
}

// Componentwise partial order m <= n.
inline bool leq(const Degree& a, const Degree& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Degree operator+(const Degree& a, const Degree& b) {
  require_same_rank(a, b);
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Checked difference; defined only when b <= a.
inline Degree operator-(const Degree& a, const Degree& b) {
  if (!leq(b, a)) throw std::invalid_argument("Degree: subtraction would go negative");
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Componentwise max (lattice join m ∨ n).
inline Degree join(const Degree& a, const Degree& b) {
  require_same_rank(a, b);
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

// Componentwise min (lattice meet m ∧ n).
inline Degree meet(const Degree& a, const Degree& b) {
  require_same_rank(a, b);
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

// (a - b) ∨ 0, total on any pair of equal rank.
inline Degree monus(const Degree& a, const Degree& b) {
  require_same_rank(a, b);
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

inline std::string to_string(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  s += ")";
  return s;
}

// All m with 0 <= m <= n, in lexicographic order.
inline std::vector<Degree> degrees_leq(const Degree& n) {
  std::vector<Degree> out;
  Degree cur(n.rank());
  while (true) {
    out.push_back(cur);
    std::size_t i = n.rank();
    while (i > 0) {
      --i;
      if (cur[i] < n[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n.rank(); ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (n.rank() == 0) return out;
  }
}

}  // namespace kgraph
