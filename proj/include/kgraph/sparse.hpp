#pragma once
// sparse.hpp — exact integer sparse matrices for operator families.
//
// All arithmetic is int64 with no tolerance anywhere: equality is equality.
// Matrices are row-major maps column -> value with zeros never stored.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kgraph {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int64_t get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? 0 : it->second;
  }

  void set(std::size_t r, std::size_t c, int64_t v) {
    check_index(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }

  const std::map<std::size_t, int64_t>& row(std::size_t r) const { return data_.at(r); }

  bool is_zero() const {
    for (const auto& row : data_)
      if (!row.empty()) return false;
    return true;
  }

  int64_t trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    int64_t t = 0;
    for (std::size_t r = 0; r < rows_; ++r) t += get(r, r);
    return t;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
  }

  IntMatrix transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) out.set(c, r, v);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (const auto& [k, av] : a.data_[r])
        for (const auto& [c, bv] : b.data_[k]) {
          int64_t cur = out.get(r, c) + av * bv;
          out.set(r, c, cur);
        }
    return out;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("operator+: shape mismatch");
    IntMatrix out = a;
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (const auto& [c, v] : b.data_[r]) out.set(r, c, out.get(r, c) + v);
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("operator-: shape mismatch");
    IntMatrix out = a;
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (const auto& [c, v] : b.data_[r]) out.set(r, c, out.get(r, c) - v);
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Symmetric idempotent; rank is then the trace.
  bool is_projection() const {
    if (rows_ != cols_) return false;
    return *this == transpose() && *this * *this == *this;
  }

  // 0/1 entries with at most one per row and per column.
  bool is_partial_permutation() const {
    std::vector<bool> col_used(cols_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (data_[r].size() > 1) return false;
      for (const auto& [c, v] : data_[r]) {
        if (v != 1) return false;
        if (col_used[c]) return false;
        col_used[c] = true;
      }
    }
    return true;
  }

  struct Difference {
    std::size_t row, col;
    int64_t lhs, rhs;
    friend bool operator==(const Difference&, const Difference&) = default;
  };

  // First position (row-major) where the two matrices disagree.
  static std::optional<Difference> first_difference(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      return Difference{0, 0, static_cast<int64_t>(a.rows_), static_cast<int64_t>(b.rows_)};
    for (std::size_t r = 0; r < a.rows_; ++r) {
      auto ia = a.data_[r].begin(), ib = b.data_[r].begin();
      while (ia != a.data_[r].end() || ib != b.data_[r].end()) {
        if (ib == b.data_[r].end() || (ia != a.data_[r].end() && ia->first < ib->first)) {
          return Difference{r, ia->first, ia->second, 0};
        }
        if (ia == a.data_[r].end() || ib->first < ia->first) {
          return Difference{r, ib->first, 0, ib->second};
        }
        if (ia->second != ib->second) return Difference{r, ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
      }
    }
    return std::nullopt;
  }

private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix: index out of range");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::size_t, int64_t>> data_;
};

}  // namespace kgraph
