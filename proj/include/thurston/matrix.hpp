#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thurston/rational.hpp"

namespace thurston {

/// Square matrix of non-negative rationals, stored row-major.
///
/// Entry (i, j) > 0 is read as the support-digraph edge i -> j. Values are
/// immutable once constructed; every operation returns a new matrix.
class NonnegMatrix {
 public:
  NonnegMatrix() = default;

  /// n x n zero matrix.
  explicit NonnegMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  /// Throws InputError when the rows are ragged or an entry is negative.
  static NonnegMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static NonnegMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return sgn(entries_[i * n_ + j]) > 0; }

  std::vector<std::vector<Rational>> rows() const;

  /// Principal submatrix on the given (ordered) index list.
  NonnegMatrix principal(std::span<const std::size_t> indices) const;

  /// P^{-1} M P for the reindexing `order`: result(a, b) = M(order[a], order[b]).
  NonnegMatrix permuted(std::span<const std::size_t> order) const { return principal(order); }

  NonnegMatrix operator*(const NonnegMatrix& rhs) const;
  NonnegMatrix power(std::size_t k) const;

  std::vector<Rational> apply(std::span<const Rational> v) const;

  Rational trace() const;
  Rational max_row_sum() const;
  bool is_positive() const;

  /// 0/1 support pattern.
  std::vector<std::vector<bool>> support() const;

  friend bool operator==(const NonnegMatrix& a, const NonnegMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace thurston
