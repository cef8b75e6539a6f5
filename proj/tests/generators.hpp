#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "thurston/matrix.hpp"

namespace gen {

using thurston::NonnegMatrix;
using thurston::Rational;

inline Rational pick(std::mt19937_64& rng, const std::vector<Rational>& values) {
  std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
  return values[d(rng)];
}

inline const std::vector<Rational>& small_rationals() {
  static const std::vector<Rational> v = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                          Rational(1),    Rational(3, 2), Rational(2),    Rational(3)};
  return v;
}

/// Random non-negative matrix with the given fill probability.
inline NonnegMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double density,
                                  const std::vector<Rational>& values = small_rationals()) {
  std::bernoulli_distribution fill(density);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& row : rows)
    for (auto& e : row)
      if (fill(rng)) e = pick(rng, values);
  return NonnegMatrix::from_rows(rows);
}

/// Random 0/1 matrix whose support contains a random Hamiltonian cycle, so it
/// is irreducible.
inline NonnegMatrix random_irreducible01(std::mt19937_64& rng, std::size_t n, double density, bool positive_diagonal) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < n; ++i) rows[order[i]][order[(i + 1) % n]] = 1;
  std::bernoulli_distribution fill(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && fill(rng)) rows[i][j] = 1;
  if (positive_diagonal) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    const std::size_t k = d(rng);
    rows[k][k] = 1;
  }
  return NonnegMatrix::from_rows(rows);
}

/// Irreducible matrix with random positive rational weights on its support.
inline NonnegMatrix random_irreducible(std::mt19937_64& rng, std::size_t n, double density) {
  const NonnegMatrix s = random_irreducible01(rng, n, density, false);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.has_edge(i, j)) rows[i][j] = pick(rng, small_rationals());
  return NonnegMatrix::from_rows(rows);
}

inline NonnegMatrix scaled(const NonnegMatrix& m, const Rational& c) {
  auto rows = m.rows();
  for (auto& row : rows)
    for (auto& e : row) e *= c;
  return NonnegMatrix::from_rows(rows);
}

/// Rows rescaled to sum to one (zero rows left alone).
inline NonnegMatrix row_stochastic(const NonnegMatrix& m) {
  auto rows = m.rows();
  for (auto& row : rows) {
    Rational s;
    for (const auto& e : row) s += e;
    if (sgn(s) != 0)
      for (auto& e : row) e /= s;
  }
  return NonnegMatrix::from_rows(rows);
}

inline NonnegMatrix parse(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    std::vector<Rational> row;
    for (const char* e : r) row.push_back(thurston::parse_rational(e));
    out.push_back(std::move(row));
  }
  return NonnegMatrix::from_rows(out);
}

}  // namespace gen
