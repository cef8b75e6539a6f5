#include "thurston/matrix.hpp"

#include <string>

#include "thurston/errors.hpp"

namespace thurston {

NonnegMatrix NonnegMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  NonnegMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (sgn(rows[i][j]) < 0)
        throw InputError("negative matrix entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
  NonnegMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<Rational>> NonnegMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

NonnegMatrix NonnegMatrix::principal(std::span<const std::size_t> indices) const {
  NonnegMatrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) m.at(a, b) = (*this)(indices[a], indices[b]);
  return m;
}

NonnegMatrix NonnegMatrix::operator*(const NonnegMatrix& rhs) const {
  NonnegMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& lhs_ik = (*this)(i, k);
      if (sgn(lhs_ik) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += lhs_ik * rhs(k, j);
    }
  return out;
}

NonnegMatrix NonnegMatrix::power(std::size_t k) const {
  NonnegMatrix result = identity(n_);
  NonnegMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Rational> NonnegMatrix::apply(std::span<const Rational> v) const {
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational NonnegMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Rational NonnegMatrix::max_row_sum() const {
  Rational best;
  for (std::size_t i = 0; i < n_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
    if (s > best) best = s;
  }
  return best;
}

bool NonnegMatrix::is_positive() const {
  for (const auto& e : entries_)
    if (sgn(e) <= 0) return false;
  return true;
}

std::vector<std::vector<bool>> NonnegMatrix::support() const {
  std::vector<std::vector<bool>> s(n_, std::vector<bool>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s[i][j] = has_edge(i, j);
  return s;
}

}  // namespace thurston
