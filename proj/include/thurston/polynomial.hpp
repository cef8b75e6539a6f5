#pragma once

#include <vector>

#include "thurston/matrix.hpp"
#include "thurston/rational.hpp"

namespace thurston {

/// Dense univariate polynomial over Q; coefficients stored lowest degree first,
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial remainder(const Polynomial& divisor) const { return divmod(divisor).second; }

  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(xI - M), via the Faddeev-LeVerrier recurrence in exact arithmetic.
Polynomial characteristic_polynomial(const NonnegMatrix& m);

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  /// Sign variations at x, zeros skipped. Equals the count just to the right
  /// of x when x is a root.
  int variations_at(const Rational& x) const;
  int variations_at_infinity() const;

  /// Number of distinct real roots in the open ray (x, +inf).
  int roots_above(const Rational& x) const { return variations_at(x) - variations_at_infinity(); }

  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace thurston
