#include "thurston/polynomial.hpp"

#include <stdexcept>

namespace thurston {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / divisor.leading();
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

Polynomial characteristic_polynomial(const NonnegMatrix& m) {
  // c_n = 1; N_1 = I; c_{n-k} = -tr(M N_k) / k; N_{k+1} = M N_k + c_{n-k} I.
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  if (n == 0) return Polynomial(std::move(c));

  std::vector<Rational> acc(n * n);  // N_k, row-major
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  std::vector<Rational> prod(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t t = 0; t < n; ++t)
          if (sgn(m(i, t)) != 0) s += m(i, t) * acc[t * n + j];
        prod[i * n + j] = s;
      }
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i * n + i];
    c[n - k] = -tr / static_cast<long>(k);
    acc = prod;
    for (std::size_t i = 0; i < n; ++i) acc[i * n + i] += c[n - k];
  }
  return Polynomial(std::move(c));
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  chain_.push_back(squarefree);
  Polynomial next = squarefree.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const std::size_t k = chain_.size();
    Polynomial r = chain_[k - 2].remainder(chain_[k - 1]);
    std::vector<Rational> neg = r.coefficients();
    for (auto& x : neg) x = -x;
    next = Polynomial(std::move(neg));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p(x)));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_variations(signs);
}

}  // namespace thurston
