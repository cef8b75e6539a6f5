#include "thurston/lp.hpp"

#include <cassert>
#include <cstddef>

namespace thurston::lp {

namespace {

// Dense tableau for: minimise sum of artificials subject to the equality rows.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // variables, excluding the rhs column
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1)
  std::vector<std::size_t> basis;
  std::vector<Rational> cost;

  Rational& rhs(std::size_t i) { return t[i][cols]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  Rational reduced_cost(std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(cost[basis[i]]) != 0) r -= cost[basis[i]] * t[i][j];
    return r;
  }

  // Bland's rule: lowest-index entering column, lowest-index leaving basic
  // variable among ratio-test ties.
  void solve() {
    for (;;) {
      std::size_t entering = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(reduced_cost(j)) < 0) {
          entering = j;
          break;
        }
      if (entering == cols) return;

      std::size_t leaving = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (sgn(t[i][entering]) <= 0) continue;
        const Rational ratio = t[i][cols] / t[i][entering];
        if (leaving == rows || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always qualifies.
      assert(leaving != rows);
      pivot(leaving, entering);
    }
  }
};

}  // namespace

std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                               const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return std::vector<Rational>(n);

  // Columns: x (n), surplus s (m), artificials (one per row with b_i >= 0).
  std::size_t artificial_count = 0;
  for (const auto& bi : b)
    if (sgn(bi) >= 0) ++artificial_count;

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m + artificial_count;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1));
  tab.basis.assign(m, 0);
  tab.cost.assign(tab.cols, Rational(0));

  std::size_t next_artificial = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    // a_i x - s_i = b_i
    const bool flip = sgn(b[i]) < 0;
    const int sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = a[i][j] * sign;
    tab.t[i][n + i] = -sign;
    tab.rhs(i) = b[i] * sign;
    if (flip) {
      tab.basis[i] = n + i;
    } else {
      tab.t[i][next_artificial] = 1;
      tab.cost[next_artificial] = 1;
      tab.basis[i] = next_artificial++;
    }
  }

  tab.solve();

  Rational objective;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n + m) objective += tab.rhs(i);
  if (sgn(objective) != 0) return std::nullopt;

  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) x[tab.basis[i]] = tab.rhs(i);
  return x;
}

}  // namespace thurston::lp
