#include "thurston/specmat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "thurston/errors.hpp"
#include "thurston/lp.hpp"

namespace thurston {

const char* to_string(SpectralTag tag) {
  switch (tag) {
    case SpectralTag::BelowOne: return "BelowOne";
    case SpectralTag::ExactlyOne: return "ExactlyOne";
    case SpectralTag::AboveOne: return "AboveOne";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> BlockStructure::blocks() const {
  std::vector<std::vector<std::size_t>> out;
  std::size_t pos = 0;
  for (std::size_t size : block_sizes) {
    out.emplace_back(permutation.begin() + static_cast<std::ptrdiff_t>(pos),
                     permutation.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
  }
  return out;
}

namespace {

// Tarjan's algorithm; returns the component id of every vertex.
std::vector<std::size_t> strong_components(const NonnegMatrix& m, std::size_t& count) {
  const std::size_t n = m.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0;
  count = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!m.has_edge(v, w)) continue;
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unvisited) visit(v);
  return comp;
}

std::vector<std::size_t> reachable_from(const NonnegMatrix& m, std::span<const std::size_t> sources) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> todo(sources.begin(), sources.end());
  for (std::size_t s : sources) seen[s] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (m.has_edge(v, w) && !seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

// BFS distance from vertex 0; every vertex is reached when m is irreducible.
std::vector<std::size_t> bfs_levels(const NonnegMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> level(n, static_cast<std::size_t>(-1));
  std::queue<std::size_t> q;
  level[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w = 0; w < n; ++w)
      if (m.has_edge(v, w) && level[w] == static_cast<std::size_t>(-1)) {
        level[w] = level[v] + 1;
        q.push(w);
      }
  }
  return level;
}

void require_irreducible(const NonnegMatrix& m, const char* op) {
  if (!is_irreducible(m)) throw PreconditionError(std::string(op) + " requires an irreducible matrix");
}

}  // namespace

BlockStructure scc_partition(const NonnegMatrix& m) {
  const std::size_t n = m.size();
  std::size_t count = 0;
  const std::vector<std::size_t> comp = strong_components(m, count);

  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);  // ascending within

  std::vector<std::vector<bool>> succ(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.has_edge(i, j) && comp[i] != comp[j]) succ[comp[i]][comp[j]] = true;

  // Edges must point from later blocks to earlier ones, so a component is
  // ready once all its successors are placed. Ties: smallest original index.
  BlockStructure out;
  std::vector<bool> placed(count, false);
  for (std::size_t round = 0; round < count; ++round) {
    std::size_t pick = count;
    for (std::size_t c = 0; c < count; ++c) {
      if (placed[c]) continue;
      bool ready = true;
      for (std::size_t d = 0; d < count && ready; ++d)
        if (succ[c][d] && !placed[d]) ready = false;
      if (ready && (pick == count || members[c].front() < members[pick].front())) pick = c;
    }
    placed[pick] = true;
    out.permutation.insert(out.permutation.end(), members[pick].begin(), members[pick].end());
    out.block_sizes.push_back(members[pick].size());
    out.blocks_irreducible.push_back(true);
  }
  return out;
}

LeadingEigenvalue::LeadingEigenvalue(const NonnegMatrix& m) {
  if (m.empty()) {
    bracket_ = {Rational(0), Rational(0)};
    return;
  }
  sturm_.emplace(squarefree_part(characteristic_polynomial(m)));

  // min row sum <= lambda <= max row sum, and lambda >= every diagonal entry.
  Rational lo, hi;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j);
    if (i == 0 || s < lo) lo = s;
    if (s > hi) hi = s;
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m(i, i) > lo) lo = m(i, i);
  bracket_ = {lo, hi};
}

std::strong_ordering LeadingEigenvalue::compare(const Rational& x) const {
  if (!sturm_) return cmp(Rational(0), x) <=> 0;
  if (sturm_->roots_above(x) > 0) return std::strong_ordering::greater;
  if (sgn(sturm_->base()(x)) == 0) return std::strong_ordering::equal;
  return std::strong_ordering::less;
}

Interval LeadingEigenvalue::bisect(Interval iv, const Rational& width, const Rational* separate_from) const {
  if (compare(iv.hi) == 0) return {iv.hi, iv.hi};
  if (compare(iv.lo) == 0) return {iv.lo, iv.lo};
  const auto done = [&] {
    if (iv.width() > width) return false;
    return separate_from == nullptr || !iv.contains(*separate_from);
  };
  while (!done()) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const auto c = compare(mid);
    if (c == 0) return {mid, mid};
    if (c > 0)
      iv.lo = std::move(mid);
    else
      iv.hi = std::move(mid);
  }
  return iv;
}

Interval LeadingEigenvalue::refine(const Rational& width) const { return bisect(bracket_, width, nullptr); }

SpectralClass spectral_radius_class(const NonnegMatrix& m) {
  const LeadingEigenvalue lambda(m);
  const Rational one(1);
  const auto c = lambda.compare(one);
  if (c == 0) return {SpectralTag::ExactlyOne, {one, one}};
  const Interval iv = lambda.bisect(lambda.bracket(), Rational(1, 1024), &one);
  return {c > 0 ? SpectralTag::AboveOne : SpectralTag::BelowOne, iv};
}

Interval leading_eigenvalue_interval(const NonnegMatrix& m, const Rational& width) {
  if (sgn(width) <= 0) throw PreconditionError("interval width must be positive");
  return LeadingEigenvalue(m).refine(width);
}

bool is_irreducible(const NonnegMatrix& m) {
  if (m.empty()) return false;
  std::size_t count = 0;
  strong_components(m, count);
  return count == 1;
}

std::size_t imprimitivity_index(const NonnegMatrix& m) {
  require_irreducible(m, "imprimitivity_index");
  const std::vector<std::size_t> level = bfs_levels(m);
  std::size_t h = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.has_edge(i, j)) {
        const long diff = static_cast<long>(level[i]) + 1 - static_cast<long>(level[j]);
        h = std::gcd(h, static_cast<std::size_t>(std::labs(diff)));
      }
  if (h == 0) throw PreconditionError("imprimitivity_index: support digraph has no cycles");
  return h;
}

bool is_primitive(const NonnegMatrix& m) {
  if (!is_irreducible(m)) return false;
  if (m.size() == 1) return m.has_edge(0, 0);
  return imprimitivity_index(m) == 1;
}

std::size_t wielandt_bound(std::size_t n) { return n == 0 ? 1 : (n - 1) * (n - 1) + 1; }

std::optional<std::size_t> power_positive_exponent(const NonnegMatrix& m, std::optional<std::size_t> cap) {
  const std::size_t n = m.size();
  const std::size_t limit = cap.value_or(wielandt_bound(n));
  if (limit < 1) throw PreconditionError("power_positive_exponent: cap must be >= 1");
  if (n == 0) return std::nullopt;

  const auto base = m.support();
  auto cur = base;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool positive = true;
    for (const auto& row : cur)
      for (bool b : row) positive = positive && b;
    if (positive) return k;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (cur[i][t])
          for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || base[t][j];
    cur = std::move(next);
  }
  return std::nullopt;
}

ImprimitiveDecomposition imprimitive_block_decomposition(const NonnegMatrix& m) {
  require_irreducible(m, "imprimitive_block_decomposition");
  ImprimitiveDecomposition out;
  out.index = imprimitivity_index(m);
  const std::size_t h = out.index;

  const std::vector<std::size_t> level = bfs_levels(m);
  out.classes.assign(h, {});
  for (std::size_t v = 0; v < m.size(); ++v) out.classes[level[v] % h].push_back(v);
  for (const auto& cls : out.classes) out.permutation.insert(out.permutation.end(), cls.begin(), cls.end());

  // Each diagonal block of M^h is primitive, so some power of M^h makes all
  // of them positive within the Wielandt bound.
  const NonnegMatrix step = m.power(h).permuted(out.permutation);
  NonnegMatrix current = step;
  for (std::size_t mult = 1; mult <= wielandt_bound(m.size()); ++mult) {
    std::vector<NonnegMatrix> blocks;
    bool all_positive = true;
    std::size_t offset = 0;
    for (const auto& cls : out.classes) {
      std::vector<std::size_t> idx(cls.size());
      std::iota(idx.begin(), idx.end(), offset);
      offset += cls.size();
      blocks.push_back(current.principal(idx));
      all_positive = all_positive && blocks.back().is_positive();
    }
    if (all_positive) {
      out.power = mult * h;
      out.blocks = std::move(blocks);
      out.permuted_power = std::move(current);
      return out;
    }
    current = current * step;
  }
  throw std::logic_error("imprimitive_block_decomposition: no positive power found");
}

bool is_subinvariant(const NonnegMatrix& m, std::span<const Rational> v) {
  const std::vector<Rational> mv = m.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mv[i] < v[i]) return false;
  return true;
}

std::optional<std::vector<Rational>> exists_positive_subinvariant_vector(const NonnegMatrix& m) {
  const std::size_t n = m.size();
  // Substitute v = 1 + x with x >= 0: (M - I) x >= (I - M) 1.
  std::vector<std::vector<Rational>> a = m.rows();
  std::vector<Rational> b(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] -= 1;
    for (std::size_t j = 0; j < n; ++j) b[i] -= m(i, j);
  }
  auto x = lp::find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  for (auto& xi : *x) xi += 1;
  if (!is_subinvariant(m, *x)) throw std::logic_error("simplex returned an infeasible vector");
  return x;
}

std::optional<std::vector<std::size_t>> find_closed_subset_below_one(const NonnegMatrix& m) {
  // Every closed set is a union of components closed under descendants; the
  // smallest closed set through a component is its descendant closure, and
  // lambda is monotone in principal submatrices.
  for (const auto& block : scc_partition(m).blocks()) {
    std::vector<std::size_t> closure = reachable_from(m, block);
    if (LeadingEigenvalue(m.principal(closure)).compare(Rational(1)) < 0) return closure;
  }
  return std::nullopt;
}

}  // namespace thurston
