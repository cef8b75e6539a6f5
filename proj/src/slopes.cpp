#include "thurston/slopes.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

#include "thurston/errors.hpp"
#include "thurston/parallel.hpp"

namespace thurston {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("slope arithmetic overflows 64 bits");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("slope arithmetic overflows 64 bits");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ResourceLimitError("slope arithmetic overflows 64 bits");
  return r;
}

// Largest s with s*s <= n, or -1 when n is not a perfect square.
std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s * s == n ? s : -1;
}

}  // namespace

Slope Slope::from_vector(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw InputError("slope (0,0) is not a primitive class");
  const std::int64_t g = std::gcd(p, q);  // std::gcd returns |gcd|
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope(p, q);
}

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::array<std::int64_t, 2> IntMatrix2::apply(std::array<std::int64_t, 2> v) const {
  return {add(mul(m[0][0], v[0]), mul(m[0][1], v[1])), add(mul(m[1][0], v[0]), mul(m[1][1], v[1]))};
}

TorusQuotientMap TorusQuotientMap::normalize(const IntMatrix2& raw, int marked_points) {
  if (marked_points != 4)
    throw PreconditionError("torus-quotient analysis needs exactly four marked points, got " +
                            std::to_string(marked_points));
  for (const auto& row : raw.m)
    for (std::int64_t e : row)
      if (e == std::numeric_limits<std::int64_t>::min()) throw ResourceLimitError("matrix entry out of range");
  add(raw.m[0][0], raw.m[1][1]);
  const std::int64_t det = sub(mul(raw.m[0][0], raw.m[1][1]), mul(raw.m[0][1], raw.m[1][0]));
  if (det < 2)
    throw PreconditionError("homology action must have determinant >= 2 (degree of the cover), got " +
                            std::to_string(det));
  TorusQuotientMap map;
  map.a_ = raw.trace() < 0 ? raw.negated() : raw;
  map.degree_ = det;
  return map;
}

SlopePullback pullback_slope(const TorusQuotientMap& map, const Slope& v) {
  // A w = (det / g) v for w = adj(A) v / g.
  const auto u = map.matrix().adjugate().apply(v.vector());
  const std::int64_t g = std::gcd(u[0], u[1]);
  return {Slope::from_vector(u[0], u[1]), g, map.degree() / g};
}

Rational slope_multiplier(const TorusQuotientMap& map, const Slope& v) {
  const SlopePullback pb = pullback_slope(map, v);
  if (pb.target != v) return Rational(0);
  Rational r(pb.component_count, pb.component_degree);
  r.canonicalize();
  return r;
}

const char* to_string(EigenClassification::Kind kind) {
  switch (kind) {
    case EigenClassification::Kind::TwoDistinctIntegers: return "TwoDistinctIntegers";
    case EigenClassification::Kind::EqualIntegers: return "EqualIntegers";
    case EigenClassification::Kind::NonIntegerOrComplex: return "NonIntegerOrComplex";
  }
  return "?";
}

EigenClassification eigenvalue_classification(const TorusQuotientMap& map) {
  const std::int64_t tr = map.matrix().trace();
  const std::int64_t disc = sub(mul(tr, tr), mul(4, map.degree()));
  const std::int64_t s = exact_sqrt(disc);
  if (s < 0 || (tr + s) % 2 != 0) return {EigenClassification::Kind::NonIntegerOrComplex};
  if (s == 0) return {EigenClassification::Kind::EqualIntegers, tr / 2, tr / 2};
  return {EigenClassification::Kind::TwoDistinctIntegers, (tr - s) / 2, (tr + s) / 2};
}

std::optional<CanonicalSlope> canonical_obstruction_2222(const TorusQuotientMap& map) {
  const EigenClassification ec = eigenvalue_classification(map);
  if (ec.kind != EigenClassification::Kind::TwoDistinctIntegers) return std::nullopt;

  // A - d1 I has rank one; either row gives the kernel direction.
  const auto& a = map.matrix().m;
  const std::int64_t r00 = a[0][0] - ec.d1, r01 = a[0][1];
  const std::int64_t r10 = a[1][0], r11 = a[1][1] - ec.d1;
  const Slope slope = (r00 != 0 || r01 != 0) ? Slope::from_vector(r01, -r00) : Slope::from_vector(r11, -r10);

  Rational multiplier(ec.d2, ec.d1);
  multiplier.canonicalize();
  return CanonicalSlope{slope, multiplier, ec.d1, ec.d2};
}

SlopeOrbit orbit_of_slope(const TorusQuotientMap& map, const Slope& start, std::size_t max_steps) {
  if (max_steps == 0) throw PreconditionError("orbit_of_slope: max_steps must be >= 1");
  SlopeOrbit orbit{start, {}, std::nullopt, 0};
  std::vector<Slope> seen{start};
  Slope current = start;
  while (orbit.steps.size() < max_steps) {
    const SlopePullback pb = pullback_slope(map, current);
    orbit.steps.push_back({pb.target, pb.component_count, pb.component_degree});
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] == pb.target) {
        orbit.cycle_start = i;
        orbit.cycle_length = seen.size() - i;
        return orbit;
      }
    seen.push_back(pb.target);
    current = pb.target;
  }
  return orbit;
}

std::vector<Slope> slopes_in_box(std::int64_t bound) {
  if (bound < 1) throw PreconditionError("slope search bound must be >= 1");
  std::set<Slope> out;
  for (std::int64_t q = 0; q <= bound; ++q)
    for (std::int64_t p = -bound; p <= bound; ++p)
      if ((p != 0 || q != 0) && std::gcd(p, q) == 1) out.insert(Slope::from_vector(p, q));
  return {out.begin(), out.end()};
}

std::vector<FixedSlope> find_fixed_slopes(const TorusQuotientMap& map, std::int64_t bound) {
  const std::vector<Slope> box = slopes_in_box(bound);
  std::vector<std::optional<FixedSlope>> hits(box.size());
  parallel_for(box.size(), [&](std::size_t i) {
    const SlopePullback pb = pullback_slope(map, box[i]);
    if (pb.target != box[i]) return;
    Rational r(pb.component_count, pb.component_degree);
    r.canonicalize();
    hits[i] = FixedSlope{box[i], r};
  });
  std::vector<FixedSlope> out;
  for (auto& h : hits)
    if (h) out.push_back(std::move(*h));
  return out;
}

std::optional<FixedSlope> find_obstruction_by_search(const TorusQuotientMap& map, std::int64_t bound) {
  for (auto& fixed : find_fixed_slopes(map, bound))
    if (fixed.multiplier > 1) return fixed;
  return std::nullopt;
}

}  // namespace thurston
