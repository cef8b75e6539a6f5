#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thurston/rational.hpp"

namespace thurston {

/// Primitive class in H_1(T, Z) up to sign, normalised to q > 0, or q == 0
/// and p == 1. Ordered by (q, p).
class Slope {
 public:
  /// Divides out gcd(|p|, |q|) and normalises the sign. Throws InputError
  /// for (0, 0).
  static Slope from_vector(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::array<std::int64_t, 2> vector() const { return {p_, q_}; }

  /// "p/q", e.g. "1/0", "-1/1".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

 private:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// 2x2 integer matrix, row-major.
struct IntMatrix2 {
  std::array<std::array<std::int64_t, 2>, 2> m{};

  std::int64_t det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  std::int64_t trace() const { return m[0][0] + m[1][1]; }
  IntMatrix2 adjugate() const { return {{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}}; }
  IntMatrix2 negated() const { return {{{{-m[0][0], -m[0][1]}, {-m[1][0], -m[1][1]}}}}; }
  std::array<std::int64_t, 2> apply(std::array<std::int64_t, 2> v) const;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// Homology action of the torus lift of a (2,2,2,2)-map with exactly four
/// marked points. A and -A describe the same sphere map; the stored
/// representative has trace >= 0.
class TorusQuotientMap {
 public:
  /// Throws PreconditionError when det < 2 or when marked_points != 4.
  static TorusQuotientMap normalize(const IntMatrix2& raw, int marked_points = 4);

  const IntMatrix2& matrix() const noexcept { return a_; }
  std::int64_t degree() const noexcept { return degree_; }

 private:
  IntMatrix2 a_;
  std::int64_t degree_ = 0;
};

/// Essential preimages of the curve of a slope: `component_count` curves, all
/// of slope `target`, each mapped with degree `component_degree`.
struct SlopePullback {
  Slope target;
  std::int64_t component_count;
  std::int64_t component_degree;
};

SlopePullback pullback_slope(const TorusQuotientMap& map, const Slope& v);

/// Thurston matrix entry of the singleton multicurve {v}: g/d when the
/// pullback returns v itself, 0 otherwise.
Rational slope_multiplier(const TorusQuotientMap& map, const Slope& v);

struct EigenClassification {
  enum class Kind { TwoDistinctIntegers, EqualIntegers, NonIntegerOrComplex };
  Kind kind;
  std::int64_t d1 = 0;  // smaller root (or the repeated root)
  std::int64_t d2 = 0;
};

const char* to_string(EigenClassification::Kind kind);

EigenClassification eigenvalue_classification(const TorusQuotientMap& map);

struct CanonicalSlope {
  Slope slope;          // eigen-slope of the smaller eigenvalue
  Rational multiplier;  // d2 / d1
  std::int64_t d1;
  std::int64_t d2;
};

/// The curve in the canonical obstruction, present exactly when the action
/// has two distinct integer eigenvalues.
std::optional<CanonicalSlope> canonical_obstruction_2222(const TorusQuotientMap& map);

struct OrbitStep {
  Slope slope;  // pullback of the previous slope
  std::int64_t component_count;
  std::int64_t component_degree;
};

struct SlopeOrbit {
  Slope start;
  std::vector<OrbitStep> steps;
  /// Index into [start, steps...] where the eventual cycle begins, if seen.
  std::optional<std::size_t> cycle_start;
  std::size_t cycle_length = 0;
};

/// Iterated pullback until a slope repeats or max_steps pullbacks are taken.
/// Throws PreconditionError for max_steps == 0, ResourceLimitError on
/// 64-bit overflow.
SlopeOrbit orbit_of_slope(const TorusQuotientMap& map, const Slope& start, std::size_t max_steps);

struct FixedSlope {
  Slope slope;
  Rational multiplier;
};

/// Normalised slopes with |p|, |q| <= bound, in ascending order.
std::vector<Slope> slopes_in_box(std::int64_t bound);

/// Every slope in the box that pulls back to itself, ascending.
std::vector<FixedSlope> find_fixed_slopes(const TorusQuotientMap& map, std::int64_t bound);

/// First fixed slope in the box whose multiplier exceeds 1.
std::optional<FixedSlope> find_obstruction_by_search(const TorusQuotientMap& map, std::int64_t bound);

}  // namespace thurston
