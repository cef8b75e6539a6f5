#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "thurston/matrix.hpp"
#include "thurston/polynomial.hpp"
#include "thurston/rational.hpp"

namespace thurston {

enum class SpectralTag { BelowOne, ExactlyOne, AboveOne };

const char* to_string(SpectralTag tag);

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Position of the leading eigenvalue lambda(M) relative to 1, with an interval
/// that contains lambda(M) and lies on the same side of 1 as the tag says
/// (the point [1, 1] for ExactlyOne).
struct SpectralClass {
  SpectralTag tag;
  Interval isolating_interval;
};

/// Strongly connected components of the support digraph, ordered so that the
/// permuted matrix is block lower triangular.
struct BlockStructure {
  std::vector<std::size_t> permutation;  // permutation[k] = original index at position k
  std::vector<std::size_t> block_sizes;
  std::vector<bool> blocks_irreducible;

  /// Original indices of every block, in block order.
  std::vector<std::vector<std::size_t>> blocks() const;
};

/// Exact handle on the leading eigenvalue of a non-negative matrix: the largest
/// real root of its characteristic polynomial.
class LeadingEigenvalue {
 public:
  explicit LeadingEigenvalue(const NonnegMatrix& m);

  /// Exact comparison of lambda(M) with x.
  std::strong_ordering compare(const Rational& x) const;

  /// Interval of width <= width containing lambda(M); collapses to a point
  /// when a bisection midpoint hits lambda exactly.
  Interval refine(const Rational& width) const;

  /// Starting bracket [lo, hi] derived from row sums and the diagonal.
  const Interval& bracket() const { return bracket_; }

 private:
  Interval bisect(Interval iv, const Rational& width, const Rational* separate_from) const;

  std::optional<SturmSequence> sturm_;  // absent for the 0x0 matrix
  Interval bracket_;

  friend SpectralClass spectral_radius_class(const NonnegMatrix& m);
};

BlockStructure scc_partition(const NonnegMatrix& m);

SpectralClass spectral_radius_class(const NonnegMatrix& m);

/// Throws PreconditionError for width <= 0.
Interval leading_eigenvalue_interval(const NonnegMatrix& m, const Rational& width);

/// Strongly connected support digraph on n >= 1 vertices.
bool is_irreducible(const NonnegMatrix& m);
bool is_primitive(const NonnegMatrix& m);

/// gcd of directed cycle lengths. Throws PreconditionError on reducible input
/// or on the cycle-free 1x1 zero matrix.
std::size_t imprimitivity_index(const NonnegMatrix& m);

/// (n-1)^2 + 1.
std::size_t wielandt_bound(std::size_t n);

/// Smallest k <= cap with M^k entrywise positive. cap defaults to the
/// Wielandt bound.
std::optional<std::size_t> power_positive_exponent(const NonnegMatrix& m,
                                                   std::optional<std::size_t> cap = std::nullopt);

struct ImprimitiveDecomposition {
  std::size_t power = 0;                         // k, a multiple of the imprimitivity index
  std::size_t index = 0;                         // h
  std::vector<std::size_t> permutation;          // cyclic classes concatenated
  std::vector<std::vector<std::size_t>> classes; // original indices per class
  std::vector<NonnegMatrix> blocks;              // diagonal blocks of the permuted M^k
  NonnegMatrix permuted_power;                   // P^{-1} M^k P
};

/// Throws PreconditionError on reducible input.
ImprimitiveDecomposition imprimitive_block_decomposition(const NonnegMatrix& m);

/// Some v > 0 with Mv >= v, decided by exact rational LP feasibility.
std::optional<std::vector<Rational>> exists_positive_subinvariant_vector(const NonnegMatrix& m);

/// A nonempty index set S closed under the support digraph (M(i, j) = 0 for
/// i in S, j outside S) whose principal submatrix has lambda < 1, if any.
/// Exists exactly when no positive subinvariant vector does.
std::optional<std::vector<std::size_t>> find_closed_subset_below_one(const NonnegMatrix& m);

/// Sum of M(i, j) * v[j] >= v[i] for every i, exactly.
bool is_subinvariant(const NonnegMatrix& m, std::span<const Rational> v);

}  // namespace thurston
