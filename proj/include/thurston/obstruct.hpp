#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thurston/matrix.hpp"
#include "thurston/slopes.hpp"
#include "thurston/specmat.hpp"

namespace thurston {

enum class TargetKind { Class, Inessential, Untracked };

/// One component of the preimage of a curve class.
struct PreimageComponent {
  unsigned degree = 1;
  TargetKind kind = TargetKind::Class;
  std::string target;  // class id when kind == Class
};

/// The two complementary sides of a curve, as sets of marked points.
using Partition = std::pair<std::vector<std::string>, std::vector<std::string>>;

struct CurveClass {
  std::string id;
  std::optional<Partition> partition;
  std::vector<PreimageComponent> preimages;
};

/// User-declared pullback combinatorics of pairwise disjoint, pairwise
/// non-homotopic curve classes. Homotopy is identity of class ids.
class CurveTable {
 public:
  /// Throws InputError for unknown ids and labels, PreconditionError for a
  /// row whose degrees exceed the map degree or an inessential partition.
  static CurveTable create(unsigned degree, std::vector<std::string> marked_points, std::vector<CurveClass> classes);

  unsigned degree() const noexcept { return degree_; }
  const std::vector<std::string>& marked_points() const noexcept { return marked_points_; }
  const std::vector<CurveClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  /// Throws InputError for an unknown id.
  std::size_t index_of(const std::string& id) const;
  std::vector<std::string> all_ids() const;
  bool has_untracked() const;

 private:
  unsigned degree_ = 0;
  std::vector<std::string> marked_points_;
  std::vector<CurveClass> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Class ids; the order fixes the row/column order of the Thurston matrix.
using Multicurve = std::vector<std::string>;

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

NonnegMatrix thurston_matrix(const CurveTable& table, const Multicurve& gamma);

Verdict is_invariant(const CurveTable& table, const Multicurve& gamma);
Verdict is_completely_invariant(const CurveTable& table, const Multicurve& gamma);

struct MulticurveClass {
  SpectralClass spectral;
  bool obstruction = false;  // lambda >= 1
};

MulticurveClass classify_multicurve(const CurveTable& table, const Multicurve& gamma);

/// Positive v with M_Gamma v >= v, when Gamma is a simple obstruction.
std::optional<std::vector<Rational>> is_simple_obstruction(const CurveTable& table, const Multicurve& gamma);

/// Largest simple sub-obstruction of Gamma (the union of all of them).
/// Throws PreconditionError when Gamma is not an obstruction.
Multicurve extract_simple_core(const CurveTable& table, const Multicurve& gamma);

/// Simple cycles of the degree-one pullback digraph, each rotated to start
/// at its smallest class index; sorted.
std::vector<Multicurve> find_levy_cycles(const CurveTable& table);

inline constexpr std::size_t default_subset_cap = 12;

/// Every minimal obstruction, by increasing size then lexicographic index
/// order. Throws ResourceLimitError when the table has more classes than
/// subset_cap.
std::vector<Multicurve> find_minimal_obstructions(const CurveTable& table, std::size_t subset_cap = default_subset_cap);

/// First-return map of one periodic component of the pinched surface.
struct DecompositionComponent {
  enum class Kind { Homeomorphism, TwoTwoTwoTwo, Other };
  std::string label;
  int marked_points = 0;
  Kind kind = Kind::Homeomorphism;
  IntMatrix2 action;                 // TwoTwoTwoTwo only
  std::optional<CurveTable> table;   // required for Other, optional for TwoTwoTwoTwo
};

const char* to_string(DecompositionComponent::Kind kind);

enum class CandidateVerdict { Accept, Reject, Inconclusive };
const char* to_string(CandidateVerdict v);

struct ComponentVerdict {
  std::string label;
  DecompositionComponent::Kind kind;
  CandidateVerdict verdict;
  std::string reason;
  std::optional<CanonicalSlope> canonical_slope;  // TwoTwoTwoTwo rejections
  std::optional<Multicurve> obstruction;          // counterexample from the component table
};

struct CanonicalCheck {
  CandidateVerdict verdict = CandidateVerdict::Inconclusive;
  std::vector<std::string> reasons;
  MulticurveClass candidate_class;
  std::optional<std::vector<Rational>> simple_certificate;
  std::optional<Multicurve> non_simple_witness;  // closed sub-multicurve with lambda < 1
  Verdict completely_invariant = Verdict::Unknown;
  std::vector<ComponentVerdict> components;
};

/// Checks a candidate against the topological characterisation of the
/// canonical obstruction. Verdicts are relative to the supplied tables.
CanonicalCheck check_canonical_candidate(const CurveTable& table, const Multicurve& gamma,
                                         std::span<const DecompositionComponent> decomposition);

struct ObstructionReport {
  Multicurve multicurve;
  NonnegMatrix matrix;
  MulticurveClass classification;
  Verdict invariant = Verdict::Unknown;
  Verdict completely_invariant = Verdict::Unknown;
  std::optional<std::vector<Rational>> simple_certificate;
  std::optional<std::vector<std::size_t>> non_simple_witness;
  std::optional<Multicurve> simple_core;
  std::vector<Multicurve> levy_cycles;
  std::vector<Multicurve> minimal_obstructions;
};

/// Full analysis of one multicurve (all classes when gamma is empty).
ObstructionReport analyze_table(const CurveTable& table, const Multicurve& gamma,
                                std::size_t subset_cap = default_subset_cap);

}  // namespace thurston
