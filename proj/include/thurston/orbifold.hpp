#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "thurston/rational.hpp"

namespace thurston {

/// Ramification weight, a value in N ∪ {∞}.
class Weight {
 public:
  static Weight finite(std::uint64_t value) { return Weight(value, false); }
  static Weight infinity() { return Weight(0, true); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Undefined for the infinite weight.
  std::uint64_t value() const noexcept { return value_; }

  /// 1 - 1/w, with 1 - 1/∞ = 1.
  Rational defect() const;

  /// Decimal value, or "inf".
  std::string to_string() const;
  static Weight parse(const std::string& text);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  Weight(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
  std::uint64_t value_;
  bool infinite_;
};

struct PortraitPoint {
  std::string id;
  bool marked = false;
  std::string image;
  unsigned local_degree = 1;
};

/// Finite marked dynamics of a branched cover: each listed point with its
/// image and local degree. Marked points form P_f; fibers are read off the
/// dynamics, and unlisted preimages are treated as unramified and unmarked.
class CriticalPortrait {
 public:
  /// Validates the portrait. Throws InputError for structural problems
  /// (duplicate ids, unknown images, local degree 0) and PreconditionError
  /// when the dynamics cannot belong to a postcritically finite cover.
  static CriticalPortrait create(unsigned degree, std::vector<PortraitPoint> points);

  unsigned degree() const noexcept { return degree_; }
  const std::vector<PortraitPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::size_t image_of(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& preimages_of(std::size_t i) const { return preimages_[i]; }
  std::optional<std::size_t> find(const std::string& id) const;

 private:
  unsigned degree_ = 0;
  std::vector<PortraitPoint> points_;
  std::vector<std::size_t> image_;
  std::vector<std::vector<std::size_t>> preimages_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Minimal v_f on the listed points (1 on unmarked points).
std::vector<Weight> ramification_function(const CriticalPortrait& portrait);

/// 2 - sum(1 - 1/w).
Rational euler_characteristic(std::span<const Weight> weights);

enum class OrbifoldClass { Hyperbolic, Parabolic, Exceptional };

/// The six Euclidean signatures.
enum class ParabolicSignature { InfInf, TwoTwoInf, TwoFourFour, TwoThreeSix, ThreeThreeThree, TwoTwoTwoTwo };

const char* to_string(OrbifoldClass cls);
const char* to_string(ParabolicSignature sig);

/// Weights of a parabolic signature, ascending with ∞ last.
std::vector<Weight> weights_of(ParabolicSignature sig);
std::span<const ParabolicSignature> all_parabolic_signatures();

struct OrbifoldSignature {
  std::vector<Weight> weights;  // values > 1, ascending, ∞ last
  Rational chi;
  OrbifoldClass orbifold_class = OrbifoldClass::Hyperbolic;
  std::optional<ParabolicSignature> parabolic;
  std::vector<std::string> warnings;
};

/// Classification of a bare weight multiset (weights equal to 1 are dropped).
OrbifoldSignature classify_weights(std::vector<Weight> weights);
OrbifoldSignature classify_orbifold(const CriticalPortrait& portrait);
bool is_2222(const CriticalPortrait& portrait);

}  // namespace thurston
