#include "thurston/orbifold.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "thurston/errors.hpp"

namespace thurston {

Rational Weight::defect() const {
  if (infinite_) return Rational(1);
  return Rational(1) - Rational(1, static_cast<unsigned long>(value_));
}

std::string Weight::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Weight Weight::parse(const std::string& text) {
  if (text == "inf" || text == "∞") return infinity();
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && v >= 1) return finite(v);
  } catch (const std::exception&) {
  }
  throw InputError("malformed ramification weight '" + text + "'");
}

CriticalPortrait CriticalPortrait::create(unsigned degree, std::vector<PortraitPoint> points) {
  CriticalPortrait p;
  if (degree < 2) throw PreconditionError("portrait degree must be >= 2, got " + std::to_string(degree));
  p.degree_ = degree;

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id.empty()) throw InputError("points[" + std::to_string(i) + "].id: empty label");
    if (!p.index_.emplace(points[i].id, i).second)
      throw InputError("points[" + std::to_string(i) + "].id: duplicate label '" + points[i].id + "'");
    if (points[i].local_degree < 1)
      throw InputError("points[" + std::to_string(i) + "].local_degree: must be >= 1");
  }
  p.image_.resize(points.size());
  p.preimages_.assign(points.size(), {});
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto it = p.index_.find(points[i].image);
    if (it == p.index_.end())
      throw InputError("points[" + std::to_string(i) + "].image: unknown point '" + points[i].image + "'");
    p.image_[i] = it->second;
    p.preimages_[it->second].push_back(i);
  }

  unsigned long total_ramification = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    const auto& img = points[p.image_[i]];
    if (pt.local_degree > degree)
      throw PreconditionError("point '" + pt.id + "': local degree exceeds map degree");
    if (pt.marked && !img.marked)
      throw PreconditionError("marked point '" + pt.id + "' maps to unmarked '" + img.id + "'");
    if (pt.local_degree >= 2 && !img.marked)
      throw PreconditionError("critical point '" + pt.id + "' maps to unmarked '" + img.id + "'");
    total_ramification += pt.local_degree - 1;
  }
  if (total_ramification > 2UL * degree - 2)
    throw PreconditionError("total ramification " + std::to_string(total_ramification) + " exceeds 2d-2 = " +
                            std::to_string(2UL * degree - 2));
  for (std::size_t x = 0; x < points.size(); ++x) {
    unsigned long fiber = 0;
    for (std::size_t y : p.preimages_[x]) fiber += points[y].local_degree;
    if (fiber > degree)
      throw PreconditionError("fiber over '" + points[x].id + "' has total degree " + std::to_string(fiber) +
                              " > " + std::to_string(degree));
  }
  p.points_ = std::move(points);
  return p;
}

std::optional<std::size_t> CriticalPortrait::find(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw ResourceLimitError("ramification weight overflows 64 bits");
  return out;
}

// Points lying on a periodic cycle of the portrait's functional graph that
// passes through a critical point.
std::vector<bool> critical_cycles(const CriticalPortrait& portrait) {
  const std::size_t n = portrait.size();
  std::vector<bool> on_critical_cycle(n, false);
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 finished
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    std::vector<std::size_t> path;
    std::size_t v = s;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = portrait.image_of(v);
    }
    if (state[v] == 1) {
      const auto start = std::find(path.begin(), path.end(), v);
      const bool critical = std::any_of(start, path.end(), [&](std::size_t u) {
        return portrait.points()[u].local_degree >= 2;
      });
      if (critical)
        for (auto it = start; it != path.end(); ++it) on_critical_cycle[*it] = true;
    }
    for (std::size_t u : path) state[u] = 2;
  }
  return on_critical_cycle;
}

}  // namespace

std::vector<Weight> ramification_function(const CriticalPortrait& portrait) {
  const std::size_t n = portrait.size();
  const auto& pts = portrait.points();
  const std::vector<bool> infinite = critical_cycles(portrait);

  std::vector<std::uint64_t> v(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!pts[x].marked || infinite[x]) continue;
      std::uint64_t next = v[x];
      for (std::size_t y : portrait.preimages_of(x)) {
        if (infinite[y]) continue;  // only preimages on the same cycle, handled above
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(v[y], std::uint64_t{pts[y].local_degree}, &term))
          throw ResourceLimitError("ramification weight overflows 64 bits");
        next = checked_lcm(next, term);
      }
      if (next != v[x]) {
        v[x] = next;
        changed = true;
      }
    }
  }

  std::vector<Weight> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) out.push_back(infinite[x] ? Weight::infinity() : Weight::finite(v[x]));
  return out;
}

Rational euler_characteristic(std::span<const Weight> weights) {
  Rational chi(2);
  for (const auto& w : weights) chi -= w.defect();
  return chi;
}

const char* to_string(OrbifoldClass cls) {
  switch (cls) {
    case OrbifoldClass::Hyperbolic: return "hyperbolic";
    case OrbifoldClass::Parabolic: return "parabolic";
    case OrbifoldClass::Exceptional: return "exceptional";
  }
  return "?";
}

const char* to_string(ParabolicSignature sig) {
  switch (sig) {
    case ParabolicSignature::InfInf: return "(inf,inf)";
    case ParabolicSignature::TwoTwoInf: return "(2,2,inf)";
    case ParabolicSignature::TwoFourFour: return "(2,4,4)";
    case ParabolicSignature::TwoThreeSix: return "(2,3,6)";
    case ParabolicSignature::ThreeThreeThree: return "(3,3,3)";
    case ParabolicSignature::TwoTwoTwoTwo: return "(2,2,2,2)";
  }
  return "?";
}

std::vector<Weight> weights_of(ParabolicSignature sig) {
  const Weight inf = Weight::infinity();
  const auto w = [](std::uint64_t v) { return Weight::finite(v); };
  switch (sig) {
    case ParabolicSignature::InfInf: return {inf, inf};
    case ParabolicSignature::TwoTwoInf: return {w(2), w(2), inf};
    case ParabolicSignature::TwoFourFour: return {w(2), w(4), w(4)};
    case ParabolicSignature::TwoThreeSix: return {w(2), w(3), w(6)};
    case ParabolicSignature::ThreeThreeThree: return {w(3), w(3), w(3)};
    case ParabolicSignature::TwoTwoTwoTwo: return {w(2), w(2), w(2), w(2)};
  }
  return {};
}

std::span<const ParabolicSignature> all_parabolic_signatures() {
  static constexpr std::array<ParabolicSignature, 6> all = {
      ParabolicSignature::InfInf,      ParabolicSignature::TwoTwoInf,       ParabolicSignature::TwoFourFour,
      ParabolicSignature::TwoThreeSix, ParabolicSignature::ThreeThreeThree, ParabolicSignature::TwoTwoTwoTwo};
  return all;
}

OrbifoldSignature classify_weights(std::vector<Weight> weights) {
  OrbifoldSignature sig;
  std::erase_if(weights, [](const Weight& w) { return !w.is_infinite() && w.value() <= 1; });
  std::sort(weights.begin(), weights.end());
  sig.weights = std::move(weights);
  sig.chi = euler_characteristic(sig.weights);

  const int s = sgn(sig.chi);
  if (s < 0) {
    sig.orbifold_class = OrbifoldClass::Hyperbolic;
  } else if (s == 0) {
    sig.orbifold_class = OrbifoldClass::Parabolic;
    for (ParabolicSignature candidate : all_parabolic_signatures())
      if (weights_of(candidate) == sig.weights) sig.parabolic = candidate;
    if (!sig.parabolic) sig.warnings.push_back("chi = 0 but the weights match none of the six Euclidean signatures");
  } else {
    sig.orbifold_class = OrbifoldClass::Exceptional;
    sig.warnings.push_back("chi > 0: not the orbifold of a postcritically finite cover; check the portrait");
  }
  return sig;
}

OrbifoldSignature classify_orbifold(const CriticalPortrait& portrait) {
  return classify_weights(ramification_function(portrait));
}

bool is_2222(const CriticalPortrait& portrait) {
  const OrbifoldSignature sig = classify_orbifold(portrait);
  return sig.parabolic == ParabolicSignature::TwoTwoTwoTwo;
}

}  // namespace thurston
