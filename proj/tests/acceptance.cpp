// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "families.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "thurston/orbifold.hpp"
#include "thurston/slopes.hpp"
#include "thurston/specmat.hpp"

using namespace thurston;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && secs > limit_seconds) c.require(false, "too slow");
  if (!c.ok) ++failures;
  std::printf("criterion %d %s: %s (%.3f s, limit %.0f s)%s%s\n", id, title, c.ok ? "PASS" : "FAIL", secs,
              limit_seconds, c.detail.empty() ? "" : " - ", c.detail.c_str());
  std::fflush(stdout);
}

TorusQuotientMap tq(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return TorusQuotientMap::normalize(fx::mat(a, b, c, d));
}

Rational pow(const Rational& x, std::size_t k) {
  Rational r(1);
  for (std::size_t i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

int main() {
  setenv("THURSTON_OBSTRUCT_THREADS", "1", 1);

  criterion(1, "signature table", 1, [](Check& c) {
    for (auto sig : all_parabolic_signatures()) {
      c.require(euler_characteristic(weights_of(sig)) == 0, std::string("chi != 0 for ") + to_string(sig));
      c.require(classify_weights(weights_of(sig)).parabolic == sig, std::string("misclassified ") + to_string(sig));
    }
    const auto z2 = CriticalPortrait::create(2, {{"0", true, "0", 2}, {"inf", true, "inf", 2}});
    const auto s1 = classify_orbifold(z2);
    c.require(s1.parabolic == ParabolicSignature::InfInf && s1.chi == 0, "z^2 portrait");

    const auto bas =
        CriticalPortrait::create(2, {{"0", true, "-1", 2}, {"-1", true, "0", 1}, {"inf", true, "inf", 2}});
    const auto s2 = classify_orbifold(bas);
    c.require(s2.orbifold_class == OrbifoldClass::Hyperbolic && s2.chi == -1, "basilica portrait");

    std::vector<PortraitPoint> pts;
    for (const char* x : {"a", "b", "c", "d"}) {
      pts.push_back({x, true, x, 1});
      pts.push_back({std::string("c") + x, false, x, 2});
    }
    const auto s3 = classify_orbifold(CriticalPortrait::create(4, pts));
    c.require(s3.parabolic == ParabolicSignature::TwoTwoTwoTwo && s3.chi == 0, "four fixed points portrait");
  });

  criterion(2, "diagonal maps: canonical eigenslope and multiplier d2/d1", 1, [](Check& c) {
    for (std::int64_t d1 = 2; d1 <= 6; ++d1)
      for (std::int64_t d2 = d1 + 1; d2 <= 6; ++d2) {
        const auto can = canonical_obstruction_2222(tq(d1, 0, 0, d2));
        const std::string tag = "diag(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
        c.require(can.has_value(), tag + ": empty");
        if (!can) continue;
        c.require(can->slope == Slope::from_vector(1, 0), tag + ": wrong slope");
        c.require(can->multiplier == make_rational(d2, d1), tag + ": wrong multiplier");
        c.require(slope_multiplier(tq(d1, 0, 0, d2), can->slope) == make_rational(d2, d1),
                  tag + ": pullback multiplier");
      }
  });

  criterion(3, "shear maps: orbit (-i b, 1) and empty canonical obstruction", 1, [](Check& c) {
    for (std::int64_t d : {2, 3})
      for (std::int64_t b : {1, 2}) {
        const auto map = tq(d, d * b, 0, d);
        const std::string tag = "d=" + std::to_string(d) + " b=" + std::to_string(b);
        const auto orbit = orbit_of_slope(map, Slope::from_vector(0, 1), 10);
        c.require(orbit.steps.size() == 10, tag + ": orbit length");
        for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
          const auto& s = orbit.steps[i];
          c.require(s.slope == Slope::from_vector(-static_cast<std::int64_t>(i + 1) * b, 1), tag + ": slope");
          c.require(s.component_count == d && s.component_degree == d, tag + ": (g, d)");
        }
        c.require(!canonical_obstruction_2222(map), tag + ": canonical obstruction not empty");
        c.require(!find_obstruction_by_search(map, 8), tag + ": search found an obstruction");
      }
  });

  const auto family = gen::torus_family(4, 2, 12);

  criterion(4, "pullback_slope equals the covering-space count", 300, [&](Check& c) {
    const auto box = slopes_in_box(5);
    std::size_t pairs = 0;
    for (const auto& raw : family) {
      const auto map = TorusQuotientMap::normalize(raw);
      for (const auto& v : box) {
        const auto pb = pullback_slope(map, v);
        const auto o = oracle::covering_pullback(map.matrix(), v);
        c.require(pb.target == o.target && pb.component_count == o.components && pb.component_degree == o.degree,
                  "mismatch at A=[[" + std::to_string(raw.m[0][0]) + "," + std::to_string(raw.m[0][1]) + "],[" +
                      std::to_string(raw.m[1][0]) + "," + std::to_string(raw.m[1][1]) + "] v=" + v.to_string());
        ++pairs;
      }
    }
    c.require(pairs > 0, "empty family");
    if (c.ok) c.detail = std::to_string(family.size()) + " matrices, " + std::to_string(pairs) + " pairs";
  });

  criterion(5, "search (bound 8) nonempty iff two distinct integer eigenvalues", 300, [&](Check& c) {
    std::size_t distinct = 0;
    for (const auto& raw : family) {
      const auto map = TorusQuotientMap::normalize(raw);
      const bool found = find_obstruction_by_search(map, 8).has_value();
      const bool two = eigenvalue_classification(map).kind == EigenClassification::Kind::TwoDistinctIntegers;
      distinct += two;
      c.require(found == two, "disagreement at A=[[" + std::to_string(raw.m[0][0]) + "," +
                                  std::to_string(raw.m[0][1]) + "],[" + std::to_string(raw.m[1][0]) + "," +
                                  std::to_string(raw.m[1][1]) + "]");
    }
    if (c.ok)
      c.detail = std::to_string(family.size()) + " matrices, " + std::to_string(distinct) + " with distinct integer eigenvalues";
  });

  criterion(6, "subinvariant vector iff no closed block with lambda < 1", 120, [](Check& c) {
    std::mt19937_64 rng(2024);
    std::size_t simple = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
      const auto m = gen::random_matrix(rng, n, 0.3, {Rational(1, 3), Rational(1, 2), Rational(1), Rational(1),
                                                      Rational(3, 2), Rational(2)});
      const auto v = exists_positive_subinvariant_vector(m);
      const bool oracle_simple = oracle::simple_by_permutations(m);
      simple += oracle_simple;
      c.require(v.has_value() == oracle_simple, "trial " + std::to_string(trial));
      if (v) c.require(is_subinvariant(m, *v), "certificate fails at trial " + std::to_string(trial));
    }
    if (c.ok) c.detail = std::to_string(simple) + " of 500 simple";
  });

  criterion(7, "positive powers, Wielandt bound, imprimitive decomposition", 300, [](Check& c) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial) % 7;
      const auto m = gen::random_irreducible01(rng, n, trial % 3 == 0 ? 0.0 : 0.15, true);
      const std::size_t e = n == 1 ? 1 : 2 * n - 2;
      c.require(oracle::support_positive(m.power(e).support()), "M^(2n-2) not positive");
    }
    std::size_t primitive = 0;
    for (int trial = 0; primitive < 500 && trial < 20000; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
      const auto m = gen::random_irreducible01(rng, n, trial % 2 ? 0.05 : 0.2, false);
      if (!is_primitive(m)) continue;
      ++primitive;
      const auto k = power_positive_exponent(m);
      c.require(k && *k <= (n - 1) * (n - 1) + 1, "Wielandt bound exceeded");
    }
    c.require(primitive == 500, "not enough primitive samples");
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
      const auto m = gen::random_irreducible(rng, n, trial % 2 ? 0.0 : 0.15);
      const auto d = imprimitive_block_decomposition(m);
      const auto mk = m.power(d.power);
      c.require(d.permuted_power == mk.permuted(d.permutation), "permuted power");
      std::vector<std::size_t> cls(n);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < d.classes.size(); ++i)
        for (std::size_t j = 0; j < d.classes[i].size(); ++j) cls[pos++] = i;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (cls[i] != cls[j]) c.require(sgn(d.permuted_power(i, j)) == 0, "nonzero off-diagonal block");
      const LeadingEigenvalue lam_k(mk);
      const auto lam = leading_eigenvalue_interval(m, Rational(1, 1000000));
      const Interval lam_pow{pow(lam.lo, d.power), pow(lam.hi, d.power)};
      for (const auto& blk : d.blocks) {
        c.require(blk.is_positive(), "diagonal block not positive");
        const auto iv = leading_eigenvalue_interval(blk, Rational(1, 1000000));
        c.require(lam_k.compare(iv.lo) != std::strong_ordering::less &&
                      lam_k.compare(iv.hi) != std::strong_ordering::greater,
                  "block interval misses lambda^k");
        c.require(iv.overlaps(lam_pow), "block interval misses the k-th power of lambda's interval");
      }
    }
  });

  criterion(8, "analyzer fixtures", 1, [](Check& c) {
    const auto levy = fx::levy_two_cycle();
    const Multicurve both = {"g1", "g2"};
    const auto cls = classify_multicurve(levy, both);
    c.require(cls.spectral.tag == SpectralTag::ExactlyOne && cls.obstruction, "Levy cycle lambda");
    c.require(is_simple_obstruction(levy, both).has_value(), "Levy cycle not simple");
    c.require(find_minimal_obstructions(levy) == std::vector<Multicurve>{both}, "Levy cycle not minimal");
    c.require(extract_simple_core(fx::half_then_one(), both) == Multicurve{"g2"}, "simple core");

    const auto g = fx::three_halves();
    const std::vector<DecompositionComponent> diag = {fx::torus_component("T", fx::mat(2, 0, 0, 3))};
    c.require(check_canonical_candidate(g, {"g"}, diag).verdict == CandidateVerdict::Reject, "diag(2,3) accepted");
    const std::vector<DecompositionComponent> shear = {fx::torus_component("T1", fx::mat(2, 2, 0, 2)),
                                                       fx::torus_component("T2", fx::mat(3, 6, 0, 3))};
    c.require(check_canonical_candidate(g, {"g"}, shear).verdict == CandidateVerdict::Accept, "shears rejected");
  });

  return failures == 0 ? 0 : 1;
}
