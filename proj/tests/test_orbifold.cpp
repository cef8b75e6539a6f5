#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "thurston/errors.hpp"
#include "thurston/orbifold.hpp"

using namespace thurston;

namespace {

CriticalPortrait z_squared() {
  return CriticalPortrait::create(2, {{"0", true, "0", 2}, {"inf", true, "inf", 2}});
}

CriticalPortrait basilica() {
  return CriticalPortrait::create(2, {{"0", true, "-1", 2}, {"-1", true, "0", 1}, {"inf", true, "inf", 2}});
}

CriticalPortrait four_fixed_points() {
  std::vector<PortraitPoint> pts;
  for (const char* x : {"a", "b", "c", "d"}) {
    pts.push_back({x, true, x, 1});
    pts.push_back({std::string("crit_") + x, false, x, 2});
  }
  return CriticalPortrait::create(4, pts);
}

// v(y) * deg_y, or nothing when infinite
std::optional<std::uint64_t> pulled(const std::vector<Weight>& v, const CriticalPortrait& p, std::size_t y) {
  if (v[y].is_infinite()) return std::nullopt;
  return v[y].value() * p.points()[y].local_degree;
}

bool divides(const std::optional<std::uint64_t>& a, const Weight& b) {
  if (b.is_infinite()) return true;
  return a && b.value() % *a == 0;
}

// v(y) deg_y | v(x) for every listed preimage y of every point x
bool condition_holds(const CriticalPortrait& p, const std::vector<Weight>& v) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y : p.preimages_of(x))
      if (!divides(pulled(v, p, y), v[x])) return false;
  return true;
}

// one more pass of v(x) <- lcm(v(x), v(y) deg_y)
std::vector<Weight> step(const CriticalPortrait& p, const std::vector<Weight>& v) {
  auto out = v;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (out[x].is_infinite()) continue;
    std::uint64_t l = out[x].value();
    bool inf = false;
    for (std::size_t y : p.preimages_of(x)) {
      const auto a = pulled(v, p, y);
      if (!a) inf = true;
      else l = std::lcm(l, *a);
    }
    out[x] = inf ? Weight::infinity() : Weight::finite(l);
  }
  return out;
}

CriticalPortrait random_portrait(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6);
  const int k = count(rng);
  std::vector<PortraitPoint> pts;
  std::uniform_int_distribution<int> target(0, k - 1);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  for (int i = 0; i < k; ++i)
    pts.push_back({"p" + std::to_string(i), true, "p" + std::to_string(target(rng)), deg(rng)});
  const int extra = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < extra; ++i)
    pts.push_back({"c" + std::to_string(i), false, "p" + std::to_string(target(rng)),
                   std::uniform_int_distribution<unsigned>(2, 3)(rng)});
  unsigned ram = 0;
  std::vector<unsigned> fiber(static_cast<std::size_t>(k), 0);
  for (const auto& pt : pts) {
    ram += pt.local_degree - 1;
    fiber[static_cast<std::size_t>(std::stoi(pt.image.substr(1)))] += pt.local_degree;
  }
  unsigned d = std::max(2U, *std::max_element(fiber.begin(), fiber.end()));
  d = std::max(d, (ram + 3) / 2);
  return CriticalPortrait::create(d, pts);
}

std::string signature_text(const std::vector<Weight>& w) {
  std::string s;
  for (const auto& x : w) s += x.to_string() + ",";
  return s;
}

}  // namespace

TEST_CASE("parabolic signatures have chi 0") {
  CHECK(all_parabolic_signatures().size() == 6);
  for (auto sig : all_parabolic_signatures()) {
    const auto w = weights_of(sig);
    CHECK(euler_characteristic(w) == 0);
    const auto c = classify_weights(w);
    CHECK(c.orbifold_class == OrbifoldClass::Parabolic);
    CHECK(c.parabolic == sig);
  }
  CHECK(euler_characteristic(std::vector{Weight::finite(2), Weight::finite(4), Weight::finite(4)}) == 0);
  CHECK(euler_characteristic(std::vector{Weight::infinity(), Weight::infinity()}) == 0);
  CHECK(euler_characteristic(std::vector{Weight::finite(2), Weight::finite(3), Weight::finite(7)}) == Rational(-1, 42));
}

TEST_CASE("weight text") {
  CHECK(Weight::infinity().to_string() == "inf");
  CHECK(Weight::parse("inf") == Weight::infinity());
  CHECK(Weight::parse("6") == Weight::finite(6));
  CHECK(Weight::finite(7) < Weight::infinity());
  CHECK_THROWS_AS(Weight::parse("0"), InputError);
  CHECK_THROWS_AS(Weight::parse("two"), InputError);
}

TEST_CASE("z squared") {
  const auto p = z_squared();
  const auto v = ramification_function(p);
  CHECK(v == std::vector{Weight::infinity(), Weight::infinity()});
  const auto s = classify_orbifold(p);
  CHECK(s.orbifold_class == OrbifoldClass::Parabolic);
  CHECK(s.parabolic == ParabolicSignature::InfInf);
  CHECK(s.chi == 0);
  CHECK_FALSE(is_2222(p));
}

TEST_CASE("basilica") {
  const auto p = basilica();
  CHECK(ramification_function(p) == std::vector(3, Weight::infinity()));
  const auto s = classify_orbifold(p);
  CHECK(s.orbifold_class == OrbifoldClass::Hyperbolic);
  CHECK(s.chi == -1);
  CHECK_FALSE(is_2222(p));
}

TEST_CASE("four fixed points with critical preimages") {
  const auto p = four_fixed_points();
  const auto v = ramification_function(p);
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(v[i] == (p.points()[i].marked ? Weight::finite(2) : Weight::finite(1)));
  const auto s = classify_orbifold(p);
  CHECK(s.parabolic == ParabolicSignature::TwoTwoTwoTwo);
  CHECK(s.chi == 0);
  CHECK(is_2222(p));
}

TEST_CASE("positive chi is flagged") {
  const auto s = classify_weights({Weight::finite(2), Weight::finite(2)});
  CHECK(s.orbifold_class == OrbifoldClass::Exceptional);
  CHECK(s.chi == 1);
  CHECK_FALSE(s.warnings.empty());
  // only the weights above 1 are kept
  CHECK(classify_weights({Weight::finite(1), Weight::finite(3)}).weights == std::vector{Weight::finite(3)});
}

TEST_CASE("portrait validation") {
  CHECK_THROWS_AS(CriticalPortrait::create(1, {{"0", true, "0", 1}}), PreconditionError);
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "x", 1}}), InputError);
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "0", 1}, {"0", true, "0", 1}}), InputError);
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "0", 0}}), InputError);
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "0", 3}}), PreconditionError);
  // marked point leaving the marked set
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "u", 1}, {"u", false, "u", 1}}), PreconditionError);
  // critical point with unmarked image
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"c", false, "u", 2}, {"u", false, "u", 1}}), PreconditionError);
  // fiber over 0 has total degree 4 > 2
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"0", true, "0", 2}, {"c", false, "0", 2}}), PreconditionError);
  // too much ramification for degree 2
  CHECK_THROWS_AS(CriticalPortrait::create(2, {{"a", true, "a", 2}, {"b", true, "b", 2}, {"c", true, "c", 2}}),
                  PreconditionError);
}

TEST_CASE("random portraits: validity, minimality, idempotence") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = random_portrait(rng);
    const auto v = ramification_function(p);
    INFO("trial " << trial);
    CHECK(condition_holds(p, v));
    CHECK(step(p, v) == v);
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.points()[x].marked) CHECK(v[x] == Weight::finite(1));
      if (v[x].is_infinite() || v[x].value() == 1) continue;
      for (std::uint64_t m = 1; m < v[x].value(); ++m) {
        if (v[x].value() % m != 0) continue;
        auto smaller = v;
        smaller[x] = Weight::finite(m);
        CHECK_FALSE(condition_holds(p, smaller));
      }
    }
    const auto s = classify_orbifold(p);
    CHECK(s.chi == euler_characteristic(v));
    CHECK((s.orbifold_class == OrbifoldClass::Parabolic) == (s.chi == 0));
  }
}

TEST_CASE("infinite weights sit exactly on orbits of critical cycles") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_portrait(rng);
    const auto v = ramification_function(p);
    // x is infinite iff some periodic critical point reaches x
    std::vector<bool> expect(p.size(), false);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p.points()[c].local_degree < 2) continue;
      std::size_t y = c;
      bool periodic = false;
      for (std::size_t k = 0; k < p.size(); ++k) {
        y = p.image_of(y);
        if (y == c) periodic = true;
      }
      if (!periodic) continue;
      y = c;
      for (std::size_t k = 0; k <= p.size(); ++k, y = p.image_of(y)) expect[y] = true;
    }
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(v[x].is_infinite() == expect[x]);
  }
}

TEST_CASE("the six signatures are the only chi = 0 multisets") {
  std::vector<Weight> values;
  for (std::uint64_t w = 2; w <= 12; ++w) values.push_back(Weight::finite(w));
  values.push_back(Weight::infinity());
  std::set<std::string> six;
  for (auto sig : all_parabolic_signatures()) six.insert(signature_text(weights_of(sig)));

  std::set<std::string> found;
  std::vector<std::size_t> idx;
  // all multisets of size 1..6, as non-decreasing index sequences
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!idx.empty()) {
      std::vector<Weight> w;
      for (auto i : idx) w.push_back(values[i]);
      const auto c = classify_weights(w);
      CHECK(c.chi == euler_characteristic(w));
      if (c.chi == 0) {
        found.insert(signature_text(w));
        CHECK(c.orbifold_class == OrbifoldClass::Parabolic);
      } else {
        CHECK(c.orbifold_class != OrbifoldClass::Parabolic);
      }
    }
    if (idx.size() == 6) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  CHECK(found == six);
}
