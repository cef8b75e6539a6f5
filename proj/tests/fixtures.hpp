#pragma once

#include "thurston/obstruct.hpp"

namespace fx {

using namespace thurston;

inline PreimageComponent to(const std::string& id, unsigned degree) { return {degree, TargetKind::Class, id}; }
inline PreimageComponent inessential(unsigned degree = 1) { return {degree, TargetKind::Inessential, ""}; }
inline PreimageComponent untracked(unsigned degree = 1) { return {degree, TargetKind::Untracked, ""}; }

inline const std::vector<std::string>& abcd() {
  static const std::vector<std::string> m = {"a", "b", "c", "d"};
  return m;
}

inline Partition split(std::vector<std::string> l, std::vector<std::string> r) { return {std::move(l), std::move(r)}; }

/// g1 and g2 swap under pullback, each by a degree-1 component.
inline CurveTable levy_two_cycle() {
  return CurveTable::create(2, abcd(),
                            {{"g1", split({"a", "b"}, {"c", "d"}), {to("g2", 1)}},
                             {"g2", split({"a", "c"}, {"b", "d"}), {to("g1", 1)}}});
}

/// One class with three self-components of degree 2: matrix (3/2).
inline CurveTable three_halves() {
  return CurveTable::create(6, abcd(), {{"g", split({"a", "b"}, {"c", "d"}), {to("g", 2), to("g", 2), to("g", 2)}}});
}

/// Two classes with matrix [[1/2, 0], [1, 1]].
inline CurveTable half_then_one() {
  return CurveTable::create(3, abcd(),
                            {{"g1", split({"a", "b"}, {"c", "d"}), {to("g1", 2), to("g2", 1)}},
                             {"g2", split({"a", "c"}, {"b", "d"}), {to("g2", 1)}}});
}

/// Three classes with matrix [[1/2,0,0],[1,1/2,0],[0,1,2]].
inline CurveTable chain_of_three() {
  return CurveTable::create(3, {"a", "b", "c", "d", "e"},
                            {{"g1", std::nullopt, {to("g1", 2), to("g2", 1)}},
                             {"g2", std::nullopt, {to("g2", 2), to("g3", 1)}},
                             {"g3", std::nullopt, {to("g3", 1), to("g3", 1)}}});
}

inline DecompositionComponent torus_component(const std::string& label, IntMatrix2 a) {
  DecompositionComponent c;
  c.label = label;
  c.marked_points = 4;
  c.kind = DecompositionComponent::Kind::TwoTwoTwoTwo;
  c.action = a;
  return c;
}

inline DecompositionComponent other_component(const std::string& label, CurveTable table) {
  DecompositionComponent c;
  c.label = label;
  c.marked_points = static_cast<int>(table.marked_points().size());
  c.kind = DecompositionComponent::Kind::Other;
  c.table = std::move(table);
  return c;
}

inline DecompositionComponent homeomorphism_component(const std::string& label) {
  DecompositionComponent c;
  c.label = label;
  c.marked_points = 3;
  c.kind = DecompositionComponent::Kind::Homeomorphism;
  return c;
}

inline IntMatrix2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {{{{a, b}, {c, d}}}}; }

}  // namespace fx
