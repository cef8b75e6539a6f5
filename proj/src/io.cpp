#include "thurston/io.hpp"

#include <cctype>

#include "thurston/errors.hpp"

namespace thurston::io {

namespace {

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw InputError(path + ": expected a string");
  return v.get<std::string>();
}

long long integer_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
  return v.get<long long>();
}

unsigned positive_at(const json& v, const std::string& path) {
  const long long x = integer_at(v, path);
  if (x < 0 || x > 1'000'000'000) throw InputError(path + ": expected a non-negative integer");
  return static_cast<unsigned>(x);
}

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  return v;
}

std::vector<std::string> strings_at(const json& v, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = array_at(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_at(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string schema_id(std::string_view kind) {
  return std::string(schema_prefix) + std::string(kind) + "/" + std::to_string(schema_version);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + e.what());
  }
}

void require_schema(const json& doc, std::string_view kind) {
  const std::string got = string_at(field(doc, "schema", "$"), "$.schema");
  if (got != schema_id(kind))
    throw InputError("$.schema: expected '" + schema_id(kind) + "', got '" + got + "'");
}

json to_json(const Rational& value) { return thurston::to_string(value); }

Rational rational_from_json(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer or a \"p/q\" string");
}

std::vector<std::vector<Rational>> parse_matrix_literal(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> void {
    throw InputError("matrix literal, column " + std::to_string(pos + 1) + ": " + what);
  };
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  const auto token = [&]() -> Rational {
    skip();
    const bool quoted = pos < text.size() && text[pos] == '"';
    if (quoted) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' ||
                                 text[pos] == '-' || text[pos] == '+'))
      ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    if (quoted) expect('"');
    if (tok.empty()) fail("expected a rational entry");
    return parse_rational(tok);
  };

  std::vector<std::vector<Rational>> rows;
  expect('[');
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      expect('[');
      std::vector<Rational> row;
      skip();
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
      } else {
        for (;;) {
          row.push_back(token());
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          expect(']');
          break;
        }
      }
      rows.push_back(std::move(row));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (pos != text.size()) fail("trailing characters");
  return rows;
}

NonnegMatrix nonneg_matrix_from_json(const json& value, const std::string& path) {
  const json& rows = array_at(value, path);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = array_at(rows[i], idx(path, i));
    std::vector<Rational> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(rational_from_json(row[j], idx(idx(path, i), j)));
    out.push_back(std::move(r));
  }
  try {
    return NonnegMatrix::from_rows(out);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

IntMatrix2 int_matrix_from_rows(const std::vector<std::vector<Rational>>& rows, const std::string& path) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
    throw InputError(path + ": expected a 2x2 integer matrix");
  IntMatrix2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational& e = rows[i][j];
      if (e.get_den() != 1 || !e.get_num().fits_slong_p() || abs(e.get_num()) > 1'000'000'000)
        throw InputError(idx(idx(path, i), j) + ": expected an integer of magnitude <= 10^9");
      m.m[i][j] = e.get_num().get_si();
    }
  return m;
}

IntMatrix2 int_matrix_from_json(const json& value, const std::string& path) {
  const json& rows = array_at(value, path);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = array_at(rows[i], idx(path, i));
    std::vector<Rational> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(rational_from_json(row[j], idx(idx(path, i), j)));
    out.push_back(std::move(r));
  }
  return int_matrix_from_rows(out, path);
}

json to_json(const NonnegMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IntMatrix2& m) {
  return json::array({json::array({m.m[0][0], m.m[0][1]}), json::array({m.m[1][0], m.m[1][1]})});
}

json to_json(const Slope& s) { return json::array({s.p(), s.q()}); }

Slope slope_from_json(const json& value, const std::string& path) {
  const json& arr = array_at(value, path);
  if (arr.size() != 2) throw InputError(path + ": a slope is a two-element integer array");
  try {
    return Slope::from_vector(integer_at(arr[0], idx(path, 0)), integer_at(arr[1], idx(path, 1)));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json to_json(const Interval& iv) { return json::array({to_json(iv.lo), to_json(iv.hi)}); }

json to_json(const SpectralClass& sc) {
  return {{"tag", to_string(sc.tag)}, {"interval", to_json(sc.isolating_interval)}};
}

json to_json(const BlockStructure& bs) {
  return {{"permutation", bs.permutation}, {"block_sizes", bs.block_sizes}, {"blocks", bs.blocks()}};
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return coeffs;
}

CriticalPortrait portrait_from_json(const json& doc) {
  require_schema(doc, "portrait");
  const unsigned degree = positive_at(field(doc, "degree", "$"), "$.degree");
  const json& pts = array_at(field(doc, "points", "$"), "$.points");
  std::vector<PortraitPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = idx("$.points", i);
    PortraitPoint p;
    p.id = string_at(field(pts[i], "id", path), path + ".id");
    p.image = string_at(field(pts[i], "image", path), path + ".image");
    if (const json* m = optional_field(pts[i], "marked")) {
      if (!m->is_boolean()) throw InputError(path + ".marked: expected a boolean");
      p.marked = m->get<bool>();
    }
    if (const json* d = optional_field(pts[i], "local_degree")) p.local_degree = positive_at(*d, path + ".local_degree");
    points.push_back(std::move(p));
  }
  return CriticalPortrait::create(degree, std::move(points));
}

json to_json(const CriticalPortrait& portrait) {
  json pts = json::array();
  for (const auto& p : portrait.points())
    pts.push_back({{"id", p.id}, {"marked", p.marked}, {"image", p.image}, {"local_degree", p.local_degree}});
  return {{"schema", schema_id("portrait")}, {"degree", portrait.degree()}, {"points", std::move(pts)}};
}

CurveTable table_from_json(const json& doc, const std::string& path) {
  const unsigned degree = positive_at(field(doc, "degree", path), path + ".degree");
  std::vector<std::string> marked;
  if (const json* m = optional_field(doc, "marked_points")) marked = strings_at(*m, path + ".marked_points");
  const json& cls = array_at(field(doc, "classes", path), path + ".classes");
  std::vector<CurveClass> classes;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::string cpath = idx(path + ".classes", i);
    CurveClass c;
    c.id = string_at(field(cls[i], "id", cpath), cpath + ".id");
    if (const json* part = optional_field(cls[i], "partition")) {
      const json& sides = array_at(*part, cpath + ".partition");
      if (sides.size() != 2) throw InputError(cpath + ".partition: expected two sides");
      c.partition = Partition{strings_at(sides[0], cpath + ".partition[0]"), strings_at(sides[1], cpath + ".partition[1]")};
    }
    const json& pre = array_at(field(cls[i], "preimages", cpath), cpath + ".preimages");
    for (std::size_t k = 0; k < pre.size(); ++k) {
      const std::string ppath = idx(cpath + ".preimages", k);
      PreimageComponent comp;
      comp.degree = positive_at(field(pre[k], "degree", ppath), ppath + ".degree");
      std::string kind = "class";
      if (const json* kd = optional_field(pre[k], "kind")) kind = string_at(*kd, ppath + ".kind");
      if (kind == "class") {
        comp.kind = TargetKind::Class;
        comp.target = string_at(field(pre[k], "target", ppath), ppath + ".target");
      } else if (kind == "inessential") {
        comp.kind = TargetKind::Inessential;
      } else if (kind == "untracked") {
        comp.kind = TargetKind::Untracked;
      } else {
        throw InputError(ppath + ".kind: expected 'class', 'inessential' or 'untracked'");
      }
      c.preimages.push_back(std::move(comp));
    }
    classes.push_back(std::move(c));
  }
  try {
    return CurveTable::create(degree, std::move(marked), std::move(classes));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

json to_json(const CurveTable& table) {
  json classes = json::array();
  for (const auto& c : table.classes()) {
    json pre = json::array();
    for (const auto& comp : c.preimages) {
      switch (comp.kind) {
        case TargetKind::Class: pre.push_back({{"degree", comp.degree}, {"target", comp.target}}); break;
        case TargetKind::Inessential: pre.push_back({{"degree", comp.degree}, {"kind", "inessential"}}); break;
        case TargetKind::Untracked: pre.push_back({{"degree", comp.degree}, {"kind", "untracked"}}); break;
      }
    }
    json entry = {{"id", c.id}, {"preimages", std::move(pre)}};
    if (c.partition) entry["partition"] = json::array({c.partition->first, c.partition->second});
    classes.push_back(std::move(entry));
  }
  return {{"degree", table.degree()}, {"marked_points", table.marked_points()}, {"classes", std::move(classes)}};
}

std::vector<DecompositionComponent> decomposition_from_json(const json& value, const std::string& path) {
  const json& arr = array_at(value, path);
  std::vector<DecompositionComponent> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string cpath = idx(path, i);
    DecompositionComponent c;
    c.label = string_at(field(arr[i], "label", cpath), cpath + ".label");
    c.marked_points = static_cast<int>(positive_at(field(arr[i], "marked_points", cpath), cpath + ".marked_points"));
    const std::string type = string_at(field(arr[i], "type", cpath), cpath + ".type");
    if (type == "homeomorphism") {
      c.kind = DecompositionComponent::Kind::Homeomorphism;
    } else if (type == "2222") {
      c.kind = DecompositionComponent::Kind::TwoTwoTwoTwo;
      c.action = int_matrix_from_json(field(arr[i], "matrix", cpath), cpath + ".matrix");
    } else if (type == "other") {
      c.kind = DecompositionComponent::Kind::Other;
    } else {
      throw InputError(cpath + ".type: expected 'homeomorphism', '2222' or 'other'");
    }
    if (const json* t = optional_field(arr[i], "table")) c.table = table_from_json(*t, cpath + ".table");
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

json multicurves(const std::vector<Multicurve>& list) {
  json out = json::array();
  for (const auto& m : list) out.push_back(m);
  return out;
}

json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const ObstructionReport& r) {
  json out;
  out["multicurve"] = r.multicurve;
  out["thurston_matrix"] = to_json(r.matrix);
  out["spectral_class"] = to_json(r.classification.spectral);
  out["obstruction"] = r.classification.obstruction;
  out["invariant"] = to_string(r.invariant);
  out["completely_invariant"] = to_string(r.completely_invariant);
  json simple = {{"simple", r.classification.obstruction && r.simple_certificate.has_value()}};
  simple["subinvariant_vector"] = r.simple_certificate ? vector_json(*r.simple_certificate) : json(nullptr);
  if (r.non_simple_witness) {
    Multicurve w;
    for (std::size_t i : *r.non_simple_witness) w.push_back(r.multicurve[i]);
    simple["closed_subset_below_one"] = w;
  } else {
    simple["closed_subset_below_one"] = nullptr;
  }
  out["simple"] = std::move(simple);
  out["simple_core"] = r.simple_core ? json(*r.simple_core) : json(nullptr);
  out["levy_cycles"] = multicurves(r.levy_cycles);
  out["minimal_obstructions"] = multicurves(r.minimal_obstructions);
  return out;
}

json to_json(const CanonicalCheck& c) {
  json out;
  out["verdict"] = to_string(c.verdict);
  out["relative_to_supplied_tables"] = true;
  out["reasons"] = c.reasons;
  out["candidate"] = {{"spectral_class", to_json(c.candidate_class.spectral)},
                      {"obstruction", c.candidate_class.obstruction},
                      {"completely_invariant", to_string(c.completely_invariant)},
                      {"subinvariant_vector", c.simple_certificate ? vector_json(*c.simple_certificate) : json(nullptr)},
                      {"closed_subset_below_one", c.non_simple_witness ? json(*c.non_simple_witness) : json(nullptr)}};
  json comps = json::array();
  for (const auto& v : c.components) {
    json e = {{"label", v.label}, {"type", to_string(v.kind)}, {"verdict", to_string(v.verdict)}, {"reason", v.reason}};
    if (v.canonical_slope)
      e["canonical_slope"] = {{"slope", to_json(v.canonical_slope->slope)},
                              {"multiplier", to_json(v.canonical_slope->multiplier)},
                              {"eigenvalues", json::array({v.canonical_slope->d1, v.canonical_slope->d2})}};
    if (v.obstruction) e["obstruction"] = *v.obstruction;
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  return out;
}

}  // namespace thurston::io
