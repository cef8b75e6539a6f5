#include "thurston/cli.hpp"

#include <sstream>

#include "thurston/errors.hpp"

namespace thurston::cli {

using io::json;

const char* to_string(Command c) {
  switch (c) {
    case Command::Orbifold: return "orbifold";
    case Command::Matrix: return "matrix";
    case Command::Slopes: return "slopes";
    case Command::Table: return "table";
    case Command::Canonical: return "canonical";
  }
  return "?";
}

Command command_from_string(const std::string& name) {
  for (Command c : {Command::Orbifold, Command::Matrix, Command::Slopes, Command::Table, Command::Canonical})
    if (name == to_string(c)) return c;
  throw InputError("unknown command '" + name + "'");
}

json to_json(const AnalysisRequest& request) {
  const Options& o = request.options;
  json opts = {{"width", io::to_json(o.width)},
               {"bound", o.bound},
               {"subset_cap", o.subset_cap},
               {"check_simple", o.check_simple},
               {"orbit_start", o.orbit_start ? io::to_json(*o.orbit_start) : json(nullptr)},
               {"orbit_steps", o.orbit_steps},
               {"multicurve", o.multicurve}};
  return {{"command", to_string(request.command)}, {"options", std::move(opts)}, {"input", request.input}};
}

AnalysisRequest request_from_json(const json& value) {
  if (!value.is_object() || !value.contains("command") || !value.contains("input"))
    throw InputError("request: expected an object with 'command' and 'input'");
  if (!value["command"].is_string()) throw InputError("request.command: expected a string");
  AnalysisRequest r;
  r.command = command_from_string(value["command"].get<std::string>());
  r.input = value["input"];
  if (const auto it = value.find("options"); it != value.end()) {
    const json& o = *it;
    try {
      if (o.contains("width")) r.options.width = io::rational_from_json(o["width"], "request.options.width");
      if (o.contains("bound")) r.options.bound = o["bound"].get<std::int64_t>();
      if (o.contains("subset_cap")) r.options.subset_cap = o["subset_cap"].get<std::size_t>();
      if (o.contains("check_simple")) r.options.check_simple = o["check_simple"].get<bool>();
      if (o.contains("orbit_start") && !o["orbit_start"].is_null())
        r.options.orbit_start = io::slope_from_json(o["orbit_start"], "request.options.orbit_start");
      if (o.contains("orbit_steps")) r.options.orbit_steps = o["orbit_steps"].get<std::size_t>();
      if (o.contains("multicurve")) r.options.multicurve = o["multicurve"].get<Multicurve>();
    } catch (const json::exception& e) {
      throw InputError(std::string("request.options: ") + e.what());
    }
  }
  return r;
}

void validate(const Options& o) {
  if (sgn(o.width) <= 0) throw InputError("--width must be a positive rational");
  if (o.bound < 1 || o.bound > 1000) throw InputError("--bound must be in [1, 1000]");
  if (o.subset_cap < 1 || o.subset_cap > 24) throw InputError("--subset-cap must be in [1, 24]");
  if (o.orbit_steps < 1 || o.orbit_steps > 100000) throw InputError("--steps must be in [1, 100000]");
}

namespace {

json simple_check(const NonnegMatrix& m) {
  const auto v = exists_positive_subinvariant_vector(m);
  json out = {{"simple", v.has_value()}};
  if (v) {
    json vec = json::array();
    for (const auto& x : *v) vec.push_back(io::to_json(x));
    out["subinvariant_vector"] = std::move(vec);
    out["closed_subset_below_one"] = nullptr;
  } else {
    out["subinvariant_vector"] = nullptr;
    const auto w = find_closed_subset_below_one(m);
    out["closed_subset_below_one"] = w ? json(*w) : json(nullptr);
  }
  return out;
}

json run_matrix(const json& doc, const Options& o) {
  io::require_schema(doc, "matrix");
  const NonnegMatrix m = io::nonneg_matrix_from_json(io::json(doc.at("matrix")), "$.matrix");
  json out = {{"size", m.size()}, {"spectral_class", io::to_json(spectral_radius_class(m))}};
  out["simple"] = simple_check(m);
  if (o.check_simple) return out;

  out["characteristic_polynomial"] = io::to_json(characteristic_polynomial(m));
  out["leading_eigenvalue"] = {{"width", io::to_json(o.width)},
                               {"interval", io::to_json(leading_eigenvalue_interval(m, o.width))}};
  out["blocks"] = io::to_json(scc_partition(m));
  const bool irreducible = is_irreducible(m);
  out["irreducible"] = irreducible;
  out["primitive"] = is_primitive(m);
  const auto k = power_positive_exponent(m);
  out["positive_power"] = k ? json(*k) : json(nullptr);
  out["imprimitivity_index"] = nullptr;
  out["imprimitive_decomposition"] = nullptr;
  if (irreducible && (m.size() > 1 || m.has_edge(0, 0))) {
    const ImprimitiveDecomposition d = imprimitive_block_decomposition(m);
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(io::to_json(b));
    out["imprimitivity_index"] = d.index;
    out["imprimitive_decomposition"] = {
        {"power", d.power}, {"permutation", d.permutation}, {"classes", d.classes}, {"blocks", std::move(blocks)}};
  }
  return out;
}

json run_orbifold(const json& doc) {
  const CriticalPortrait portrait = io::portrait_from_json(doc);
  const std::vector<Weight> v = ramification_function(portrait);
  const OrbifoldSignature sig = classify_weights(v);
  json points = json::array();
  for (std::size_t i = 0; i < portrait.size(); ++i)
    points.push_back({{"id", portrait.points()[i].id}, {"weight", v[i].to_string()}});
  json weights = json::array();
  for (const auto& w : sig.weights) weights.push_back(w.to_string());
  return {{"ramification", std::move(points)},
          {"signature", std::move(weights)},
          {"chi", io::to_json(sig.chi)},
          {"class", to_string(sig.orbifold_class)},
          {"parabolic_signature", sig.parabolic ? json(to_string(*sig.parabolic)) : json(nullptr)},
          {"is_2222", sig.parabolic == ParabolicSignature::TwoTwoTwoTwo},
          {"warnings", sig.warnings}};
}

json fixed_slope_json(const FixedSlope& f) {
  return {{"slope", io::to_json(f.slope)}, {"multiplier", io::to_json(f.multiplier)}};
}

json run_slopes(const json& doc, const Options& o) {
  io::require_schema(doc, "torus-map");
  int marked = 4;
  if (doc.contains("marked_points")) {
    if (!doc["marked_points"].is_number_integer()) throw InputError("$.marked_points: expected an integer");
    marked = doc["marked_points"].get<int>();
  }
  const TorusQuotientMap map = TorusQuotientMap::normalize(io::int_matrix_from_json(doc.at("matrix"), "$.matrix"), marked);
  const EigenClassification ec = eigenvalue_classification(map);

  json out = {{"matrix", io::to_json(map.matrix())}, {"degree", map.degree()}};
  json eig = {{"kind", to_string(ec.kind)}};
  if (ec.kind != EigenClassification::Kind::NonIntegerOrComplex) eig["eigenvalues"] = json::array({ec.d1, ec.d2});
  out["eigenvalues"] = std::move(eig);

  const auto canonical = canonical_obstruction_2222(map);
  json canon = {{"nonempty", canonical.has_value()}};
  if (canonical) {
    canon["slope"] = io::to_json(canonical->slope);
    canon["multiplier"] = io::to_json(canonical->multiplier);
    const SlopePullback pb = pullback_slope(map, canonical->slope);
    canon["pullback"] = {{"target", io::to_json(pb.target)},
                         {"component_count", pb.component_count},
                         {"component_degree", pb.component_degree}};
  }
  out["canonical_obstruction"] = std::move(canon);

  const auto found = find_obstruction_by_search(map, o.bound);
  out["search"] = {{"bound", o.bound}, {"result", found ? fixed_slope_json(*found) : json(nullptr)}};
  json fixed = json::array();
  for (const auto& f : find_fixed_slopes(map, o.bound)) fixed.push_back(fixed_slope_json(f));
  out["fixed_slopes"] = std::move(fixed);

  if (o.orbit_start) {
    const SlopeOrbit orbit = orbit_of_slope(map, *o.orbit_start, o.orbit_steps);
    json steps = json::array();
    for (const auto& s : orbit.steps)
      steps.push_back({{"slope", io::to_json(s.slope)},
                       {"component_count", s.component_count},
                       {"component_degree", s.component_degree}});
    out["orbit"] = {{"start", io::to_json(orbit.start)},
                    {"steps", std::move(steps)},
                    {"cycle_start", orbit.cycle_start ? json(*orbit.cycle_start) : json(nullptr)},
                    {"cycle_length", orbit.cycle_length}};
  }
  return out;
}

Multicurve multicurve_field(const json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return {};
  const json& v = doc[key];
  if (!v.is_array()) throw InputError(std::string("$.") + key + ": expected an array of class ids");
  Multicurve out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw InputError(std::string("$.") + key + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

json run_table(const json& doc, const Options& o) {
  io::require_schema(doc, "table");
  const CurveTable table = io::table_from_json(doc, "$");
  const Multicurve gamma = o.multicurve.empty() ? multicurve_field(doc, "multicurve") : o.multicurve;
  return io::to_json(analyze_table(table, gamma, o.subset_cap));
}

json run_canonical(const json& doc) {
  io::require_schema(doc, "canonical");
  if (!doc.contains("table")) throw InputError("$.table: missing field");
  const CurveTable table = io::table_from_json(doc["table"], "$.table");
  const Multicurve candidate = multicurve_field(doc, "candidate");
  if (!doc.contains("decomposition")) throw InputError("$.decomposition: missing field");
  const auto decomposition = io::decomposition_from_json(doc["decomposition"], "$.decomposition");
  return io::to_json(check_canonical_candidate(table, candidate, decomposition));
}

json error_json(const char* kind, const std::string& message) { return {{"kind", kind}, {"message", message}}; }

}  // namespace

Outcome run(const AnalysisRequest& request) {
  Outcome out;
  out.report = {{"schema", io::schema_id("report")},
                {"command", to_string(request.command)},
                {"request", to_json(request)}};
  try {
    validate(request.options);
    json result;
    switch (request.command) {
      case Command::Orbifold: result = run_orbifold(request.input); break;
      case Command::Matrix: result = run_matrix(request.input, request.options); break;
      case Command::Slopes: result = run_slopes(request.input, request.options); break;
      case Command::Table: result = run_table(request.input, request.options); break;
      case Command::Canonical: result = run_canonical(request.input); break;
    }
    out.report["status"] = "ok";
    out.report["result"] = std::move(result);
  } catch (const InputError& e) {
    out.exit_code = 2;
    out.report["status"] = "error";
    out.report["error"] = error_json("malformed-input", e.what());
  } catch (const json::exception& e) {
    out.exit_code = 2;
    out.report["status"] = "error";
    out.report["error"] = error_json("malformed-input", e.what());
  } catch (const PreconditionError& e) {
    out.exit_code = 3;
    out.report["status"] = "error";
    out.report["error"] = error_json("precondition", e.what());
  } catch (const ResourceLimitError& e) {
    out.exit_code = 4;
    out.report["status"] = "error";
    out.report["error"] = error_json("resource-limit", e.what());
  }
  return out;
}

ReplayResult replay(const json& report) {
  io::require_schema(report, "report");
  if (!report.contains("request")) throw InputError("report has no embedded request");
  ReplayResult r;
  r.rerun = run(request_from_json(report["request"]));
  r.identical = dump(r.rerun.report) == dump(report);
  return r;
}

std::string dump(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string join(const json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string slope_text(const json& s) { return std::to_string(s[0].get<long long>()) + "/" + std::to_string(s[1].get<long long>()); }

std::string interval_text(const json& iv) { return "[" + iv[0].get<std::string>() + ", " + iv[1].get<std::string>() + "]"; }

void text_matrix(std::ostringstream& os, const json& r) {
  os << "size: " << r["size"] << "\n";
  os << "leading eigenvalue vs 1: " << r["spectral_class"]["tag"].get<std::string>() << " "
     << interval_text(r["spectral_class"]["interval"]) << "\n";
  const json& s = r["simple"];
  if (s["simple"].get<bool>())
    os << "simple obstruction: yes, certificate v = (" << join(s["subinvariant_vector"]) << ")\n";
  else
    os << "simple obstruction: no, closed subset with lambda < 1: {"
       << (s["closed_subset_below_one"].is_null() ? std::string() : join(s["closed_subset_below_one"])) << "}\n";
  if (!r.contains("blocks")) return;
  os << "leading eigenvalue in " << interval_text(r["leading_eigenvalue"]["interval"]) << " (width "
     << r["leading_eigenvalue"]["width"].get<std::string>() << ")\n";
  os << "irreducible: " << (r["irreducible"].get<bool>() ? "yes" : "no")
     << ", primitive: " << (r["primitive"].get<bool>() ? "yes" : "no") << "\n";
  if (!r["imprimitivity_index"].is_null()) os << "imprimitivity index: " << r["imprimitivity_index"] << "\n";
  if (!r["positive_power"].is_null()) os << "first positive power: " << r["positive_power"] << "\n";
  os << "SCC blocks: " << r["blocks"]["blocks"].dump() << "\n";
}

void text_orbifold(std::ostringstream& os, const json& r) {
  os << "signature: (" << join(r["signature"], ",") << ")\n";
  os << "chi: " << r["chi"].get<std::string>() << "\n";
  os << "class: " << r["class"].get<std::string>();
  if (!r["parabolic_signature"].is_null()) os << " " << r["parabolic_signature"].get<std::string>();
  os << "\n";
  for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
}

void text_slopes(std::ostringstream& os, const json& r) {
  os << "normalized action: " << r["matrix"].dump() << ", degree " << r["degree"] << "\n";
  os << "eigenvalues: " << r["eigenvalues"]["kind"].get<std::string>();
  if (r["eigenvalues"].contains("eigenvalues")) os << " " << r["eigenvalues"]["eigenvalues"].dump();
  os << "\n";
  const json& c = r["canonical_obstruction"];
  if (c["nonempty"].get<bool>())
    os << "canonical obstruction: nonempty, slope " << slope_text(c["slope"]) << ", multiplier "
       << c["multiplier"].get<std::string>() << "\n";
  else
    os << "canonical obstruction: empty\n";
  const json& s = r["search"];
  os << "search (bound " << s["bound"] << "): ";
  if (s["result"].is_null())
    os << "no fixed slope with multiplier > 1\n";
  else
    os << "slope " << slope_text(s["result"]["slope"]) << ", multiplier " << s["result"]["multiplier"].get<std::string>() << "\n";
  if (r.contains("orbit")) {
    os << "orbit of " << slope_text(r["orbit"]["start"]) << ":";
    for (const auto& st : r["orbit"]["steps"]) os << " " << slope_text(st["slope"]);
    if (!r["orbit"]["cycle_start"].is_null())
      os << " (cycle from index " << r["orbit"]["cycle_start"] << ", length " << r["orbit"]["cycle_length"] << ")";
    os << "\n";
  }
}

void text_table(std::ostringstream& os, const json& r) {
  os << "multicurve: {" << join(r["multicurve"]) << "}\n";
  os << "thurston matrix: " << r["thurston_matrix"].dump() << "\n";
  os << "leading eigenvalue vs 1: " << r["spectral_class"]["tag"].get<std::string>() << " "
     << interval_text(r["spectral_class"]["interval"]) << "\n";
  os << "obstruction: " << (r["obstruction"].get<bool>() ? "yes" : "no") << "\n";
  os << "invariant: " << r["invariant"].get<std::string>()
     << ", completely invariant: " << r["completely_invariant"].get<std::string>() << "\n";
  os << "simple: " << (r["simple"]["simple"].get<bool>() ? "yes" : "no") << "\n";
  if (!r["simple_core"].is_null()) os << "simple core: {" << join(r["simple_core"]) << "}\n";
  os << "levy cycles:";
  for (const auto& c : r["levy_cycles"]) os << " (" << join(c, " -> ") << ")";
  os << "\nminimal obstructions:";
  for (const auto& c : r["minimal_obstructions"]) os << " {" << join(c) << "}";
  os << "\n";
}

void text_canonical(std::ostringstream& os, const json& r) {
  os << "verdict: " << r["verdict"].get<std::string>() << " (relative to the supplied tables)\n";
  for (const auto& reason : r["reasons"]) os << "  - " << reason.get<std::string>() << "\n";
  for (const auto& c : r["components"])
    os << "component " << c["label"].get<std::string>() << " [" << c["type"].get<std::string>()
       << "]: " << c["verdict"].get<std::string>() << "\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  const std::string command = report.value("command", "");
  if (report.value("status", "") != "ok") {
    os << command << ": error (" << report["error"]["kind"].get<std::string>()
       << "): " << report["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  const json& r = report["result"];
  switch (command_from_string(command)) {
    case Command::Orbifold: text_orbifold(os, r); break;
    case Command::Matrix: text_matrix(os, r); break;
    case Command::Slopes: text_slopes(os, r); break;
    case Command::Table: text_table(os, r); break;
    case Command::Canonical: text_canonical(os, r); break;
  }
  return os.str();
}

}  // namespace thurston::cli
