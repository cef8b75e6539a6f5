#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "thurston/cli.hpp"
#include "thurston/errors.hpp"

namespace {

using thurston::cli::Command;
using thurston::io::json;

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw thurston::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_literal(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\n");
  return pos != std::string::npos && s[pos] == '[';
}

json matrix_document(const char* schema, const std::string& literal) {
  const auto rows = thurston::io::parse_matrix_literal(literal);
  json m = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& e : row) {
      if (e.get_den() == 1 && e.get_num().fits_slong_p())
        r.push_back(e.get_num().get_si());
      else
        r.push_back(thurston::to_string(e));
    }
    m.push_back(std::move(r));
  }
  return {{"schema", thurston::io::schema_id(schema)}, {"matrix", std::move(m)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact obstruction analysis for postcritically finite branched covers of the sphere"};
  app.require_subcommand(0, 1);

  std::string format = "json";
  std::string replay_path;
  std::string input;
  std::string matrix_literal;
  std::string width_text;
  std::string orbit_text;
  std::string multicurve_text;
  thurston::cli::Options options;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  app.add_option("--replay", replay_path, "Re-run the request embedded in a JSON report and compare");
  add_format(&app);

  auto* orbifold = app.add_subcommand("orbifold", "Ramification weights and orbifold signature of a portrait");
  orbifold->add_option("input", input, "Portrait document (path or '-')")->required();

  auto* matrix = app.add_subcommand("matrix", "Spectral analysis of a non-negative rational matrix");
  matrix->add_option("input", input, "Matrix document, or an inline literal such as [[1/2,0],[1,1]]");
  matrix->add_option("--matrix", matrix_literal, "Inline matrix literal");
  matrix->add_flag("--check-simple", options.check_simple, "Only decide whether the matrix is a simple obstruction");
  matrix->add_option("--width", width_text, "Leading-eigenvalue interval width p/q (default 1/1000000)");

  auto* slopes = app.add_subcommand("slopes", "Slope pullback and canonical obstruction of a (2,2,2,2)-map");
  slopes->add_option("input", input, "Torus-map document, or an inline 2x2 literal");
  slopes->add_option("--matrix", matrix_literal, "Inline homology action, e.g. [[2,0],[0,3]]");
  slopes->add_option("--bound", options.bound, "Slope search box |p|,|q| <= N (default 8)");
  slopes->add_option("--orbit", orbit_text, "Also iterate the pullback from slope p,q");
  slopes->add_option("--steps", options.orbit_steps, "Pullback steps for --orbit (default 10)");

  auto* table = app.add_subcommand("table", "Thurston-matrix analysis of a curve table");
  table->add_option("input", input, "Table document (path or '-')")->required();
  table->add_option("--multicurve", multicurve_text, "Comma-separated class ids (default: document or all)");
  table->add_option("--subset-cap", options.subset_cap, "Class-count cap for the minimal-obstruction search");

  auto* canonical = app.add_subcommand("canonical", "Check a canonical-obstruction candidate");
  canonical->add_option("input", input, "Canonical-check document (path or '-')")->required();

  for (auto* sub : {orbifold, matrix, slopes, table, canonical}) add_format(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!replay_path.empty()) {
      const auto result = thurston::cli::replay(thurston::io::parse_document(read_source(replay_path)));
      std::cout << (result.identical ? "replay: identical\n" : "replay: MISMATCH\n");
      if (!result.identical) std::cout << thurston::cli::dump(result.rerun.report);
      return result.identical ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    thurston::cli::AnalysisRequest request;
    const std::string name = app.get_subcommands().front()->get_name();
    request.command = thurston::cli::command_from_string(name);

    if (!width_text.empty()) options.width = thurston::parse_rational(width_text);
    if (!orbit_text.empty()) {
      const auto comma = orbit_text.find(',');
      if (comma == std::string::npos) throw thurston::InputError("--orbit expects p,q");
      options.orbit_start =
          thurston::Slope::from_vector(std::stoll(orbit_text.substr(0, comma)), std::stoll(orbit_text.substr(comma + 1)));
    }
    if (!multicurve_text.empty()) {
      std::stringstream ss(multicurve_text);
      for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) options.multicurve.push_back(id);
    }
    request.options = options;

    const bool matrix_like = request.command == Command::Matrix || request.command == Command::Slopes;
    const char* schema = request.command == Command::Matrix ? "matrix" : "torus-map";
    if (matrix_like && !matrix_literal.empty()) {
      request.input = matrix_document(schema, matrix_literal);
    } else if (matrix_like && looks_like_literal(input)) {
      request.input = matrix_document(schema, input);
    } else if (!input.empty()) {
      request.input = thurston::io::parse_document(read_source(input));
    } else {
      throw thurston::InputError("no input document given");
    }

    const auto outcome = thurston::cli::run(request);
    std::cout << (format == "text" ? thurston::cli::render_text(outcome.report) : thurston::cli::dump(outcome.report));
    return outcome.exit_code;
  } catch (const thurston::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return 2;
  } catch (const thurston::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
