#include "milnor_tools/cli.hpp"

#include "milnor/braid.hpp"
#include "milnor/diagram.hpp"
#include "milnor/errors.hpp"
#include "milnor/families.hpp"
#include "milnor/json.hpp"
#include "milnor/move_dsl.hpp"
#include "milnor/search.hpp"
#include "milnor_tools/checks.hpp"
#include "milnor_tools/http_server.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace milnor::tools {

using nlohmann::json;

namespace {

struct FamilyFlags {
  std::string family;
  std::optional<int> p, q, r;

  void add_to(CLI::App* cmd, bool required) {
    auto* f = cmd->add_option("--family", family, "GabrielovT, T, Abb15 or S");
    if (required) f->required();
    cmd->add_option("--p", p, "first parameter (>= 2)");
    cmd->add_option("--q", q, "second parameter (>= 2)");
    cmd->add_option("--r", r, "third parameter (>= 2)");
  }
  bool given() const { return !family.empty(); }
  FamilySpec spec() const {
    if (!p || !q || !r) throw UsageError("--family needs --p, --q and --r");
    return FamilySpec{parse_family(family), *p, *q, *r};
  }
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

json read_json(const std::string& path, std::istream& in) {
  const std::string text = read_all(path, in);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("input is not valid JSON: ") + e.what());
  }
}

json family_document(const FamilySpec& spec, const Basis& b) {
  json doc = basis_to_json(b);
  doc["family"] = family_name(spec.family);
  doc["p"] = spec.p;
  doc["q"] = spec.q;
  doc["r"] = spec.r;
  return doc;
}

Basis load_basis(const FamilyFlags& flags, const std::string& input, std::istream& in) {
  if (flags.given()) return build_family(flags.spec()).basis;
  return basis_from_json(read_json(input, in));
}

// "a", "b2-5", "g1": one generator kind with an optional index or range.
std::vector<MoveRange> parse_move_set(const std::string& text) {
  std::vector<MoveRange> out;
  std::istringstream is(text);
  for (std::string token; std::getline(is, token, ',');) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    MoveRange range;
    switch (token[0]) {
      case 'a': range.kind = MoveKind::Alpha; break;
      case 'b': range.kind = MoveKind::Beta; break;
      case 'g': range.kind = MoveKind::Gamma; break;
      default: throw UsageError("bad move-set token '" + token + "'");
    }
    range.lo = min_index(range.kind);
    const std::string rest = token.substr(1);
    try {
      if (!rest.empty()) {
        const auto dash = rest.find('-');
        std::size_t used = 0;
        range.lo = std::stoi(rest.substr(0, dash), &used);
        if (used != rest.substr(0, dash).size()) throw std::invalid_argument("trailing characters");
        if (dash == std::string::npos) {
          range.hi = range.lo;
        } else {
          const std::string hi = rest.substr(dash + 1);
          range.hi = std::stoi(hi, &used);
          if (used != hi.size()) throw std::invalid_argument("trailing characters");
        }
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad move-set token '" + token + "'");
    }
    out.push_back(range);
  }
  if (out.empty()) throw UsageError("empty move set");
  return out;
}

Integer parse_integer_flag(const std::string& text, const char* flag) {
  try {
    return integer_from_json(json(text));
  } catch (const FormatError&) {
    throw UsageError(std::string(flag) + " must be an integer, got '" + text + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguished bases, braid moves and Coxeter-Dynkin diagrams of Milnor lattices", "milnor"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Write the lattice and identity basis of a diagram family");
  FamilyFlags build_family_flags;
  build_family_flags.add_to(build, true);
  std::string build_output = "-";
  build->add_option("-o,--output", build_output, "output file ('-' for stdout)");

  // apply
  auto* apply = app.add_subcommand("apply", "Apply a move word to a basis document");
  std::string apply_moves;
  std::string apply_input = "-";
  std::string apply_output = "-";
  FamilyFlags apply_family_flags;
  apply->add_option("-m,--moves", apply_moves, "move word, e.g. \"b4, b3, b2; g1\"")->required();
  apply->add_option("-i,--input", apply_input, "basis document ('-' for stdin)");
  apply->add_option("-o,--output", apply_output, "output file ('-' for stdout)");
  apply_family_flags.add_to(apply, false);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named verification and print its report");
  std::string verify_name;
  CheckOptions check;
  std::string check_m;
  bool verify_json = false;
  bool verify_verbose = false;
  verify->add_option("name", verify_name, "check name")->required()->check(CLI::IsMember(check_names()));
  verify->add_option("--kmax", check.kmax, "largest orbit exponent");
  verify->add_option("--p", check.p);
  verify->add_option("--q", check.q);
  verify->add_option("--r", check.r);
  verify->add_option("--case", check.case_name, "T433, T542 or T732");
  verify->add_option("--variant", check.variant, "eq2, kluitmann or abb15_to_S");
  verify->add_option("--m", check_m, "intersection number for the witness check");
  verify->add_option("--orbits", check.orbits, "number of random words (entry-bound)");
  verify->add_option("--length", check.length, "maximal word length (entry-bound)");
  verify->add_option("--seed", check.seed, "random seed (entry-bound)");
  verify->add_flag("--json", verify_json, "print the reports as JSON");
  verify->add_flag("-v,--verbose", verify_verbose, "list passing stages too");

  // search
  auto* search = app.add_subcommand("search", "Find a shortest move word between two bases");
  FamilyFlags search_family_flags;
  std::string search_from = "-";
  std::string search_to;
  std::string search_scramble;
  int search_depth = 6;
  std::string search_mode = "gram";
  std::string search_moves;
  search_family_flags.add_to(search, false);
  search->add_option("--from", search_from, "start basis document ('-' for stdin)");
  auto* to_opt = search->add_option("--to", search_to, "target basis document or {\"gram\": [[...]]}");
  search->add_option("--scramble", search_scramble, "target = start after this move word")->excludes(to_opt);
  search->add_option("--max-depth", search_depth, "largest word length tried")->check(CLI::NonNegativeNumber);
  search->add_option("--mode", search_mode, "gram or exact")->check(CLI::IsMember({"gram", "exact"}));
  search->add_option("--allow", search_moves, "allowed generators, e.g. \"a,b2-5,g1\" (default: all)");

  // export
  auto* exp = app.add_subcommand("export", "Print the diagram of a basis document");
  FamilyFlags export_family_flags;
  std::string export_input = "-";
  std::string export_format = "dot";
  std::string export_name = "diagram";
  export_family_flags.add_to(exp, false);
  exp->add_option("-i,--input", export_input, "basis document ('-' for stdin)");
  exp->add_option("--format", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--name", export_name, "graph name in the DOT output");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  int serve_port = 8080;
  std::string serve_host = "127.0.0.1";
  std::string serve_ui;
  serve->add_option("--port", serve_port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_host, "listen address");
  serve->add_option("--ui-dir", serve_ui, "directory with the static UI bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*build) {
      const FamilySpec spec = build_family_flags.spec();
      write_all(build_output, family_document(spec, build_family(spec).basis).dump(2) + "\n", out);
      return 0;
    }
    if (*apply) {
      const MoveSeq word = parse_moves(apply_moves);  // before reading any input
      const Basis start = load_basis(apply_family_flags, apply_input, in);
      const Basis result = apply_sequence(start, word);
      write_all(apply_output, basis_to_json(result).dump(2) + "\n", out);
      return 0;
    }
    if (*verify) {
      if (!check_m.empty()) check.m = parse_integer_flag(check_m, "--m");
      const auto reports = run_named_check(verify_name, check);
      const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
      if (verify_json) {
        json list = json::array();
        for (const auto& r : reports) list.push_back(report_to_json(r));
        out << list.dump(2) << "\n";
      } else {
        out << render_reports(reports, verify_verbose);
      }
      return passed ? 0 : 1;
    }
    if (*search) {
      std::optional<MoveSeq> scramble;
      if (!search_scramble.empty()) scramble = parse_moves(search_scramble);
      const std::vector<MoveRange> ranges = search_moves.empty() ? std::vector<MoveRange>{} : parse_move_set(search_moves);
      if (!scramble && search_to.empty()) throw UsageError("search needs --to or --scramble");
      const Basis start = load_basis(search_family_flags, search_from, in);
      SearchProblem problem{start, {}, std::nullopt, search_depth, ranges,
                            search_mode == "exact" ? SearchMode::ExactBasis : SearchMode::GramOnly};
      if (scramble) {
        const Basis target = apply_sequence(start, *scramble);
        problem.target_gram = gram_of_basis(target);
        problem.target_rows = target.rows();
      } else {
        const json doc = read_json(search_to, in);
        if (doc.is_object() && doc.contains("gram") && !doc.contains("refGram")) {
          problem.target_gram = matrix_from_json(doc.at("gram"));
        } else {
          const Basis target = basis_from_json(doc);
          problem.target_gram = gram_of_basis(target);
          problem.target_rows = target.rows();
        }
      }
      const auto found = find_sequence(problem);
      out << (found ? format_moves(*found) : std::string("none")) << "\n";
      return 0;
    }
    if (*exp) {
      const Basis b = load_basis(export_family_flags, export_input, in);
      const Diagram d = diagram_from_gram(gram_of_basis(b));
      out << (export_format == "dot" ? to_dot(d, export_name) : diagram_to_json(d).dump(2) + "\n");
      return 0;
    }
    if (*serve) {
      if (!serve_ui.empty() && !std::filesystem::is_directory(serve_ui))
        throw UsageError("--ui-dir '" + serve_ui + "' is not a directory");
      Service service;
      HttpServer server(service, serve_ui.empty() ? std::nullopt : std::optional<std::string>(serve_ui));
      if (!server.bind(serve_host, serve_port)) {
        err << "error: cannot listen on " << serve_host << ":" << serve_port << " (port busy?)\n";
        return 1;
      }
      err << "listening on http://" << serve_host << ":" << server.port() << "\n";
      return server.run() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "FormatError: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace milnor::tools
