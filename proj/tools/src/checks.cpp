#include "milnor_tools/checks.hpp"

#include "milnor/diagram.hpp"
#include "milnor/families.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace milnor::tools {

namespace {

using Triple = std::array<int, 3>;

const std::vector<Triple> kSameDiagramTriples{{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
const std::vector<Triple> kOrderingTriples{{3, 3, 3}, {2, 4, 4}, {2, 3, 6}, {4, 3, 3}, {5, 4, 2}, {7, 3, 2}};
const std::vector<Triple> kAbb15Triples{{2, 3, 7}, {2, 4, 5}, {3, 3, 4}};
const std::vector<Triple> kSemidefiniteTriples{{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};

std::optional<Triple> triple_of(const CheckOptions& o) {
  const int given = int(o.p.has_value()) + int(o.q.has_value()) + int(o.r.has_value());
  if (given == 0) return std::nullopt;
  if (given != 3) throw UsageError("--p, --q and --r must be given together");
  return Triple{*o.p, *o.q, *o.r};
}

std::vector<TsCase> cases_of(const CheckOptions& o) {
  if (!o.case_name) return {kTsCases.begin(), kTsCases.end()};
  try {
    return {parse_ts_case(*o.case_name)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Triple> triples_or(const CheckOptions& o, const std::vector<Triple>& defaults) {
  if (auto t = triple_of(o)) return {*t};
  return defaults;
}

std::string render_value(const StageValue& v) {
  if (const auto* d = std::get_if<Diagram>(&v)) {
    std::ostringstream os;
    os << "mu=" << d->mu() << " {";
    bool first = true;
    for (const auto& [key, w] : d->weights()) {
      os << (first ? "" : " ") << key.first << "-" << key.second << ":" << w;
      first = false;
    }
    os << "}";
    return os.str();
  }
  if (const auto* m = std::get_if<IntMatrix>(&v)) return to_string(*m);
  return std::get<Integer>(v).str();
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"prop1",      "remark1",    "prop2",   "ordering",    "thm2",
                                              "minimality", "hyperbolic", "witness", "entry-bound", "all"};
  return names;
}

std::vector<VerificationReport> run_named_check(const std::string& name, const CheckOptions& o) {
  std::vector<VerificationReport> out;
  try {
    if (name == "prop1") {
      out.push_back(check_triple_orbit(o.kmax.value_or(100)));
    } else if (name == "remark1") {
      out.push_back(check_triple_hyperbolic_plane());
    } else if (name == "prop2") {
      for (const auto& [p, q, r] : triples_or(o, kSameDiagramTriples))
        out.push_back(check_same_diagram_orbit({Family::GabrielovT, p, q, r}, o.kmax.value_or(50)));
    } else if (name == "ordering") {
      std::vector<OrderingVariant> variants{OrderingVariant::GabrielovToT, OrderingVariant::Kluitmann,
                                            OrderingVariant::Abb15ToS};
      if (o.variant) variants = {parse_ordering_variant(*o.variant)};
      for (OrderingVariant v : variants) {
        const auto& defaults = v == OrderingVariant::GabrielovToT ? kOrderingTriples
                               : v == OrderingVariant::Kluitmann  ? kSameDiagramTriples
                                                                  : kAbb15Triples;
        for (const auto& [p, q, r] : triples_or(o, defaults)) out.push_back(check_ordering(v, p, q, r));
      }
    } else if (name == "thm2") {
      for (TsCase c : cases_of(o)) out.push_back(check_t_to_s(c));
    } else if (name == "minimality") {
      for (TsCase c : cases_of(o)) out.push_back(check_minimality(c));
    } else if (name == "hyperbolic") {
      for (TsCase c : cases_of(o)) out.push_back(check_e_hyperbolic_plane(c));
    } else if (name == "witness") {
      if (o.m) {
        out.push_back(check_witness(*o.m));
      } else {
        for (int m : {0, 1, -5}) out.push_back(check_witness(m));
      }
    } else if (name == "entry-bound") {
      for (const auto& [p, q, r] : triples_or(o, kSemidefiniteTriples))
        out.push_back(check_entry_bound({Family::T, p, q, r}, o.orbits.value_or(100), o.length.value_or(12),
                                        o.seed.value_or(1)));
    } else if (name == "all") {
      out = run_all_checks();
    } else {
      std::string known;
      for (const auto& n : check_names()) known += (known.empty() ? "" : ", ") + n;
      throw UsageError("unknown check '" + name + "' (expected one of " + known + ")");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out;
}

std::string render_reports(const std::vector<VerificationReport>& reports, bool verbose) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.stages.size() << " stages)\n";
    for (const auto& s : r.stages) {
      if (!verbose && s.equal) continue;
      os << "  " << (s.equal ? "ok   " : "FAIL ") << s.label << "\n";
      if (!s.equal) {
        os << "    expected: " << render_value(s.expected) << "\n";
        os << "    actual:   " << render_value(s.actual) << "\n";
        const auto* de = std::get_if<Diagram>(&s.expected);
        const auto* da = std::get_if<Diagram>(&s.actual);
        if (de && da)
          if (auto diff = first_difference(*de, *da)) os << "    first difference: " << describe(*diff) << "\n";
      }
    }
    if (!r.notes.empty()) {
      std::istringstream notes(r.notes);
      for (std::string line; std::getline(notes, line);) os << "  note: " << line << "\n";
    }
  }
  os << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

}  // namespace milnor::tools
