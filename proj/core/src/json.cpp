#include "milnor/json.hpp"

#include "milnor/errors.hpp"

#include <memory>

namespace milnor {

using nlohmann::json;

namespace {

const Integer& safe_limit() {
  static const Integer limit = (Integer(1) << 53) - 1;
  return limit;
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x <= safe_limit() && x >= -safe_limit()) return json(x.convert_to<long long>());
  return json(x.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw FormatError("'" + s + "' is not a decimal integer");
    return Integer(s);
  }
  throw FormatError("expected an integer, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw FormatError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

json basis_to_json(const Basis& b) {
  return json{{"mu", b.size()}, {"refGram", matrix_to_json(b.lattice().ref_gram())}, {"rows", matrix_to_json(b.rows())}};
}

Basis basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("refGram")) throw FormatError("basis document needs a \"refGram\" key");
  auto lattice = std::make_shared<const Lattice>(matrix_from_json(j.at("refGram")));
  if (j.contains("mu") && j.at("mu").get<std::size_t>() != lattice->rank())
    throw DimensionError("\"mu\" does not match the size of \"refGram\"");
  if (!j.contains("rows")) return Basis::identity(lattice);
  return Basis(lattice, matrix_from_json(j.at("rows")));
}

json diagram_to_json(const Diagram& d) {
  json edges = json::array();
  for (const auto& [key, w] : d.weights()) edges.push_back(json::array({key.first, key.second, integer_to_json(w)}));
  return json{{"mu", d.mu()}, {"edges", std::move(edges)}};
}

Diagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mu")) throw FormatError("diagram document needs a \"mu\" key");
  Diagram d(j.at("mu").get<std::size_t>());
  if (!j.contains("edges")) return d;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw FormatError("edge must be [i, j, w]");
    const int a = e[0].get<int>();
    const int b = e[1].get<int>();
    const Integer w = integer_from_json(e[2]);
    if (a >= b) throw FormatError("edge [i, j, w] requires i < j");
    if (w == 0) throw FormatError("edge weight must be nonzero");
    d.set_weight(a, b, w);
  }
  return d;
}

json stage_value_to_json(const StageValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Diagram>)
          return json{{"diagram", diagram_to_json(x)}};
        else if constexpr (std::is_same_v<T, IntMatrix>)
          return json{{"matrix", matrix_to_json(x)}};
        else
          return json{{"integer", integer_to_json(x)}};
      },
      v);
}

json report_to_json(const VerificationReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back(json{{"label", s.label},
                          {"expected", stage_value_to_json(s.expected)},
                          {"actual", stage_value_to_json(s.actual)},
                          {"equal", s.equal}});
  }
  return json{{"name", r.name}, {"passed", r.passed}, {"stages", std::move(stages)}, {"notes", r.notes}};
}

}  // namespace milnor
