#include "milnor/families.hpp"

#include "milnor/errors.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <vector>

namespace milnor {

namespace {

void chain(Diagram& d, const std::vector<int>& vertices) {
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) d.set_weight(vertices[k], vertices[k + 1], 1);
}

// head, then the consecutive run first..last (ascending or descending,
// possibly empty).
std::vector<int> arm(int head, int first, int last, bool ascending) {
  std::vector<int> v{head};
  if (ascending)
    for (int x = first; x <= last; ++x) v.push_back(x);
  else
    for (int x = first; x >= last; --x) v.push_back(x);
  return v;
}

Diagram family_diagram(const FamilySpec& s) {
  const int p = s.p, q = s.q, r = s.r;
  const int mu = static_cast<int>(s.mu());
  Diagram d(static_cast<std::size_t>(mu));
  switch (s.family) {
    case Family::GabrielovT:
      chain(d, arm(1, 6, p + 3, true));
      chain(d, arm(2, p + 4, p + q + 1, true));
      chain(d, arm(3, p + q + 2, p + q + r - 1, true));
      for (int v : {1, 2, 3}) {
        d.set_weight(4, v, 1);
        d.set_weight(5, v, 1);
      }
      d.set_weight(4, 5, -2);
      break;
    case Family::T:
      chain(d, arm(1, p, 2, false));
      chain(d, arm(1, p + q - 1, p + 1, false));
      chain(d, arm(1, p + q + r - 2, p + q, false));
      d.set_weight(1, mu, -2);
      for (int v : {p, p + q - 1, p + q + r - 2}) d.set_weight(v, mu, 1);
      break;
    case Family::Abb15:
      chain(d, arm(2, 7, p + 4, true));
      chain(d, arm(3, p + 5, p + q + 2, true));
      chain(d, arm(4, p + q + 3, p + q + r, true));
      for (int v : {2, 3, 4}) {
        d.set_weight(6, v, 1);
        d.set_weight(5, v, 1);
      }
      d.set_weight(6, 5, -2);
      d.set_weight(1, 5, 1);
      break;
    case Family::S:
      chain(d, arm(4, 7, p + 4, true));
      chain(d, arm(5, p + 5, p + q + 2, true));
      chain(d, arm(6, p + q + 3, p + q + r, true));
      for (int v : {4, 5, 6}) {
        d.set_weight(1, v, 1);
        d.set_weight(2, v, 1);
      }
      d.set_weight(1, 2, -2);
      d.set_weight(3, 2, 1);
      break;
  }
  return d;
}

}  // namespace

std::size_t FamilySpec::mu() const {
  const int base = p + q + r;
  return static_cast<std::size_t>(family == Family::GabrielovT || family == Family::T ? base - 1 : base);
}

FamilyInstance build_family(const FamilySpec& spec) {
  if (spec.p < 2 || spec.q < 2 || spec.r < 2)
    throw FamilyParamError(family_name(spec.family) + " requires p, q, r >= 2 (got " + std::to_string(spec.p) +
                           "," + std::to_string(spec.q) + "," + std::to_string(spec.r) + ")");
  Diagram d = family_diagram(spec);
  auto lattice = std::make_shared<const Lattice>(gram_from_diagram(d));
  Basis basis = Basis::identity(lattice);
  return FamilyInstance{*lattice, std::move(basis), std::move(d)};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::GabrielovT: return "GabrielovT";
    case Family::T: return "T";
    case Family::Abb15: return "Abb15";
    case Family::S: return "S";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "gabrielovt" || lower == "gabrielov") return Family::GabrielovT;
  if (lower == "t") return Family::T;
  if (lower == "abb15") return Family::Abb15;
  if (lower == "s") return Family::S;
  throw FamilyParamError("unknown family '" + std::string(name) + "' (expected GabrielovT, T, Abb15 or S)");
}

}  // namespace milnor
