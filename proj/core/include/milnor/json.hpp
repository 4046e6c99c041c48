#pragma once

// JSON documents exchanged by the CLI and the HTTP service. Integers whose
// magnitude exceeds 2^53 - 1 are written as decimal strings; both spellings
// are accepted on input.

#include "milnor/diagram.hpp"
#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"
#include "milnor/verify.hpp"

#include <json.hpp>

namespace milnor {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// {"mu": n, "refGram": [[...]], "rows": [[...]]}
nlohmann::json basis_to_json(const Basis& b);
// A missing "rows" key means the identity basis.
Basis basis_from_json(const nlohmann::json& j);

// {"mu": n, "edges": [[i, j, w], ...]} with i < j, w != 0.
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json stage_value_to_json(const StageValue& v);
// {"name", "passed", "stages": [{"label", "expected", "actual", "equal"}], "notes"}
nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace milnor
