#pragma once

#include "milnor/errors.hpp"
#include "milnor/integer.hpp"
#include "milnor/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milnor::tools {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

// Optional parameters of a named check; unset fields fall back to the
// defaults of that check.
struct CheckOptions {
  std::optional<int> kmax;
  std::optional<int> p, q, r;
  std::optional<std::string> case_name;
  std::optional<std::string> variant;
  std::optional<Integer> m;
  std::optional<int> orbits;
  std::optional<int> length;
  std::optional<unsigned long long> seed;
};

// Names accepted by run_named_check, in display order.
const std::vector<std::string>& check_names();

// Throws UsageError for an unknown name or options that do not apply.
std::vector<VerificationReport> run_named_check(const std::string& name, const CheckOptions& options);

// Human-readable rendering; failing stages show expected and actual values.
std::string render_reports(const std::vector<VerificationReport>& reports, bool verbose);

}  // namespace milnor::tools
