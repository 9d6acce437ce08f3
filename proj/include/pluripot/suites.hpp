#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pluripot/domain.hpp"
#include "pluripot/verify.hpp"

namespace pluripot {

struct SuiteOptions {
  std::optional<DomainSpec> domain;  // suite default when empty
  double r = 0.5;                    // annulus radius
  std::optional<double> tol;         // replaces every report tolerance
  int resolution = 0;                // starting quadrature resolution, 0 = default
  std::string u = "poisson";         // monge_ampere field: poisson | green
};

struct SuiteResult {
  std::string suite;
  std::vector<std::string> domains;
  std::vector<VerificationReport> reports;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
// Throws ConfigError for an unknown suite or an unsupported domain.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
nlohmann::json to_json(const SuiteResult& s, bool with_details = false);

// PLURIPOT_THREADS if set and positive, else hardware concurrency.
int worker_threads();
// Runs body(i) for i < n on the worker pool. The exception from the lowest
// failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pluripot
