#pragma once

// Exact text serialization: point configurations, polytopes, parameter
// files (JSON), and the experiment report emitted by the CLI.  Every
// number is a rational rendered "p/q" (or "p"); floats never appear.

#include "assoc/pointconfig.hpp"
#include "assoc/polytope.hpp"
#include "assoc/realizations.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace assoc {

void write_point_config(std::ostream& out, const PointConfig2D& config);

/// Parses the assoc-pointconfig format and validates the configuration.
/// Throws std::invalid_argument with a diagnostic on malformed input.
PointConfig2D read_point_config(std::istream& in);

void write_polytope(std::ostream& out, const Polytope& p);

/// Parses the assoc-polytope format and re-validates the structural
/// invariants (facet inequalities, incidence exactness, affine hull
/// consistency).  Throws std::invalid_argument on any violation.
Polytope read_polytope(std::istream& in);

/// JSON parameter files:  {"n": 2, "f": {"1,2": "3/2", ...}}  for cluster,
/// {"n": 2, "alpha": {"1,2": "1", ...}} (or {"alpha": {"all": "1"}}) for
/// the Minkowski weights.
ClusterParams read_cluster_params(std::istream& in);
MinkowskiParams read_minkowski_params(std::istream& in);

/// One experiment = one command invocation.  Serialization is
/// deterministic for fixed inputs; wall-clock timing is therefore NOT part
/// of the serialized report (the CLI prints it to stderr instead).
struct ExperimentReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  long long timing_ms = 0;

  bool all_checks_pass() const;
};

/// Deterministic textual form (excludes timing_ms by design).
std::string to_text(const ExperimentReport& report);

}  // namespace assoc
