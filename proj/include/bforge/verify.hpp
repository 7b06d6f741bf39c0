#pragma once

#include <string>
#include <vector>

#include "bforge/binomial_system.hpp"
#include "bforge/io.hpp"

namespace bforge {

// Outcome of one verification suite: a flat list of named checks.
struct SuiteReport {
  std::string suite;
  std::vector<Check> items;

  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
  std::string to_string() const;
};

// Registered suite names in their fixed execution order; "all" chains them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite under the given configuration. Unknown names raise a Parse
// error; internal failures that prevent a verdict propagate as errors.
SuiteReport run_suite(const std::string& name, const WorkspaceConfig& config);

// Shared worked fixtures. The width-4 family: a saturated ideal with one
// quadric relation, its Borel rlex initial, a bridging ideal whose hlex
// initial saturates to the lex ceiling, and the two lex bounds with equal
// Hilbert polynomial. The width-5 system is the non-good configuration
// whose generic and plain initial ideals differ in exactly two generators.
namespace fixtures {

const NamedRing& ring4();
const NamedRing& ring5();

Ideal anchor_ideal();
MonomialIdeal anchor_initial();
Ideal bridge_ideal();
MonomialIdeal lex_floor();
MonomialIdeal lex_ceiling();

BinomialSystem cubic_system();
std::string cubic_system_generators();

BinomialSystem divergent_system();
const std::vector<Exponent>& divergent_gin_rows();
const std::vector<Exponent>& divergent_init_rows();

}  // namespace fixtures

}  // namespace bforge
