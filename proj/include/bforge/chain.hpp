#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/ideal.hpp"

namespace bforge {

// The four deformation moves a chain edge may claim.
enum class ChainRelation { InitRlex, InitHlex, GinRlex, SatInitHlex };

// Accepts "init_rlex", "init_hlex", "gin_rlex", "sat_init_hlex".
ChainRelation relation_from_name(const std::string& name);
const char* relation_name(ChainRelation relation);

struct ChainEdge {
  ChainRelation relation;
  Ideal source;
  Ideal expected;
  // "=", "<" or "<=", compared against the computed annotation; "<=" accepts
  // both of the others.
  std::optional<std::string> required_annotation;
  std::string label;
};

struct ChainEdgeResult {
  ChainRelation relation;
  std::string label;
  bool ideal_matches = false;
  // Pointwise relation of the source's Hilbert function to the computed
  // target's: "=", "<", ">" or "incomparable".
  std::string annotation;
  bool annotation_ok = false;
  Ideal computed;

  bool ok() const { return ideal_matches && annotation_ok; }
};

struct ChainReport {
  std::vector<ChainEdgeResult> edges;

  bool all_ok() const;
};

// Recomputes each edge and compares against the expectation; Hilbert
// functions are compared degreewise through the bound.
ChainReport verify_chain(const std::vector<ChainEdge>& edges, int bound = 10,
                         uint64_t seed = 1, const Limits& lim = {});

}  // namespace bforge
