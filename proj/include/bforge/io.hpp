#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bforge/binomial_system.hpp"
#include "bforge/chain.hpp"
#include "bforge/errors.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/ideal.hpp"

namespace bforge {

// Display names for the ring variables. Names are cosmetic: every internal
// structure works with positional indices, and parsing maps names back to
// positions.
struct NamedRing {
  int width = 0;
  std::vector<std::string> names;

  bool operator==(const NamedRing& other) const = default;
};

// x, y, z, t, u for up to five variables, x1..xn beyond that.
NamedRing default_ring(int width);

// Names for the combined substitution ring: Y variables column by column
// ("Y11", "Y12", "Y22", ...) followed by the X block.
NamedRing symbolic_ring(int n);

// "0,2,0,1" with optional surrounding brackets.
Exponent parse_exponent_csv(const std::string& text, int expected_width = -1);
std::string exponent_to_csv(const Exponent& e);

// Sum of +/- separated terms; a term is an optional rational coefficient and
// a *-separated product of var^power factors. Unknown names and negative
// powers are parse errors.
Polynomial parse_polynomial(const std::string& text, const NamedRing& ring,
                            const TermOrder& order);

std::string monomial_to_string(const Exponent& e, const NamedRing& ring);

// Terms rendered in descending rlex regardless of the attached order.
std::string polynomial_to_string(const Polynomial& f, const NamedRing& ring);

struct ParsedIdeal {
  NamedRing ring;
  Ideal ideal;
};

// "ring <n> <names...>" followed by "gen <polynomial>" lines. Blank lines
// and "#" comments are skipped. name labels diagnostics.
ParsedIdeal parse_ideal_text(const std::string& text, const std::string& name);
ParsedIdeal parse_ideal_file(const std::string& path);

// Canonical form: monic generators, zero generators dropped, duplicates
// merged, sorted by descending rlex leading term with ties broken by the
// full term list. Emitting a parsed canonical file reproduces it byte for
// byte.
std::string ideal_to_text(const Ideal& ideal, const NamedRing& ring);
std::string monomial_ideal_to_text(const MonomialIdeal& m,
                                   const NamedRing& ring);

// "nvars", "degree", "rho" plus repeated "A" / "C" rows, all entries space
// separated.
struct RawSystem {
  int n = 0;
  int d = 0;
  std::set<Exponent> a;
  std::set<Exponent> c;
  SignedExponent rho{std::vector<int>{}};
};

RawSystem parse_system_text(const std::string& text, const std::string& name);
RawSystem parse_system_file(const std::string& path);
std::string system_to_text(const BinomialSystem& sys);

// "ideal <path>" preloads a file; "edge <relation> <source> <expected>"
// adds a verification step. Paths are resolved against the chain file's
// directory.
std::vector<ChainEdge> load_chain_file(const std::string& path);

// Degree table followed by the stabilized polynomial when one is known.
std::string hilbert_to_text(const HilbertData& data,
                            const std::optional<RationalPoly>& poly);

// key = value settings; every key has a default so an empty file is valid.
struct WorkspaceConfig {
  int bound = 10;
  std::uint64_t seed = 1;
  long entropy_bound = 1000000;
  int retries = 3;
  long spair_budget = 200000;
  long enum_budget = 1000000;

  bool operator==(const WorkspaceConfig& other) const = default;

  Limits limits() const;
  std::string to_text() const;
};

WorkspaceConfig parse_config_text(const std::string& text,
                                  const std::string& name);

// Explicit path (must exist), else ./borel-forge.toml when present, else
// defaults; the BFORGE_SEED environment variable overrides the file seed.
WorkspaceConfig load_config(const std::optional<std::string>& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bforge
