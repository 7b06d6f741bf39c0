#pragma once

#include <cstdint>

#include "bforge/binomial_system.hpp"
#include "bforge/ideal.hpp"

namespace bforge {

// Deterministic fixture generators for the verification suites. Equal seeds
// give byte-identical objects on every platform.

// Homogeneous rlex ideal: up to max_gens generators, each a 1..3 term form
// of degree 1..max_degree with small nonzero coefficients.
Ideal random_homogeneous_ideal(int width, int max_gens, int max_degree,
                               std::uint64_t seed);

// Valid oriented system in n variables at the given degree. Draws a short
// elementary move and a small agreeing batch C, then completes A from the
// closure of C and its shift; falls back to a single fixed row when the
// draws keep colliding, so the call always terminates. require_good forces
// agreement below the pivot.
BinomialSystem random_binomial_system(int n, int d, std::uint64_t seed,
                                      bool require_good = true);

}  // namespace bforge
