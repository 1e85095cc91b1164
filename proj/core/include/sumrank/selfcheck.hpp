#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gf_tower.hpp"

namespace sumrank {

struct CheckReport {
    std::string name;
    unsigned cases = 0;
    unsigned failures = 0;
};

/// Randomized algebraic property suite on a tower (N = m codes): CSC/left-ideal
/// equivalence, generator/check products, idempotent identities, CRT round trips,
/// dual-route total evaluation, the arithmetic/linearized evaluation identity, and
/// the product rule.  Deterministic for a fixed seed.
std::vector<CheckReport> run_property_suite(const Tower& tw, unsigned cases,
                                            std::uint64_t seed = 1);

}  // namespace sumrank
