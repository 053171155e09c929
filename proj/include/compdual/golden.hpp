#pragma once

// Replays every worked example (operator values, operator expansions,
// commutators, the Phi example and the non-transitivity witness) against
// embedded expected values.

#include <string>
#include <vector>

namespace compdual {

struct GoldenResult {
    std::string group;
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

std::vector<GoldenResult> replay_examples();

}  // namespace compdual
