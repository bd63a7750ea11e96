// Seeded random gentle presentations by rejection sampling; drives the
// property suites.
#pragma once

#include <cstdint>

#include "gentle/presentation.hpp"

namespace gentle {

struct GeneratorConfig {
    std::uint32_t vertex_count = 1;
    std::uint32_t target_arrow_count = 0; // 0: pick automatically
    std::uint64_t seed = 0;
    bool allow_full_cycles = true;
};

// Reproducible from the seed. Throws std::runtime_error when the
// sampling budget is exhausted; never returns an invalid presentation.
GentlePresentation gen_gentle(const GeneratorConfig& cfg);

} // namespace gentle
