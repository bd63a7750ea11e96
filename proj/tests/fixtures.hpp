// Shared fixture loading for the test suites.
#pragma once

#include <stdexcept>
#include <string>

#include "gentle/io.hpp"
#include "gentle/presentation.hpp"

namespace fixtures {

inline gentle::ParseResult try_load(const std::string& name) {
    return gentle::parse_presentation_file(std::string(GENTLE_DATA_DIR) + "/" + name + ".gentle");
}

inline gentle::GentlePresentation load(const std::string& name) {
    auto res = try_load(name);
    if (!res.ok()) {
        std::string msg = "fixture '" + name + "' failed to load:";
        for (const auto& d : res.diagnostics) msg += " " + d.message;
        throw std::runtime_error(msg);
    }
    return std::move(*res.presentation);
}

// The one-cycle family built programmatically (n >= 1; n = 1 yields the
// degenerate loop that validation rejects).
inline gentle::RawPresentation cyc_raw(unsigned n) {
    gentle::RawPresentation raw;
    for (unsigned i = 0; i < n; ++i) raw.quiver.vertices.push_back("g" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i)
        raw.quiver.arrows.push_back({"al" + std::to_string(i), static_cast<gentle::VertexId>(i - 1),
                                     static_cast<gentle::VertexId>(i % n)});
    for (unsigned i = 1; i + 1 <= n; ++i)
        raw.relations.push_back({static_cast<gentle::ArrowId>(i - 1), static_cast<gentle::ArrowId>(i)});
    return raw;
}

} // namespace fixtures
