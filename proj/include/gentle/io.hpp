// Presentation file format, serialization and JSON rendering.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/dimension.hpp"
#include "gentle/presentation.hpp"
#include "gentle/surface.hpp"

namespace gentle {

struct Diagnostic {
    enum class Kind { Parse, Gentleness } kind;
    int line = 0; // 0 when not tied to a line
    std::string message;
};

struct ParseResult {
    std::optional<GentlePresentation> presentation;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return presentation.has_value(); }
    // Exit-code convention: 2 on parse errors, 1 on gentleness violations.
    int exit_code() const;
};

// Line-oriented format: '#' comments; directives
//   vertex <id>...
//   arrow <id> <src> <tgt>
//   rel <a1> <a2>
// ids match [A-Za-z0-9_']+ and must be declared before use.
ParseResult parse_presentation(const std::string& text);
ParseResult parse_presentation_file(const std::string& path);

std::string serialize(const GentlePresentation& A);
std::string serialize(const RawPresentation& raw);

// JSON fragments following the fixed schemas.
std::string dim_json(Dim d);                    // {"value": N | "infinity"}
std::string ag_json(const AGInvariant& phi);    // {"pairs": [[m,n],...]}

} // namespace gentle
