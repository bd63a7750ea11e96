// Small parsing helper kept out of the main header.
#pragma once

#include <string>
#include <vector>

#include "gentle/strings.hpp"

namespace gentle {

// Tokenizes walk syntax without validating the walk.
std::vector<Letter> parse_letters(const GentlePresentation& A, const std::string& text);

} // namespace gentle
