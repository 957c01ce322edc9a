#pragma once

#include <string>
#include <string_view>

#include "kplab/matrix.hpp"

namespace kplab {

/// One row per line, entries as decimal integers or "p/q", single spaces.
std::string to_plain_text(const ExactMatrix& A);

/// Structured form:
///   order: 3
///   rows:
///   6 3 1
///   3 4 3
///   1 3 6
std::string to_structured_text(const ExactMatrix& A);

/// Parses either format (auto-detected by a leading "order:" field). Text
/// from '#' to end of line is a comment; blank lines are ignored. Throws
/// ParseError with a 1-based line/column position on malformed input,
/// including non-square shapes.
ExactMatrix parse_matrix(std::string_view text);

}  // namespace kplab
