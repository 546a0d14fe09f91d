#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypiso/angroup.hpp"
#include "hypiso/moebius.hpp"
#include "hypiso/qmatrix.hpp"

namespace hypiso::cli {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct ParsedMatrix {
  QMatrix matrix;
  /// Where each entry started in the text, row-major.
  std::vector<SourceLocation> where;
};

/// First content line "n+1", then n+1 rows of n+1 entries ("p", "p/q" or a
/// finite decimal). Lines starting with '#' are comments. Throws ParseError.
ParsedMatrix parse_matrix_text(std::string_view text);

/// [[a, b], [c, d]] or [a, b, c, d]; each entry a rational string/number or
/// a [re, im] pair. Throws ParseError.
Moebius2 parse_moebius_json(std::string_view text, Orientation orientation);

/// {"a": [...], "r": "p/q"}. Throws ParseError.
ANElement parse_an_json(std::string_view text);

/// args excludes the program name. Returns the process exit code: 0 on
/// success, 2 on any error (a JSON error object is written to `out`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hypiso::cli
