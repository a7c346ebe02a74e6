// Text format for bound quiver presentations.
//
//   # comment
//   field Q            (or: field F 5)
//   vertex u v w
//   arrow a : u -> v
//   relation b.a       (traversal order: first a, then b)
//
// Identifiers match [A-Za-z_][A-Za-z0-9_]*.  The field line is optional and
// may be superseded by a command-line choice.  Parse errors carry the line
// number; semantic problems (unknown names, bad relations, an
// infinite-dimensional quotient) surface as SemanticError.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qhh/field.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

struct ParsedInput {
  Presentation pres;
  std::optional<FieldSpec> field;  // from the header line, if present
};

ParsedInput parse_dsl(const std::string& text);
ParsedInput parse_dsl_file(const std::string& path);

// Canonical serialization: field line (when given), vertices in index order,
// arrows in index order, relations in length-lex order.  Reparsing yields an
// identical presentation and identical serialization.
std::string serialize_dsl(const Presentation& p,
                          const std::optional<FieldSpec>& field = std::nullopt);

}  // namespace qhh
