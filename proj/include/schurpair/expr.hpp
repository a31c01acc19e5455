#pragma once

// Surface syntax for group specs, matching the printed form of to_expr:
//
//   expr := term ("x" term)*
//   term := atom ("^" "(" int ")")?
//   atom := "Z(p)" | "Z(p^" int ")" | catalog-id | "1"
//
// Whitespace is ignored everywhere, so "Q8xZ(p)" and "Q8 x Z(p)" are the same
// text. Catalog ids are matched longest-first.

#include <string_view>

#include "schurpair/catalog.hpp"

namespace schurpair {

/// Throws SyntaxError (with column and expected tokens), TwoNonabelianBases,
/// PrimeConstraintViolation, MissingFixture, UnknownId.
GroupSpec parse_group_expr(std::string_view text, Prime p, const Catalog& catalog);

}  // namespace schurpair
