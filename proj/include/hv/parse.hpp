#pragma once

#include <optional>
#include <string_view>

#include "hv/bilinear_map.hpp"
#include "hv/leftsym.hpp"
#include "hv/linear_map.hpp"

namespace hv {

// Grammar (whitespace-insensitive):
//   scalar  := part | '(' part (('+'|'-') part)* ')'
//   part    := ['-'] (rational ['i'] | 'i')          rational := int ['/' int]
//   basis   := 'L(' int ')' | 'I(' int ')' | 'C1' | 'C2' | 'C3'
//   element := ['-'] term (('+'|'-') term)*          term := [scalar '*'] basis | '0'
//   expr    := ['-'] prod (('+'|'-') prod)*          prod := unary ('o' unary)*
//   unary   := [scalar '*'] atom                     atom := basis | '0' | '[' expr ',' expr ']' | '(' expr ')'

BasisKey parse_key(std::string_view text);
Element parse_element(std::string_view text);

struct ExpressionContext {
  AlgebraKind bracket = AlgebraKind::HV;
  /// Needed for the left-symmetric product 'x o y'.
  std::optional<LeftSymParams> leftsym;
};

/// Element grammar plus brackets [x, y], products x o y and parentheses.
Element parse_expression(std::string_view text, const ExpressionContext& ctx = {});

/// Linear map file: "KEY -> element" lines and the directives @inner
/// <element>, @d1/@d2/@d3/@id <scalar>, @central KEY -> element, and
/// @domain N (tabular domain = W(N), unlisted keys map to 0). '#' starts a
/// comment. @inner uses the bracket of `inner_kind`.
LinearMap parse_linear_map(std::string_view text, AlgebraKind inner_kind = AlgebraKind::HV);

/// Bilinear map file: "(KEY, KEY) -> element" lines and the directives
/// @inner <scalar>, @romega { k: scalar, ... } and @domain N.
BilinearMap parse_bilinear_map(std::string_view text);

}  // namespace hv
