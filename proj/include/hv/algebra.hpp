#pragma once

#include <vector>

#include "hv/element.hpp"

namespace hv {

/// HV is the full twisted Heisenberg-Virasoro algebra; W00 is its quotient by
/// span{C1, C2, C3}, where the three central terms of the bracket vanish.
enum class AlgebraKind { HV, W00 };

/// Bracket of two basis symbols. Throws IndexOverflow.
Element basis_bracket(AlgebraKind kind, const BasisKey& a, const BasisKey& b);

/// Bilinear extension of basis_bracket. For W00 the arguments must have no
/// C1/C2/C3 support (InvalidArgument otherwise).
Element bracket(AlgebraKind kind, const Element& x, const Element& y);

/// Drops the C1, C2, C3 coordinates.
Element project_w00(const Element& x);

/// HV: [I(0), C1, C2, C3]; W00: [I(0)].
std::vector<Element> center_basis(AlgebraKind kind);

bool has_central_symbols(const Element& x);

}  // namespace hv
