#pragma once

#include "hv/element.hpp"

namespace hv {

/// Parameters (alpha, beta, epsilon) of the graded left-symmetric product.
struct LeftSymParams {
  Scalar alpha;
  Scalar beta;
  Scalar epsilon;

  friend bool operator==(const LeftSymParams&, const LeftSymParams&) = default;
};

/// (Re eps > 0 and 1/eps not an integer) or (Re eps = 0 and Im eps > 0).
bool params_valid(const LeftSymParams& p);

/// True iff 1 + eps*s != 0 for every index sum |s| <= reach.
bool window_safe(const LeftSymParams& p, std::int64_t reach);

/// Product of two basis symbols. Throws ZeroDenominator if 1 + eps*(m+n)
/// vanishes (only possible for inadmissible parameters).
Element ls_basis_product(const LeftSymParams& p, const BasisKey& a, const BasisKey& b);

Element ls_product(const LeftSymParams& p, const Element& x, const Element& y);

/// Product in the quotient by span{C1, C2, C3}.
Element ls_quotient_product(const LeftSymParams& p, const Element& x, const Element& y);

}  // namespace hv
