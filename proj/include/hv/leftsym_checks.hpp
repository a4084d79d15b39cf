#pragma once

#include <vector>

#include "hv/graded_system.hpp"
#include "hv/leftsym.hpp"
#include "hv/linear_map.hpp"

namespace hv {

/// Output strata of an element: L/I part and the three central coordinates.
struct Strata {
  Element noncentral;
  Scalar c1;
  Scalar c2;
  Scalar c3;

  bool zero() const { return noncentral.is_zero() && c1.is_zero() && c2.is_zero() && c3.is_zero(); }
};

Strata split_strata(const Element& x);

/// (x.y).z - x.(y.z) - (y.x).z + y.(x.z) on every ordered triple of W(N),
/// centrals included. Throws InvalidArgument for inadmissible parameters.
CheckReport is_left_symmetric(const LeftSymParams& p, const Window& w);

struct PairResidual {
  BasisKey a;
  BasisKey b;
  Strata residual;
};

/// (x.y - y.x) - [x, y] per ordered basis pair, split into strata.
std::vector<PairResidual> subadjacent_residual(const LeftSymParams& p, const Window& w);

struct InheritanceReport {
  CheckReport left_symmetric;  // d as a derivation of the product
  CheckReport commutator;      // d as a derivation of x.y - y.x
  /// False only when d derives the product but not its commutator.
  bool implication_holds() const { return !left_symmetric.passed || commutator.passed; }
};

InheritanceReport check_derivation_inheritance(const LinearMap& d, const LeftSymParams& p, const Window& w);

/// Biderivations of the left-symmetric quotient algebra on W(N), projected
/// to W(N_int).
GradedSpace leftsym_biderivation_oracle(const LeftSymParams& p, const Window& w, const Window& interior,
                                        std::int64_t out_bound, std::optional<std::int64_t> degree);

}  // namespace hv
