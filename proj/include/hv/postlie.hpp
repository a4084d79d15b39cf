#pragma once

#include <vector>

#include "hv/bilinear_map.hpp"
#include "hv/graded_system.hpp"

namespace hv {

/// Checks x.y = y.x, [x,y].z = x.(y.z) - y.(x.z) and
/// x.[y,z] = [x.y, z] + [y, x.z] on the window of the full algebra.
/// Counterexamples are labelled "commutativity", "post-lie-left" and
/// "post-lie-right". Evaluations that leave a tabular domain are skipped;
/// a window pair outside the domain throws DomainNotCovered.
CheckReport is_commutative_postlie(const BilinearMap& dot, const Window& w);

/// [L2,L1].L3 - (L2.(L1.L3) - L1.(L2.L3)) for the product r_Omega.
Element postlie_residual(const Omega& omega);

struct PostLieDegreeCheck {
  std::int64_t degree = 0;
  std::size_t dimension = 0;
  /// Every basis solution violates some post-Lie identity on the window.
  bool all_nontrivial_fail = true;
};

/// Solves biderivation + commutativity rows on W(N) (N = 2 intended) per
/// degree and checks that no nonzero solution is a post-Lie product.
std::vector<PostLieDegreeCheck> postlie_solver_cross_check(const Window& w, std::int64_t out_bound,
                                                           std::int64_t max_degree);

}  // namespace hv
