#pragma once

#include <optional>
#include <set>

#include "hv/bilinear_map.hpp"
#include "hv/graded_system.hpp"

namespace hv {

struct BiderivationSolve {
  ProductKind product = ProductKind::lie_hv();
  Window window;
  /// Output keys of f are limited to |index| <= out_bound; needs M >= 2N.
  std::int64_t out_bound = 2;
  /// Solve one graded component only. Without it, every degree with
  /// |d| <= M - 2N is solved (a direct summand of the full space).
  std::optional<std::int64_t> degree;
  /// Adds f(x, y) = f(y, x) rows (commutative products).
  bool symmetric = false;
};

/// Nullspace of every admissible instance of the two biderivation identities
/// on W(N). Unknowns are the coefficients of f(b_i, b_j) for non-central
/// window keys; central arguments are pinned to zero. Throws InvalidArgument
/// for M < 2N and InfeasibleWindow when no row can be generated.
GradedSpace solve_biderivations(const BiderivationSolve& request);

/// Restriction to the coordinates f(b_i, b_j) with b_i, b_j in W(N_int),
/// re-canonicalized. Needs N_int <= N - 1.
GradedSpace interior_projection(const GradedSpace& s, const Window& interior);

/// Span of lambda*[x,y] (when with_lambda) and r_{k} for each offset k,
/// written in the coordinates of `target`.
GradedSpace classified_span(const GradedSpace& target, const ProductKind& product,
                            const std::set<std::int64_t>& offsets, bool with_lambda = true);

/// Tabular map from a solution vector. Pairs that have a coordinate beyond
/// the output bound are left out of the domain; central pairs map to zero.
TabularBi rehydrate(const GradedSpace& s, const SparseVector& v);

/// Drops the C1, C2, C3 output coordinates (the quotient map to W(0,0)).
GradedSpace drop_central_outputs(const GradedSpace& s);

}  // namespace hv
