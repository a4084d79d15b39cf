#pragma once

#include <map>

#include "hv/graded_system.hpp"
#include "hv/linear_map.hpp"

namespace hv {

/// lambda * id + tau, tau center-valued. Throws NotCentral.
LinearMap make_commuting(const Scalar& lambda, std::map<BasisKey, Element> tau);

/// [phi(b_i), b_j] + [phi(b_j), b_i] = 0 on every unordered pair of W(N) in
/// the full algebra. Throws DomainNotCovered for tabular gaps.
CheckReport is_commuting(const LinearMap& phi, const Window& w);

/// Nullspace of the polarized identity for phi on W(N), with phi(b) on
/// output keys |index| <= 2N plus C1, C2, C3, degrees |d| <= N.
GradedSpace solve_commuting(const Window& w);

/// Keeps the coordinates phi(b) for non-central b in W(N_int); N_int <= N-1.
GradedSpace commuting_interior(const GradedSpace& s, const Window& interior);

/// Span of id and of every b -> c (b non-central in the target, c in the
/// center basis), in the target's coordinates.
GradedSpace commuting_generator_span(const GradedSpace& target);

/// 1 + 4 * |non-central basis of W(N_int)|.
std::size_t expected_commuting_dimension(const Window& interior);

}  // namespace hv
