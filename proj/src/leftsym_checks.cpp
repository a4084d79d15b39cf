#include "hv/leftsym_checks.hpp"

#include "hv/biderivations.hpp"
#include "hv/errors.hpp"

namespace hv {

Strata split_strata(const Element& x) {
  Strata s;
  s.noncentral = project_w00(x);
  s.c1 = x.coeff(BasisKey::C1());
  s.c2 = x.coeff(BasisKey::C2());
  s.c3 = x.coeff(BasisKey::C3());
  return s;
}

CheckReport is_left_symmetric(const LeftSymParams& p, const Window& w) {
  if (!params_valid(p)) throw InvalidArgument("inadmissible epsilon " + format_scalar(p.epsilon));
  auto triples = ordered_tuples(window_basis(w, true), 3);
  return run_checks(triples, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    r.checked = 1;
    Element x(t[0]);
    Element y(t[1]);
    Element z(t[2]);
    auto m = [&p](const Element& a, const Element& b) { return ls_product(p, a, b); };
    Element residual = m(m(x, y), z) - m(x, m(y, z)) - m(m(y, x), z) + m(y, m(x, z));
    if (!residual.is_zero()) r.failures.push_back({t, "left-symmetric", std::move(residual)});
    return r;
  });
}

std::vector<PairResidual> subadjacent_residual(const LeftSymParams& p, const Window& w) {
  if (!params_valid(p)) throw InvalidArgument("inadmissible epsilon " + format_scalar(p.epsilon));
  auto pairs = ordered_tuples(window_basis(w, true), 2);
  return parallel_map(pairs.size(), [&](std::size_t i) {
    const BasisKey& a = pairs[i][0];
    const BasisKey& b = pairs[i][1];
    Element commutator = ls_basis_product(p, a, b) - ls_basis_product(p, b, a);
    return PairResidual{a, b, split_strata(commutator - basis_bracket(AlgebraKind::HV, a, b))};
  });
}

InheritanceReport check_derivation_inheritance(const LinearMap& d, const LeftSymParams& p, const Window& w) {
  Product product = make_product(ProductKind::left_sym(p));
  InheritanceReport out;
  out.left_symmetric = is_derivation(d, product, w);
  out.commutator = is_derivation(d, commutator_of(product), w);
  return out;
}

GradedSpace leftsym_biderivation_oracle(const LeftSymParams& p, const Window& w, const Window& interior,
                                        std::int64_t out_bound, std::optional<std::int64_t> degree) {
  BiderivationSolve req;
  req.product = ProductKind::left_sym_quotient(p);
  req.window = w;
  req.out_bound = out_bound;
  req.degree = degree;
  return interior_projection(solve_biderivations(req), interior);
}

}  // namespace hv
