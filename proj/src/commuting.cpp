#include "hv/commuting.hpp"

#include <set>

#include "hv/errors.hpp"

namespace hv {

LinearMap make_commuting(const Scalar& lambda, std::map<BasisKey, Element> tau) {
  return LinearMap(ScalarId{lambda}) + LinearMap(make_central(std::move(tau)));
}

CheckReport is_commuting(const LinearMap& phi, const Window& w) {
  const auto keys = window_basis(w, true);
  std::vector<std::vector<BasisKey>> pairs;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j) pairs.push_back({keys[i], keys[j]});
  for (const auto& k : keys) apply(phi, Element(k));  // surfaces DomainNotCovered
  return run_checks(pairs, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    r.checked = 1;
    Element a(t[0]);
    Element b(t[1]);
    Element residual = bracket(AlgebraKind::HV, apply(phi, a), b) +
                       bracket(AlgebraKind::HV, apply(phi, b), a);
    if (!residual.is_zero()) r.failures.push_back({t, "polarized-commuting", std::move(residual)});
    return r;
  });
}

GradedSpace solve_commuting(const Window& w) {
  const std::int64_t n = w.n_max;
  GradedLayout layout;
  layout.map_name = "phi";
  layout.arity = 1;
  layout.domain = window_basis(w, true);
  layout.pin_centrals = false;
  layout.central_outputs = true;
  layout.bound = 2 * n;
  for (std::int64_t d = -n; d <= n; ++d) layout.degrees.push_back(d);
  GradedSystem sys(layout);

  const auto& keys = layout.domain;
  std::vector<std::pair<BasisKey, BasisKey>> pairs;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j) pairs.emplace_back(keys[i], keys[j]);

  std::vector<SparseVector> rows;
  for (auto d : layout.degrees) {
    auto blocks = parallel_map(pairs.size(), [&](std::size_t i) {
      const auto& [a, b] = pairs[i];
      auto e = sys.equation(d);
      e.add({a}, Scalar(1), [&](const BasisKey& s) { return basis_bracket(AlgebraKind::HV, s, b); });
      e.add({b}, Scalar(1), [&](const BasisKey& s) { return basis_bracket(AlgebraKind::HV, s, a); });
      return e.rows();
    });
    for (auto& block : blocks)
      for (auto& r : block) rows.push_back(std::move(r));
  }
  SparseMatrix mat(sys.nvars());
  const std::size_t nrows = rows.size();
  for (auto& r : rows) mat.add_row(std::move(r));

  GradedSpace out;
  out.window = w;
  out.layout = layout;
  out.coords = sys.coordinates();
  out.constraint_rows = nrows;
  out.space = nullspace(mat, sys.registry());
  return out;
}

GradedSpace commuting_interior(const GradedSpace& s, const Window& interior) {
  if (interior.n_max < 1 || interior.n_max > s.window.n_max - 1)
    throw InvalidArgument("interior window must satisfy 1 <= N_int <= N - 1");
  GradedSpace out = restrict_arguments(s, [&](const BasisKey& k) {
    return !k.is_central_symbol() && interior.contains(k);
  });
  out.window = interior;
  return out;
}

GradedSpace commuting_generator_span(const GradedSpace& target) {
  std::vector<std::function<Scalar(const Coordinate&)>> gens;
  auto generator = [](LinearMap m) {
    return [m = std::move(m)](const Coordinate& c) { return apply(m, Element(c.args[0])).coeff(c.out); };
  };
  gens.push_back(generator(ScalarId{Scalar(1)}));
  std::set<BasisKey> inputs;
  for (const auto& c : target.coords) inputs.insert(c.args[0]);
  for (const auto& b : inputs) {
    for (const auto& z : center_basis(AlgebraKind::HV)) gens.push_back(generator(make_central({{b, z}})));
  }
  return graded_span(target, gens);
}

std::size_t expected_commuting_dimension(const Window& interior) {
  return 1 + 4 * window_core(interior).size();
}

}  // namespace hv
