#include "hv/postlie.hpp"

#include "hv/biderivations.hpp"
#include "hv/errors.hpp"

namespace hv {

CheckReport is_commutative_postlie(const BilinearMap& dot, const Window& w) {
  const Product lie = make_product(ProductKind::lie_hv());
  const auto keys = window_basis(w, true);
  for (const auto& a : keys)
    for (const auto& b : keys) (void)eval(dot, lie, Element(a), Element(b));

  auto D = [&](const std::optional<Element>& x, const std::optional<Element>& y) -> std::optional<Element> {
    if (!x || !y) return std::nullopt;
    return try_eval(dot, lie, *x, *y);
  };
  auto B = [&](const std::optional<Element>& x, const std::optional<Element>& y) -> std::optional<Element> {
    if (!x || !y) return std::nullopt;
    return lie(*x, *y);
  };

  std::vector<std::vector<BasisKey>> cases;
  for (const auto& a : keys)
    for (const auto& b : keys) cases.push_back({a, b});
  for (auto& t : ordered_tuples(keys, 3)) cases.push_back(std::move(t));

  return run_checks(cases, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    auto record = [&](const char* name, const std::optional<Element>& residual) {
      if (!residual) {
        ++r.skipped;
        return;
      }
      ++r.checked;
      if (!residual->is_zero()) r.failures.push_back({t, name, *residual});
    };
    auto diff = [](const std::optional<Element>& a, const std::optional<Element>& b) -> std::optional<Element> {
      if (!a || !b) return std::nullopt;
      return *a - *b;
    };
    if (t.size() == 2) {
      std::optional<Element> x = Element(t[0]);
      std::optional<Element> y = Element(t[1]);
      record("commutativity", diff(D(x, y), D(y, x)));
      return r;
    }
    std::optional<Element> x = Element(t[0]);
    std::optional<Element> y = Element(t[1]);
    std::optional<Element> z = Element(t[2]);
    // [x,y].z - x.(y.z) + y.(x.z)
    record("post-lie-left", diff(D(B(x, y), z), diff(D(x, D(y, z)), D(y, D(x, z)))));
    // x.[y,z] - [x.y, z] - [y, x.z]
    auto rhs = [&]() -> std::optional<Element> {
      auto a = B(D(x, y), z);
      auto b = B(y, D(x, z));
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }();
    record("post-lie-right", diff(D(x, B(y, z)), rhs));
    return r;
  });
}

Element postlie_residual(const Omega& omega) {
  const Element l1 = Element::L(1);
  const Element l2 = Element::L(2);
  const Element l3 = Element::L(3);
  auto dot = [&omega](const Element& x, const Element& y) { return r_omega(omega, x, y); };
  Element lhs = dot(bracket(AlgebraKind::HV, l2, l1), l3);
  Element rhs = dot(l2, dot(l1, l3)) - dot(l1, dot(l2, l3));
  return lhs - rhs;
}

std::vector<PostLieDegreeCheck> postlie_solver_cross_check(const Window& w, std::int64_t out_bound,
                                                           std::int64_t max_degree) {
  std::vector<PostLieDegreeCheck> out;
  for (std::int64_t d = -max_degree; d <= max_degree; ++d) {
    BiderivationSolve req;
    req.product = ProductKind::lie_hv();
    req.window = w;
    req.out_bound = out_bound;
    req.degree = d;
    req.symmetric = true;
    GradedSpace s = solve_biderivations(req);
    PostLieDegreeCheck c;
    c.degree = d;
    c.dimension = s.dim();
    for (const auto& v : s.space.basis) {
      if (is_commutative_postlie(rehydrate(s, v), w).passed) c.all_nontrivial_fail = false;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace hv
