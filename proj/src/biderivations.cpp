#include "hv/biderivations.hpp"

#include "hv/errors.hpp"

namespace hv {

GradedSpace solve_biderivations(const BiderivationSolve& req) {
  const std::int64_t n = req.window.n_max;
  const std::int64_t m = req.out_bound;
  if (n < 1) throw InvalidArgument("window N must be at least 1");
  if (m < 2 * n) throw InvalidArgument("out_bound M must be at least 2N");
  const Product product = make_product(req.product);

  GradedLayout layout;
  layout.map_name = "f";
  layout.arity = 2;
  layout.domain = window_basis(req.window, product.has_centrals());
  layout.pin_centrals = true;
  layout.central_outputs = product.has_centrals();
  layout.bound = m;
  if (req.degree) {
    layout.degrees = {*req.degree};
  } else {
    for (std::int64_t d = -(m - 2 * n); d <= m - 2 * n; ++d) layout.degrees.push_back(d);
  }
  GradedSystem sys(layout);

  const auto core = window_core(req.window);
  const auto triples = ordered_tuples(core, 3);
  std::vector<SparseVector> rows;
  for (auto d : layout.degrees) {
    auto per_triple = parallel_map(triples.size(), [&](std::size_t i) {
      const auto& t = triples[i];
      const BasisKey& x = t[0];
      const BasisKey& y = t[1];
      const BasisKey& z = t[2];
      std::vector<SparseVector> out;
      // f(x*y, z) - x*f(y,z) - f(x,z)*y = 0
      auto e1 = sys.equation(d);
      for (const auto& [k, c] : product.basis(x, y)) e1.add({k, z}, c);
      e1.add({y, z}, Scalar(-1), [&](const BasisKey& s) { return product.basis(x, s); });
      e1.add({x, z}, Scalar(-1), [&](const BasisKey& s) { return product.basis(s, y); });
      for (auto& r : e1.rows()) out.push_back(std::move(r));
      // f(x, y*z) - f(x,y)*z - y*f(x,z) = 0
      auto e2 = sys.equation(d);
      for (const auto& [k, c] : product.basis(y, z)) e2.add({x, k}, c);
      e2.add({x, y}, Scalar(-1), [&](const BasisKey& s) { return product.basis(s, z); });
      e2.add({x, z}, Scalar(-1), [&](const BasisKey& s) { return product.basis(y, s); });
      for (auto& r : e2.rows()) out.push_back(std::move(r));
      return out;
    });
    for (auto& block : per_triple)
      for (auto& r : block) rows.push_back(std::move(r));
    if (req.symmetric) {
      for (const auto& a : core) {
        for (const auto& b : core) {
          if (!(a < b)) continue;
          auto e = sys.equation(d);
          e.add({a, b}, Scalar(1));
          e.add({b, a}, Scalar(-1));
          for (auto& r : e.rows()) rows.push_back(std::move(r));
        }
      }
    }
  }
  if (rows.empty()) throw InfeasibleWindow("no admissible constraint rows for N = " + std::to_string(n));

  SparseMatrix mat(sys.nvars());
  const std::size_t nrows = rows.size();
  for (auto& r : rows) mat.add_row(std::move(r));

  GradedSpace out;
  out.window = req.window;
  out.layout = layout;
  out.coords = sys.coordinates();
  out.constraint_rows = nrows;
  out.space = nullspace(mat, sys.registry());
  return out;
}

GradedSpace interior_projection(const GradedSpace& s, const Window& interior) {
  if (interior.n_max < 1 || interior.n_max > s.window.n_max - 1)
    throw InvalidArgument("interior window must satisfy 1 <= N_int <= N - 1");
  GradedSpace out = restrict_arguments(s, [&](const BasisKey& k) { return interior.contains(k); });
  out.window = interior;
  return out;
}

GradedSpace classified_span(const GradedSpace& target, const ProductKind& product,
                            const std::set<std::int64_t>& offsets, bool with_lambda) {
  const Product p = make_product(product);
  std::vector<std::function<Scalar(const Coordinate&)>> gens;
  auto generator = [p](BilinearMap f) {
    return [p, f = std::move(f)](const Coordinate& c) {
      return eval(f, p, Element(c.args[0]), Element(c.args[1])).coeff(c.out);
    };
  };
  if (with_lambda) gens.push_back(generator(InnerBi{Scalar(1)}));
  for (auto k : offsets) gens.push_back(generator(ROmega{Omega{{k, Scalar(1)}}}));
  return graded_span(target, gens);
}

TabularBi rehydrate(const GradedSpace& s, const SparseVector& v) {
  const bool centrals = s.layout.central_outputs;
  TabularBi out;
  const auto keys = window_basis(s.window, centrals);
  for (const auto& a : keys) {
    for (const auto& b : keys) {
      bool covered = true;
      if (!a.is_central_symbol() && !b.is_central_symbol()) {
        for (auto d : s.layout.degrees)
          for (const auto& o : graded_outputs(s.layout, {a, b}, d))
            if (o.index < -s.layout.bound || o.index > s.layout.bound) covered = false;
      }
      if (covered) out.domain.insert({a, b});
    }
  }
  for (const auto& [i, c] : v) {
    const Coordinate& co = s.coords.at(i);
    out.table[{co.args[0], co.args[1]}].add_term(co.out, c);
  }
  std::erase_if(out.table, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

GradedSpace drop_central_outputs(const GradedSpace& s) {
  GradedSpace out;
  out.window = s.window;
  out.layout = s.layout;
  out.constraint_rows = s.constraint_rows;
  auto keep = [&](VarIndex i) { return !s.coords[i].out.is_central_symbol(); };
  out.space = restrict_coordinates(s.space, keep);
  for (VarIndex i = 0; i < s.coords.size(); ++i)
    if (keep(i)) out.coords.push_back(s.coords[i]);
  return out;
}

}  // namespace hv
