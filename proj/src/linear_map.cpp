#include "hv/linear_map.hpp"

#include "hv/errors.hpp"
#include "hv/linalg.hpp"

namespace hv {

namespace {

Scalar idx(std::int64_t n) { return Scalar(mpq_class(mpz_class(static_cast<signed long>(n)))); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::optional<Element> apply_basis(const LinearMap& m, const BasisKey& k);

std::optional<Element> apply_linear(const LinearMap& m, const Element& x) {
  Element out;
  for (const auto& [k, c] : x) {
    auto v = apply_basis(m, k);
    if (!v) return std::nullopt;
    out.axpy(c, *v);
  }
  return out;
}

std::optional<Element> apply_basis(const LinearMap& m, const BasisKey& k) {
  return std::visit(
      overloaded{
          [&](const InnerAd& ad) -> std::optional<Element> {
            if (ad.kind == AlgebraKind::W00 && k.is_central_symbol()) return Element{};
            return bracket(ad.kind, ad.x, Element(k));
          },
          [&](const OuterD1& d) -> std::optional<Element> {
            if (k.kind == BasisKind::I) return Element(k, d.coeff);
            return Element{};
          },
          [&](const OuterD2& d) -> std::optional<Element> {
            if (k.kind == BasisKind::L) return Element::I(k.index, d.coeff * (idx(k.index) - Scalar(1)));
            return Element{};
          },
          [&](const OuterD3& d) -> std::optional<Element> {
            if (k.kind == BasisKind::L) return Element::I(k.index, d.coeff * idx(k.index));
            return Element{};
          },
          [&](const ScalarId& s) -> std::optional<Element> { return Element(k, s.lambda); },
          [&](const CentralMap& t) -> std::optional<Element> {
            auto it = t.table.find(k);
            return it == t.table.end() ? Element{} : it->second;
          },
          [&](const TabularMap& t) -> std::optional<Element> {
            if (!t.domain.count(k)) return std::nullopt;
            auto it = t.table.find(k);
            return it == t.table.end() ? Element{} : it->second;
          },
          [&](const SumMap& s) -> std::optional<Element> {
            Element out;
            for (const auto& term : s.terms) {
              auto v = apply_basis(term, k);
              if (!v) return std::nullopt;
              out += *v;
            }
            return out;
          },
      },
      m.node);
}

}  // namespace

bool is_central_value(const Element& v) {
  for (const auto& [k, c] : v)
    if (!(k.is_central_symbol() || k == BasisKey::I(0))) return false;
  return true;
}

CentralMap make_central(std::map<BasisKey, Element> table) {
  CentralMap out;
  for (auto& [k, v] : table) {
    if (!is_central_value(v)) throw NotCentral(format_key(k) + " -> " + format_element(v));
    if (!v.is_zero()) out.table.emplace(k, std::move(v));
  }
  return out;
}

LinearMap adjoint(AlgebraKind kind, const Element& x) {
  if (kind == AlgebraKind::W00 && has_central_symbols(x))
    throw InvalidArgument("W(0,0) elements cannot carry C1, C2, C3");
  return InnerAd{x, kind};
}

LinearMap operator+(LinearMap a, LinearMap b) {
  SumMap s;
  auto push = [&s](LinearMap m) {
    if (auto* inner = std::get_if<SumMap>(&m.node)) {
      for (auto& t : inner->terms) s.terms.push_back(std::move(t));
    } else {
      s.terms.push_back(std::move(m));
    }
  };
  push(std::move(a));
  push(std::move(b));
  return s;
}

LinearMap scaled(const Scalar& c, LinearMap m) {
  return std::visit(
      overloaded{
          [&](InnerAd ad) -> LinearMap {
            ad.x *= c;
            return ad;
          },
          [&](ScalarId s) -> LinearMap { return ScalarId{c * s.lambda}; },
          [&](CentralMap t) -> LinearMap {
            CentralMap out;
            for (auto& [k, v] : t.table)
              if (!c.is_zero()) out.table.emplace(k, c * v);
            return out;
          },
          [&](TabularMap t) -> LinearMap {
            TabularMap out;
            out.domain = t.domain;
            for (auto& [k, v] : t.table)
              if (!c.is_zero()) out.table.emplace(k, c * v);
            return out;
          },
          [&](SumMap s) -> LinearMap {
            SumMap out;
            for (auto& t : s.terms) out.terms.push_back(scaled(c, std::move(t)));
            return out;
          },
          [&](auto outer) -> LinearMap {
            outer.coeff *= c;
            return outer;
          },
      },
      std::move(m.node));
}

Element apply(const LinearMap& m, const Element& x) {
  for (const auto& [k, c] : x) {
    if (!apply_basis(m, k)) throw DomainNotCovered(format_key(k));
  }
  return *apply_linear(m, x);
}

std::optional<Element> try_apply(const LinearMap& m, const Element& x) { return apply_linear(m, x); }

TabularMap tabulate(const LinearMap& m, const std::vector<BasisKey>& keys) {
  TabularMap out;
  for (const auto& k : keys) {
    Element v = apply(m, Element(k));
    out.domain.insert(k);
    if (!v.is_zero()) out.table.emplace(k, std::move(v));
  }
  return out;
}

CheckReport is_derivation(const LinearMap& m, const Product& product, const Window& w) {
  auto pairs = ordered_tuples(window_basis(w, product.has_centrals()), 2);
  return run_checks(pairs, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    Element x(t[0]);
    Element y(t[1]);
    auto mxy = try_apply(m, product(x, y));
    auto mx = try_apply(m, x);
    auto my = try_apply(m, y);
    if (!mxy || !mx || !my) {
      r.skipped = 1;
      return r;
    }
    r.checked = 1;
    Element residual = *mxy - product(*mx, y) - product(x, *my);
    if (!residual.is_zero()) r.failures.push_back({t, "derivation", std::move(residual)});
    return r;
  });
}

CheckReport is_derivation(const LinearMap& m, const ProductKind& product, const Window& w) {
  return is_derivation(m, make_product(product), w);
}

std::optional<DerivationDecomposition> decompose_derivation(const TabularMap& d, const Window& w) {
  if (w.n_max < 3) throw InvalidArgument("decomposition needs N >= 3");
  const std::int64_t reach = 2 * w.n_max;

  // Unknowns: x on L(i), I(i) for |i| <= 2N except I(0), then a, b, c.
  std::vector<BasisKey> x_keys;
  for (std::int64_t i = -reach; i <= reach; ++i)
    if (i != 0) x_keys.push_back(BasisKey::I(i));
  for (std::int64_t i = -reach; i <= reach; ++i) x_keys.push_back(BasisKey::L(i));
  const VarIndex var_a = x_keys.size();
  const VarIndex var_b = var_a + 1;
  const VarIndex var_c = var_a + 2;
  const std::size_t ncols = var_c + 1;

  std::vector<SparseVector> rows;
  std::vector<Scalar> rhs;
  LinearMap dmap = d;
  for (const auto& k : window_core(Window{w.n_max - 1})) {
    std::map<BasisKey, SparseVector> eq;
    for (VarIndex v = 0; v < x_keys.size(); ++v) {
      for (const auto& [t, c] : basis_bracket(AlgebraKind::W00, x_keys[v], k)) eq[t].emplace_back(v, c);
    }
    const std::pair<VarIndex, LinearMap> outers[] = {
        {var_a, OuterD1{}}, {var_b, OuterD2{}}, {var_c, OuterD3{}}};
    for (const auto& [v, outer] : outers)
      for (const auto& [t, c] : apply(outer, Element(k))) eq[t].emplace_back(v, c);
    Element target = apply(dmap, Element(k));
    for (const auto& [t, c] : target) eq[t];  // make sure every target key has a row
    for (auto& [t, row] : eq) {
      rows.push_back(normalized(std::move(row)));
      rhs.push_back(target.coeff(t));
    }
  }

  auto sol = solve_affine(rows, rhs, ncols);
  if (!sol) return std::nullopt;
  DerivationDecomposition out;
  for (const auto& [v, c] : *sol) {
    if (v < x_keys.size()) {
      out.inner.add_term(x_keys[v], c);
    } else if (v == var_a) {
      out.a = c;
    } else if (v == var_b) {
      out.b = c;
    } else {
      out.c = c;
    }
  }
  return out;
}

}  // namespace hv
