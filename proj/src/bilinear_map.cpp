#include "hv/bilinear_map.hpp"

#include "hv/errors.hpp"

namespace hv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Element r_omega_basis(const Omega& omega, const BasisKey& a, const BasisKey& b) {
  if (a.kind != BasisKind::L || b.kind != BasisKind::L) return {};
  const std::int64_t base = checked_add(a.index, b.index);
  Element out;
  for (const auto& [k, mu] : omega.values()) out.add_term(BasisKey::I(checked_add(base, k)), mu);
  return out;
}

std::optional<Element> eval_basis(const BilinearMap& f, const Product& bracket, const BasisKey& a,
                                  const BasisKey& b) {
  return std::visit(
      overloaded{
          [&](const InnerBi& in) -> std::optional<Element> { return in.lambda * bracket.basis(a, b); },
          [&](const ROmega& r) -> std::optional<Element> { return r_omega_basis(r.omega, a, b); },
          [&](const Classified& c) -> std::optional<Element> {
            return c.lambda * bracket.basis(a, b) + r_omega_basis(c.omega, a, b);
          },
          [&](const TabularBi& t) -> std::optional<Element> {
            KeyPair key{a, b};
            if (!t.domain.count(key)) return std::nullopt;
            auto it = t.table.find(key);
            return it == t.table.end() ? Element{} : it->second;
          },
          [&](const SumBi& s) -> std::optional<Element> {
            Element out;
            for (const auto& term : s.terms) {
              auto v = eval_basis(term, bracket, a, b);
              if (!v) return std::nullopt;
              out += *v;
            }
            return out;
          },
      },
      f.node);
}

std::optional<Element> eval_with_bracket(const BilinearMap& f, const Product& bracket,
                                         const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      auto v = eval_basis(f, bracket, a, b);
      if (!v) return std::nullopt;
      out.axpy(ca * cb, *v);
    }
  }
  return out;
}

}  // namespace

Omega::Omega(std::initializer_list<std::pair<const std::int64_t, Scalar>> values) {
  for (const auto& [k, v] : values) set(k, v);
}

Omega::Omega(const std::map<std::int64_t, Scalar>& values) {
  for (const auto& [k, v] : values) set(k, v);
}

void Omega::set(std::int64_t k, const Scalar& mu) {
  if (mu.is_zero()) {
    mu_.erase(k);
  } else {
    mu_[k] = mu;
  }
}

BilinearMap operator+(BilinearMap a, BilinearMap b) {
  SumBi s;
  auto push = [&s](BilinearMap m) {
    if (auto* inner = std::get_if<SumBi>(&m.node)) {
      for (auto& t : inner->terms) s.terms.push_back(std::move(t));
    } else {
      s.terms.push_back(std::move(m));
    }
  };
  push(std::move(a));
  push(std::move(b));
  return s;
}

Element r_omega(const Omega& omega, const Element& x, const Element& y) {
  return bilinear_extend(x, y, [&omega](const BasisKey& a, const BasisKey& b) {
    return r_omega_basis(omega, a, b);
  });
}

std::optional<Element> try_eval(const BilinearMap& f, const Product& product, const Element& x,
                                const Element& y) {
  return eval_with_bracket(f, inner_bracket_of(product), x, y);
}

Element eval(const BilinearMap& f, const Product& product, const Element& x, const Element& y) {
  Product bracket = inner_bracket_of(product);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      if (!eval_basis(f, bracket, a, b))
        throw DomainNotCovered("(" + format_key(a) + ", " + format_key(b) + ")");
  return *eval_with_bracket(f, bracket, x, y);
}

Element eval(const BilinearMap& f, const ProductKind& product, const Element& x, const Element& y) {
  return eval(f, make_product(product), x, y);
}

CheckReport is_biderivation(const BilinearMap& f, const Product& product, const Window& w) {
  const Product bracket = inner_bracket_of(product);
  auto F = [&](const Element& x, const Element& y) { return eval_with_bracket(f, bracket, x, y); };
  auto triples = ordered_tuples(window_basis(w, product.has_centrals()), 3);
  return run_checks(triples, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    Element x(t[0]);
    Element y(t[1]);
    Element z(t[2]);
    auto record = [&](const char* name, std::optional<Element> a, std::optional<Element> b,
                      std::optional<Element> c, auto combine) {
      if (!a || !b || !c) {
        ++r.skipped;
        return;
      }
      ++r.checked;
      Element residual = combine(*a, *b, *c);
      if (!residual.is_zero()) r.failures.push_back({t, name, std::move(residual)});
    };
    // f(x*y, z) - x*f(y,z) - f(x,z)*y
    record("first-argument", F(product(x, y), z), F(y, z), F(x, z),
           [&](const Element& fxy_z, const Element& fyz, const Element& fxz) {
             return fxy_z - product(x, fyz) - product(fxz, y);
           });
    // f(x, y*z) - f(x,y)*z - y*f(x,z)
    record("second-argument", F(x, product(y, z)), F(x, y), F(x, z),
           [&](const Element& fx_yz, const Element& fxy, const Element& fxz) {
             return fx_yz - product(fxy, z) - product(y, fxz);
           });
    return r;
  });
}

CheckReport is_biderivation(const BilinearMap& f, const ProductKind& product, const Window& w) {
  return is_biderivation(f, make_product(product), w);
}

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Skew: return "skew";
    case Symmetry::Neither: return "neither";
  }
  return "?";
}

Symmetry symmetry_class(const BilinearMap& f, const Window& w, const ProductKind& product) {
  Product p = make_product(product);
  auto keys = window_basis(w, p.has_centrals());
  bool symmetric = true;
  bool skew = true;
  for (const auto& a : keys) {
    for (const auto& b : keys) {
      Element ab = eval(f, p, Element(a), Element(b));
      Element ba = eval(f, p, Element(b), Element(a));
      if (!(ab == ba)) symmetric = false;
      if (!(ab == -ba)) skew = false;
      if (!symmetric && !skew) return Symmetry::Neither;
    }
  }
  return symmetric ? Symmetry::Symmetric : Symmetry::Skew;
}

CheckReport central_annihilation(const BilinearMap& f, const ProductKind& product, const Window& w) {
  Product p = make_product(product);
  if (!p.is_lie()) throw InvalidArgument("central annihilation needs a perfect Lie algebra");
  const Product bracket = inner_bracket_of(p);
  std::vector<std::vector<BasisKey>> tuples;
  auto centers = center_basis(p.algebra());
  for (const auto& b : window_basis(w, p.has_centrals())) {
    for (const auto& c : centers) tuples.push_back({b, c.begin()->first});
  }
  return run_checks(tuples, [&](const std::vector<BasisKey>& t) {
    CaseResult r;
    const std::pair<Element, Element> orders[] = {{Element(t[0]), Element(t[1])},
                                                  {Element(t[1]), Element(t[0])}};
    const char* names[] = {"f(x, c)", "f(c, x)"};
    for (int i = 0; i < 2; ++i) {
      auto v = eval_with_bracket(f, bracket, orders[i].first, orders[i].second);
      if (!v) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (!v->is_zero()) r.failures.push_back({t, names[i], std::move(*v)});
    }
    return r;
  });
}

}  // namespace hv
