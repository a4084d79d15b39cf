#include "hv/leftsym.hpp"

#include "hv/algebra.hpp"
#include "hv/errors.hpp"

namespace hv {

namespace {

Scalar idx(std::int64_t n) { return Scalar(mpq_class(mpz_class(static_cast<signed long>(n)))); }

}  // namespace

bool params_valid(const LeftSymParams& p) {
  const Scalar& e = p.epsilon;
  if (sgn(e.re()) > 0) {
    Scalar inv = e.inverse();
    bool integral = inv.is_real() && inv.re().get_den() == 1;
    return !integral;
  }
  return sgn(e.re()) == 0 && sgn(e.im()) > 0;
}

bool window_safe(const LeftSymParams& p, std::int64_t reach) {
  for (std::int64_t s = -reach; s <= reach; ++s)
    if ((Scalar(1) + p.epsilon * idx(s)).is_zero()) return false;
  return true;
}

Element ls_basis_product(const LeftSymParams& p, const BasisKey& a, const BasisKey& b) {
  if (a.is_central_symbol() || b.is_central_symbol()) return {};
  const std::int64_t m = a.index;
  const std::int64_t n = b.index;
  const std::int64_t sum = checked_add(m, n);
  const bool opposite = sum == 0;
  const Scalar& eps = p.epsilon;
  const Scalar sm = idx(m);
  const Scalar sn = idx(n);

  if (a.kind == BasisKind::L && b.kind == BasisKind::L) {
    Scalar denom = Scalar(1) + eps * idx(sum);
    if (denom.is_zero()) throw ZeroDenominator();
    Element out = Element::L(sum, -sn * (Scalar(1) + eps * sn) / denom);
    if (opposite) {
      // (m^3 - m + (eps - 1/eps) m^2) / 24
      Scalar c = (sm * sm * sm - sm + (eps - eps.inverse()) * sm * sm) / Scalar(24);
      out.add_term(BasisKey::C1(), c);
    }
    return out;
  }
  if (a.kind == BasisKind::L && b.kind == BasisKind::I) {
    Scalar c = Scalar(1);
    if (opposite) c += (Scalar(1) - eps * sn) * p.alpha;
    Element out = Element::I(sum, -sn * c);
    if (opposite)
      out.add_term(BasisKey::C2(), sm * sm - sm + (eps * sm * sm + sm) * p.beta);
    return out;
  }
  if (a.kind == BasisKind::I && b.kind == BasisKind::L) {
    if (!opposite) return {};
    Scalar base = sn * (Scalar(1) + eps * sn);
    Element out = Element::I(sum, base * p.alpha);
    out.add_term(BasisKey::C2(), base * p.beta);
    return out;
  }
  // I_m o I_n = (n/2) delta_{m,-n} C3
  if (opposite) return Element::C3(sn / Scalar(2));
  return {};
}

Element ls_product(const LeftSymParams& p, const Element& x, const Element& y) {
  return bilinear_extend(x, y, [&p](const BasisKey& a, const BasisKey& b) {
    return ls_basis_product(p, a, b);
  });
}

Element ls_quotient_product(const LeftSymParams& p, const Element& x, const Element& y) {
  return project_w00(ls_product(p, project_w00(x), project_w00(y)));
}

}  // namespace hv
