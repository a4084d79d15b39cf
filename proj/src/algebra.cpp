#include "hv/algebra.hpp"

#include "hv/errors.hpp"

namespace hv {

namespace {

// (n^3 - n) / 12 as an exact rational; n^3 is formed with GMP to avoid overflow.
Scalar virasoro_cocycle(std::int64_t n) {
  mpz_class z(static_cast<signed long>(n));
  mpq_class q(z * z * z - z, 12);
  q.canonicalize();
  return Scalar(q);
}

Scalar from_index(std::int64_t n) { return Scalar(mpq_class(mpz_class(static_cast<signed long>(n)))); }

}  // namespace

Element basis_bracket(AlgebraKind kind, const BasisKey& a, const BasisKey& b) {
  if (a.is_central_symbol() || b.is_central_symbol()) return {};
  const bool full = kind == AlgebraKind::HV;
  const std::int64_t n = a.index;
  const std::int64_t m = b.index;
  const std::int64_t sum = checked_add(n, m);
  const bool opposite = sum == 0;

  if (a.kind == BasisKind::L && b.kind == BasisKind::L) {
    // [L_n, L_m] = (n - m) L_{m+n} + (n^3 - n)/12 delta_{n,-m} C1
    Element out = Element::L(sum, from_index(n) - from_index(m));
    if (full && opposite) out.add_term(BasisKey::C1(), virasoro_cocycle(n));
    return out;
  }
  if (a.kind == BasisKind::L && b.kind == BasisKind::I) {
    // [L_n, I_m] = -m I_{m+n} - (n^2 + n) delta_{n,-m} C2
    Element out = Element::I(sum, -from_index(m));
    if (full && opposite) {
      mpz_class z(static_cast<signed long>(n));
      out.add_term(BasisKey::C2(), Scalar(mpq_class(-(z * z + z))));
    }
    return out;
  }
  if (a.kind == BasisKind::I && b.kind == BasisKind::L) {
    return -basis_bracket(kind, b, a);
  }
  // [I_n, I_m] = n delta_{n,-m} C3
  if (full && opposite) return Element::C3(from_index(n));
  return {};
}

bool has_central_symbols(const Element& x) {
  for (const auto& [k, c] : x)
    if (k.is_central_symbol()) return true;
  return false;
}

Element bracket(AlgebraKind kind, const Element& x, const Element& y) {
  if (kind == AlgebraKind::W00 && (has_central_symbols(x) || has_central_symbols(y)))
    throw InvalidArgument("W(0,0) elements cannot carry C1, C2, C3");
  return bilinear_extend(x, y, [kind](const BasisKey& a, const BasisKey& b) {
    return basis_bracket(kind, a, b);
  });
}

Element project_w00(const Element& x) {
  return x.filtered([](const BasisKey& k) { return !k.is_central_symbol(); });
}

std::vector<Element> center_basis(AlgebraKind kind) {
  if (kind == AlgebraKind::W00) return {Element::I(0)};
  return {Element::I(0), Element::C1(), Element::C2(), Element::C3()};
}

}  // namespace hv
