#include "hv/product.hpp"

#include "hv/errors.hpp"

namespace hv {

std::string product_name(const ProductKind& kind) {
  switch (kind.tag) {
    case ProductKind::Tag::LieHV: return "lie-hv";
    case ProductKind::Tag::LieW00: return "lie-w00";
    case ProductKind::Tag::LeftSym: return "leftsym";
    case ProductKind::Tag::LeftSymQuotient: return "leftsym-quotient";
  }
  return "?";
}

Product make_product(const ProductKind& kind) {
  switch (kind.tag) {
    case ProductKind::Tag::LieHV:
      return Product("lie-hv", true, true, [](const BasisKey& a, const BasisKey& b) {
        return basis_bracket(AlgebraKind::HV, a, b);
      });
    case ProductKind::Tag::LieW00:
      return Product("lie-w00", false, true, [](const BasisKey& a, const BasisKey& b) {
        return basis_bracket(AlgebraKind::W00, a, b);
      });
    case ProductKind::Tag::LeftSym:
    case ProductKind::Tag::LeftSymQuotient: {
      if (!kind.params) throw InvalidArgument("left-symmetric product needs (alpha, beta, epsilon)");
      if (!params_valid(*kind.params))
        throw InvalidArgument("inadmissible epsilon " + format_scalar(kind.params->epsilon));
      LeftSymParams p = *kind.params;
      if (kind.tag == ProductKind::Tag::LeftSym) {
        return Product("leftsym", true, false, [p](const BasisKey& a, const BasisKey& b) {
          return ls_basis_product(p, a, b);
        });
      }
      return Product("leftsym-quotient", false, false, [p](const BasisKey& a, const BasisKey& b) {
        return project_w00(ls_basis_product(p, a, b));
      });
    }
  }
  throw InvalidArgument("unknown product kind");
}

Product commutator_of(const Product& p) {
  return Product("commutator(" + p.name() + ")", p.has_centrals(), true,
                 [p](const BasisKey& a, const BasisKey& b) { return p.basis(a, b) - p.basis(b, a); });
}

Product inner_bracket_of(const Product& p) { return p.is_lie() ? p : commutator_of(p); }

}  // namespace hv
