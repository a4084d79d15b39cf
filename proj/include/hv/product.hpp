#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hv/algebra.hpp"
#include "hv/leftsym.hpp"

namespace hv {

/// Which multiplication the derivation/biderivation identities refer to.
struct ProductKind {
  enum class Tag { LieHV, LieW00, LeftSym, LeftSymQuotient };
  Tag tag = Tag::LieHV;
  std::optional<LeftSymParams> params;

  static ProductKind lie_hv() { return {Tag::LieHV, std::nullopt}; }
  static ProductKind lie_w00() { return {Tag::LieW00, std::nullopt}; }
  static ProductKind left_sym(LeftSymParams p) { return {Tag::LeftSym, std::move(p)}; }
  static ProductKind left_sym_quotient(LeftSymParams p) {
    return {Tag::LeftSymQuotient, std::move(p)};
  }

  friend bool operator==(const ProductKind&, const ProductKind&) = default;
};

std::string product_name(const ProductKind& kind);

/// A multiplication given by its structure constants on basis pairs, plus
/// whether the underlying space carries C1, C2, C3.
class Product {
 public:
  using BasisRule = std::function<Element(const BasisKey&, const BasisKey&)>;

  Product(std::string name, bool has_centrals, bool is_lie, BasisRule rule)
      : name_(std::move(name)), has_centrals_(has_centrals), is_lie_(is_lie), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  bool has_centrals() const { return has_centrals_; }
  /// Lie brackets; left-symmetric products are not.
  bool is_lie() const { return is_lie_; }
  /// Algebra whose center and basis the product lives on.
  AlgebraKind algebra() const { return has_centrals_ ? AlgebraKind::HV : AlgebraKind::W00; }

  Element basis(const BasisKey& a, const BasisKey& b) const { return rule_(a, b); }
  Element operator()(const Element& x, const Element& y) const {
    return bilinear_extend(x, y, rule_);
  }

 private:
  std::string name_;
  bool has_centrals_;
  bool is_lie_;
  BasisRule rule_;
};

/// Throws InvalidArgument when left-symmetric parameters are missing or
/// inadmissible.
Product make_product(const ProductKind& kind);

/// x*y - y*x for the given product, flagged as a Lie bracket.
Product commutator_of(const Product& p);

/// The bracket an inner biderivation lambda*[x, y] uses: the product itself
/// for Lie kinds, its commutator otherwise.
Product inner_bracket_of(const Product& p);

}  // namespace hv
