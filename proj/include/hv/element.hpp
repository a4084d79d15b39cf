#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

/// Basis symbol of the twisted Heisenberg-Virasoro algebra. The enumerator
/// order fixes the total order C1 < C2 < C3 < I(n) < L(n).
enum class BasisKind : std::uint8_t { C1, C2, C3, I, L };

struct BasisKey {
  BasisKind kind = BasisKind::C1;
  std::int64_t index = 0;  // always 0 for the central symbols

  static BasisKey L(std::int64_t n) { return {BasisKind::L, n}; }
  static BasisKey I(std::int64_t n) { return {BasisKind::I, n}; }
  static BasisKey C1() { return {BasisKind::C1, 0}; }
  static BasisKey C2() { return {BasisKind::C2, 0}; }
  static BasisKey C3() { return {BasisKind::C3, 0}; }

  bool is_central_symbol() const {
    return kind == BasisKind::C1 || kind == BasisKind::C2 || kind == BasisKind::C3;
  }
  /// Grading degree; the central symbols sit in degree 0.
  std::int64_t degree() const { return index; }

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

std::string format_key(const BasisKey& key);

/// Overflow-checked index sum; throws IndexOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Finitely supported exact linear combination of basis keys. Coefficients
/// are never zero and the support is kept sorted by BasisKey.
class Element {
 public:
  using Term = std::pair<BasisKey, Scalar>;

  Element() = default;
  explicit Element(const BasisKey& key, Scalar coeff = 1);
  Element(std::initializer_list<Term> terms);

  static Element L(std::int64_t n, Scalar c = 1) { return Element(BasisKey::L(n), std::move(c)); }
  static Element I(std::int64_t n, Scalar c = 1) { return Element(BasisKey::I(n), std::move(c)); }
  static Element C1(Scalar c = 1) { return Element(BasisKey::C1(), std::move(c)); }
  static Element C2(Scalar c = 1) { return Element(BasisKey::C2(), std::move(c)); }
  static Element C3(Scalar c = 1) { return Element(BasisKey::C3(), std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of `key`, zero when absent.
  Scalar coeff(const BasisKey& key) const;
  bool contains(const BasisKey& key) const;

  /// Adds c*key in place.
  void add_term(const BasisKey& key, const Scalar& c);
  /// this += c * other.
  void axpy(const Scalar& c, const Element& other);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Keeps only the terms whose key satisfies `keep`.
  template <class Pred>
  Element filtered(Pred keep) const {
    Element out;
    for (const auto& t : terms_)
      if (keep(t.first)) out.terms_.push_back(t);
    return out;
  }

 private:
  std::vector<Term> terms_;
};

/// Canonical text such as "4*L(0) + 1/2*C1"; the zero element prints as "0".
std::string format_element(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);
std::ostream& operator<<(std::ostream& os, const BasisKey& k);

/// Applies a basis-level bilinear rule to two elements.
template <class BasisRule>
Element bilinear_extend(const Element& x, const Element& y, BasisRule&& rule) {
  Element out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Element ab = rule(a, b);
      if (ab.is_zero()) continue;
      out.axpy(ca * cb, ab);
    }
  }
  return out;
}

}  // namespace hv
