#include "hv/element.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

std::string format_key(const BasisKey& key) {
  switch (key.kind) {
    case BasisKind::C1: return "C1";
    case BasisKind::C2: return "C2";
    case BasisKind::C3: return "C3";
    case BasisKind::I: return "I(" + std::to_string(key.index) + ")";
    case BasisKind::L: return "L(" + std::to_string(key.index) + ")";
  }
  return "?";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw IndexOverflow();
  return out;
}

Element::Element(const BasisKey& key, Scalar coeff) {
  if (!coeff.is_zero()) terms_.emplace_back(key, std::move(coeff));
}

Element::Element(std::initializer_list<Term> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

Scalar Element::coeff(const BasisKey& key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const BasisKey& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return Scalar{};
}

bool Element::contains(const BasisKey& key) const { return !coeff(key).is_zero(); }

void Element::add_term(const BasisKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const BasisKey& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{key, c});
  }
}

void Element::axpy(const Scalar& c, const Element& other) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Element& Element::operator+=(const Element& o) {
  axpy(Scalar(1), o);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  axpy(Scalar(-1), o);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  // Printed L terms first, then I, then the C's, matching the usual way of writing elements.
  std::vector<const Element::Term*> terms;
  for (const auto& t : x) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [](const Element::Term* a, const Element::Term* b) {
    return static_cast<int>(a->first.kind) > static_cast<int>(b->first.kind);
  });
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [key, c] = *t;
    // A leading sign is pulled out of real and pure imaginary coefficients.
    bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += format_scalar(mag) + "*";
    out += format_key(key);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << format_element(x); }

std::ostream& operator<<(std::ostream& os, const BasisKey& k) { return os << format_key(k); }

}  // namespace hv
