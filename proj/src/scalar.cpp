#include "hv/scalar.hpp"

#include <ostream>

#include "hv/errors.hpp"

namespace hv {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

bool Scalar::is_canonical() const {
  auto part_ok = [](const mpq_class& q) {
    if (sgn(q.get_den()) <= 0) return false;
    mpz_class g;
    mpz_class num = abs(q.get_num());
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
  };
  return part_ok(re_) && part_ok(im_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string format_scalar(const Scalar& s) {
  const mpq_class& re = s.re();
  const mpq_class& im = s.im();
  auto imag_text = [](const mpq_class& q) -> std::string {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return q.get_str() + "i";
  };
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return imag_text(im);
  std::string out = "(" + re.get_str();
  std::string tail = imag_text(im);
  if (tail.front() != '-') out += '+';
  return out + tail + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

}  // namespace hv
