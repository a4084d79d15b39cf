#include <doctest.h>

#include "hv/errors.hpp"
#include "hv/leftsym_checks.hpp"
#include "hv/report.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace hv;

namespace {

const Scalar kI = Scalar::imaginary_unit();

LeftSymParams params(Scalar a, Scalar b, Scalar e) { return {std::move(a), std::move(b), std::move(e)}; }

// Product rules written out term by term.
Element reference_product(const LeftSymParams& p, const BasisKey& a, const BasisKey& b) {
  Element out;
  if (a.is_central_symbol() || b.is_central_symbol()) return out;
  const Scalar m(a.index), n(b.index), e = p.epsilon;
  const bool d = a.index + b.index == 0;
  const std::int64_t s = a.index + b.index;
  if (a.kind == BasisKind::L && b.kind == BasisKind::L) {
    out.add_term(BasisKey::L(s), -(n * (Scalar(1) + e * n)) / (Scalar(1) + e * Scalar(s)));
    if (d) out.add_term(BasisKey::C1(), (m * m * m - m + (e - Scalar(1) / e) * m * m) / Scalar(24));
  } else if (a.kind == BasisKind::L) {
    out.add_term(BasisKey::I(s), -n * (Scalar(1) + (d ? (Scalar(1) - e * n) * p.alpha : Scalar(0))));
    if (d) out.add_term(BasisKey::C2(), m * m - m + (e * m * m + m) * p.beta);
  } else if (b.kind == BasisKind::L) {
    if (d) {
      out.add_term(BasisKey::I(s), n * (Scalar(1) + e * n) * p.alpha);
      out.add_term(BasisKey::C2(), n * (Scalar(1) + e * n) * p.beta);
    }
  } else if (d) {
    out.add_term(BasisKey::C3(), n / Scalar(2));
  }
  return out;
}

Element reference_product(const LeftSymParams& p, const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.axpy(ca * cb, reference_product(p, a, b));
  return out;
}

const std::vector<LeftSymParams>& admissible() {
  static const std::vector<LeftSymParams> ps = {params(0, 0, Scalar(1) + kI), params(1, 2, Scalar(1) + kI),
                                                params(0, 0, kI)};
  return ps;
}

}  // namespace

TEST_CASE("parameter admissibility") {
  CHECK(params_valid(params(0, 0, Scalar(1) + kI)));
  CHECK((Scalar(1) + kI).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK_FALSE(params_valid(params(0, 0, Scalar(1))));
  CHECK(params_valid(params(0, 0, kI)));
  CHECK_FALSE(params_valid(params(0, 0, Scalar(-1, 3))));
  CHECK_FALSE(params_valid(params(0, 0, -kI)));
  CHECK_THROWS_AS(is_left_symmetric(params(0, 0, Scalar(1)), Window{1}), InvalidArgument);
}

TEST_CASE("product examples") {
  auto p = params(0, 0, Scalar(1) + kI);
  CHECK(ls_product(p, Element::L(1), Element::L(1)) == Element::L(2, Scalar(mpq_class(-8, 13), mpq_class(1, 13))));
  CHECK(ls_product(p, Element::I(2), Element::I(-2)) == Element::C3(-1));
  CHECK(ls_product(p, Element::C1(), Element::L(5)).is_zero());
  CHECK(ls_quotient_product(p, Element::I(2), Element::I(-2)).is_zero());
}

TEST_CASE("product agrees with the reference rules") {
  for (const auto& p : admissible())
    for (const auto& a : window_basis(Window{5}, true))
      for (const auto& b : window_basis(Window{5}, true))
        CHECK(ls_basis_product(p, a, b) == reference_product(p, a, b));
}

TEST_CASE("bilinearity") {
  oracle::Random rnd(71);
  for (const auto& p : admissible())
    for (int k = 0; k < 20; ++k) {
      Scalar s = rnd.nonzero();
      Element x = rnd.element(4, 3), x2 = rnd.element(4, 3), y = rnd.element(4, 3);
      CHECK(ls_product(p, s * x + x2, y) == s * ls_product(p, x, y) + ls_product(p, x2, y));
      CHECK(ls_product(p, y, s * x + x2) == s * ls_product(p, y, x) + ls_product(p, y, x2));
    }
}

TEST_CASE("identity at a single triple") {
  auto p = params(0, 0, Scalar(1) + kI);
  auto m = [&](const Element& a, const Element& b) { return reference_product(p, a, b); };
  Element x = Element::L(1), y = Element::L(2), z = Element::L(3);
  CHECK((m(m(x, y), z) - m(x, m(y, z)) - m(m(y, x), z) + m(y, m(x, z))).is_zero());
  for (const auto& c : {BasisKey::C1(), BasisKey::C2(), BasisKey::C3()}) {
    Element cc(c);
    CHECK((m(m(cc, y), z) - m(cc, m(y, z)) - m(m(y, cc), z) + m(y, m(cc, z))).is_zero());
  }
}

TEST_CASE("left-symmetric identity on the L/I stratum") {
  for (const auto& p : admissible()) {
    auto rep = is_left_symmetric(p, Window{4});
    CHECK(rep.skipped == 0);
    for (const auto& c : rep.counterexamples) CHECK(split_strata(c.residual).noncentral.is_zero());
  }
}

TEST_CASE("sub-adjacent commutator against the bracket") {
  for (const auto& p : admissible()) {
    auto rows = subadjacent_residual(p, Window{6});
    CHECK(rows.size() == window_basis(Window{6}, true).size() * window_basis(Window{6}, true).size());
    for (const auto& r : rows) {
      CHECK(r.residual.noncentral.is_zero());
      CHECK(r.residual.c1.is_zero());
    }
  }
  auto p = admissible()[0];
  Element comm = ls_product(p, Element::L(2), Element::L(-2)) - ls_product(p, Element::L(-2), Element::L(2));
  CHECK(comm.coeff(BasisKey::C1()) == Scalar(1, 2));
}

TEST_CASE("central strata are reported deterministically") {
  auto p = admissible()[1];
  set_thread_count(1);
  std::ostringstream a, b;
  write_strata(a, subadjacent_residual(p, Window{3}), Format::Text);
  set_thread_count(4);
  write_strata(b, subadjacent_residual(p, Window{3}), Format::Text);
  set_thread_count(1);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("(I(1), I(-1))") != std::string::npos);
}

TEST_CASE("quotient annihilation") {
  for (const auto& p : admissible())
    for (const auto& c : {BasisKey::C1(), BasisKey::C2(), BasisKey::C3()})
      for (const auto& x : window_basis(Window{5}, true)) {
        CHECK(ls_quotient_product(p, Element(c), Element(x)).is_zero());
        CHECK(ls_quotient_product(p, Element(x), Element(c)).is_zero());
        CHECK(ls_product(p, Element(c), Element(x)).is_zero());
      }
}

TEST_CASE("derivation inheritance") {
  auto p = admissible()[0];
  auto zero = check_derivation_inheritance(ScalarId{Scalar(0)}, p, Window{3});
  CHECK(zero.left_symmetric.passed);
  CHECK(zero.commutator.passed);
  CHECK(zero.implication_holds());
  auto d1 = check_derivation_inheritance(OuterD1{}, p, Window{3});
  CHECK(d1.implication_holds());
}

TEST_CASE("no nonzero biderivations of the quotient product") {
  auto p = admissible()[0];
  for (std::int64_t d = -2; d <= 2; ++d) {
    GradedSpace in = leftsym_biderivation_oracle(p, Window{2}, Window{1}, 4, d);
    CHECK(in.dim() == 0);
  }
}
