#include <doctest.h>

#include <limits>

#include "hv/algebra.hpp"
#include "hv/errors.hpp"
#include "hv/linear_map.hpp"
#include "hv/parse.hpp"
#include "oracles.hpp"

using namespace hv;

namespace {

std::vector<BasisKey> keys(std::int64_t n, bool centrals) {
  std::vector<BasisKey> out;
  if (centrals) out = {BasisKey::C1(), BasisKey::C2(), BasisKey::C3()};
  for (std::int64_t i = -n; i <= n; ++i) out.push_back(BasisKey::I(i));
  for (std::int64_t i = -n; i <= n; ++i) out.push_back(BasisKey::L(i));
  return out;
}

}  // namespace

TEST_CASE("bracket examples") {
  CHECK(bracket(AlgebraKind::HV, Element::L(2), Element::L(-2)) == Element::L(0, 4) + Element::C1(Scalar(1, 2)));
  CHECK(bracket(AlgebraKind::HV, Element::L(1), Element::I(-1)) == Element::I(0) - Element::C2(2));
  CHECK(bracket(AlgebraKind::HV, Element::C1(), Element::L(5)).is_zero());
  CHECK(bracket(AlgebraKind::HV, Element::I(3), Element::I(-3)) == Element::C3(3));
  CHECK(bracket(AlgebraKind::HV, Element::I(0), Element::I(5)).is_zero());
  CHECK(bracket(AlgebraKind::W00, Element::L(2), Element::L(-2)) == Element::L(0, 4));
  CHECK_THROWS_AS(bracket(AlgebraKind::W00, Element::C1(), Element::L(1)), InvalidArgument);
}

TEST_CASE("bracket agrees with the reference formulas") {
  for (const auto& a : keys(7, true))
    for (const auto& b : keys(7, true)) {
      CHECK(basis_bracket(AlgebraKind::HV, a, b) == oracle::bracket(a, b, true));
      if (!a.is_central_symbol() && !b.is_central_symbol())
        CHECK(basis_bracket(AlgebraKind::W00, a, b) == oracle::bracket(a, b, false));
    }
}

TEST_CASE("index overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(bracket(AlgebraKind::HV, Element::L(big), Element::L(1)), IndexOverflow);
  CHECK_THROWS_AS(bracket(AlgebraKind::HV, Element::I(-big - 1), Element::L(-1)), IndexOverflow);
}

TEST_CASE("adjoint examples") {
  CHECK(apply(adjoint(AlgebraKind::HV, Element::L(0)), Element::I(5)) == Element::I(5, -5));
  CHECK(apply(adjoint(AlgebraKind::HV, Element::C2()), Element::L(3) + Element::I(-2)).is_zero());
  CHECK(apply(adjoint(AlgebraKind::HV, Element::L(1)), Element::L(-1)) == Element::L(0, 2));
}

TEST_CASE("projection and center") {
  CHECK(project_w00(Element::L(0, 4) + Element::C1(Scalar(1, 2))) == Element::L(0, 4));
  CHECK(project_w00(Element::C3()).is_zero());
  auto hv = center_basis(AlgebraKind::HV);
  REQUIRE(hv.size() == 4);
  CHECK(hv[0] == Element::I(0));
  CHECK(hv[1] == Element::C1());
  CHECK(hv[2] == Element::C2());
  CHECK(hv[3] == Element::C3());
  for (const auto& c : hv)
    for (const auto& k : keys(6, true)) CHECK(bracket(AlgebraKind::HV, c, Element(k)).is_zero());
  auto w = center_basis(AlgebraKind::W00);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == Element::I(0));
  for (const auto& k : keys(6, false)) CHECK(bracket(AlgebraKind::W00, w[0], Element(k)).is_zero());
}

TEST_CASE("antisymmetry and quotient homomorphism") {
  for (const auto& a : keys(8, true))
    for (const auto& b : keys(8, true)) {
      CHECK(basis_bracket(AlgebraKind::HV, a, b) == -basis_bracket(AlgebraKind::HV, b, a));
      if (a.is_central_symbol() || b.is_central_symbol()) continue;
      CHECK(basis_bracket(AlgebraKind::W00, a, b) == -basis_bracket(AlgebraKind::W00, b, a));
      if (std::abs(a.index) <= 6 && std::abs(b.index) <= 6)
        CHECK(project_w00(basis_bracket(AlgebraKind::HV, a, b)) == basis_bracket(AlgebraKind::W00, a, b));
    }
}

TEST_CASE("Jacobi identity on small indices") {
  for (AlgebraKind kind : {AlgebraKind::HV, AlgebraKind::W00}) {
    auto ks = keys(4, kind == AlgebraKind::HV);
    for (const auto& a : ks)
      for (const auto& b : ks)
        for (const auto& c : ks) {
          Element x(a), y(b), z(c);
          Element j = bracket(kind, x, bracket(kind, y, z)) +
                      bracket(kind, y, bracket(kind, z, x)) +
                      bracket(kind, z, bracket(kind, x, y));
          CHECK(j.is_zero());
        }
  }
}

TEST_CASE("bilinearity on random elements") {
  oracle::Random rnd(3);
  for (int k = 0; k < 100; ++k) {
    Scalar a = rnd.nonzero(), b = rnd.nonzero();
    Element x = rnd.element(6, 3), x2 = rnd.element(6, 3), y = rnd.element(6, 3);
    CHECK(bracket(AlgebraKind::HV, a * x + b * x2, y) ==
          a * bracket(AlgebraKind::HV, x, y) + b * bracket(AlgebraKind::HV, x2, y));
    CHECK(bracket(AlgebraKind::HV, x, y) == oracle::bracket(x, y));
  }
}

TEST_CASE("element invariants and text") {
  Element x = parse_element("3/2*L(-1) + (1+2i)*I(0) - C1");
  CHECK(x.size() == 3);
  CHECK(x.coeff(BasisKey::L(-1)) == Scalar(3, 2));
  CHECK(x.coeff(BasisKey::C1()) == Scalar(-1));
  CHECK(parse_element("L(1) - L(1)").is_zero());
  CHECK(parse_element(" L ( 1 )+2 *I(-3)") == Element::L(1) + Element::I(-3, 2));
  CHECK_THROWS_AS(parse_element("L(x)"), ParseError);
  CHECK(format_element(Element::L(0, 4) + Element::C1(Scalar(1, 2))) == "4*L(0) + 1/2*C1");
  CHECK(format_element(Element()) == "0");
  CHECK(format_element(-Element::L(3) + Element::I(1, Scalar::imaginary_unit())) == "-L(3) + i*I(1)");

  std::vector<BasisKey> order = {BasisKey::C1(), BasisKey::C2(), BasisKey::C3(), BasisKey::I(-5),
                                 BasisKey::I(4), BasisKey::L(-9), BasisKey::L(2)};
  CHECK(std::is_sorted(order.begin(), order.end()));

  oracle::Random rnd(5);
  for (int k = 0; k < 200; ++k) {
    Element e = rnd.element(9, 4);
    CHECK(parse_element(format_element(e)) == e);
    for (const auto& [key, c] : e) {
      CHECK(!c.is_zero());
      CHECK(c.is_canonical());
    }
    CHECK(std::is_sorted(e.begin(), e.end(), [](const auto& p, const auto& q) { return p.first < q.first; }));
  }
}
