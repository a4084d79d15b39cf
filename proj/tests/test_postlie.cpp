#include <doctest.h>

#include "hv/biderivations.hpp"
#include "hv/errors.hpp"
#include "hv/postlie.hpp"
#include "oracles.hpp"

using namespace hv;

namespace {

// [x,y].z - x.(y.z) + y.(x.z) for x.y = r_Omega, with the reference bracket.
Element left_identity(const Omega& omega, const Element& x, const Element& y, const Element& z) {
  auto dot = [&](const Element& a, const Element& b) { return r_omega(omega, a, b); };
  return dot(oracle::bracket(x, y), z) - dot(x, dot(y, z)) + dot(y, dot(x, z));
}

}  // namespace

TEST_CASE("postlie residual examples") {
  CHECK(postlie_residual(Omega{{0, Scalar(1)}}) == Element::I(6));
  CHECK(postlie_residual(Omega{}).is_zero());
  CHECK(postlie_residual(Omega{{-2, Scalar(5)}, {1, Scalar(-1)}}) == Element::I(4, 5) - Element::I(7));
}

TEST_CASE("postlie residual agrees with the reference evaluation") {
  oracle::Random rnd(61);
  for (int k = 0; k < 50; ++k) {
    Omega omega;
    int n = static_cast<int>(rnd.integer(1, 4));
    for (int t = 0; t < n; ++t) omega.set(rnd.integer(-5, 5), rnd.nonzero());
    if (omega.empty()) continue;
    Element res = postlie_residual(omega);
    CHECK_FALSE(res.is_zero());
    Element sum;
    for (const auto& [kk, mu] : omega.values()) sum.add_term(BasisKey::I(6 + kk), mu);
    CHECK(res == sum);
    CHECK(left_identity(omega, Element::L(2), Element::L(1), Element::L(3)) == sum);
  }
}

TEST_CASE("zero product is a commutative post-Lie structure") {
  CHECK_THROWS_AS(is_commutative_postlie(TabularBi{}, Window{3}), DomainNotCovered);
  TabularBi zero;
  // Brackets of W(2) reach index 4.
  for (const auto& a : window_basis(Window{4}, true))
    for (const auto& b : window_basis(Window{4}, true)) zero.domain.insert({a, b});
  auto full = is_commutative_postlie(zero, Window{2});
  CHECK(full.passed);
  CHECK(full.skipped == 0);
  CHECK(is_commutative_postlie(ROmega{Omega{}}, Window{3}).passed);
}

TEST_CASE("r_Omega violates the post-Lie identity") {
  auto rep = is_commutative_postlie(ROmega{Omega{{0, Scalar(1)}}}, Window{3});
  CHECK_FALSE(rep.passed);
  bool commutativity = false, probe = false;
  for (const auto& c : rep.counterexamples) {
    if (c.identity == "commutativity") commutativity = true;
    if (c.inputs == std::vector<BasisKey>{BasisKey::L(2), BasisKey::L(1), BasisKey::L(3)}) probe = true;
  }
  CHECK_FALSE(commutativity);
  CHECK(probe);
}

TEST_CASE("inner and classified products fail commutativity") {
  auto inner = is_commutative_postlie(InnerBi{Scalar(1)}, Window{2});
  CHECK_FALSE(inner.passed);
  oracle::Random rnd(67);
  for (int k = 0; k < 5; ++k) {
    Classified f{rnd.nonzero(), Omega{{rnd.integer(-3, 3), rnd.nonzero()}}};
    auto rep = is_commutative_postlie(f, Window{2});
    bool at_l1l2 = false;
    for (const auto& c : rep.counterexamples)
      if (c.identity == "commutativity" &&
          c.inputs == std::vector<BasisKey>{BasisKey::L(1), BasisKey::L(2)})
        at_l1l2 = true;
    CHECK(at_l1l2);
  }
}

TEST_CASE("solver cross-check") {
  auto rows = postlie_solver_cross_check(Window{2}, 4, 0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].degree == 0);
  CHECK(rows[0].all_nontrivial_fail);
}
