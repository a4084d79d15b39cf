#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "hv/check.hpp"
#include "hv/product.hpp"

namespace hv {

struct LinearMap;

/// y -> [x, y] in the given algebra.
struct InnerAd {
  Element x;
  AlgebraKind kind = AlgebraKind::HV;
};
/// coeff * D1 with D1(L_m) = 0, D1(I_m) = I_m.
struct OuterD1 {
  Scalar coeff{1};
};
/// coeff * D2 with D2(L_m) = (m - 1) I_m, D2(I_m) = 0.
struct OuterD2 {
  Scalar coeff{1};
};
/// coeff * D3 with D3(L_m) = m I_m, D3(I_m) = 0.
struct OuterD3 {
  Scalar coeff{1};
};
struct ScalarId {
  Scalar lambda;
};
/// Center-valued map given per basis key; keys not listed map to 0.
struct CentralMap {
  std::map<BasisKey, Element> table;
};
/// Explicit table on a finite domain. Keys of `domain` absent from `table`
/// map to 0; keys outside `domain` are not covered.
struct TabularMap {
  std::set<BasisKey> domain;
  std::map<BasisKey, Element> table;
};
struct SumMap {
  std::vector<LinearMap> terms;
};

struct LinearMap {
  std::variant<InnerAd, OuterD1, OuterD2, OuterD3, ScalarId, CentralMap, TabularMap, SumMap> node;

  template <class T>
  LinearMap(T t) : node(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  LinearMap() : node(SumMap{}) {}
};

/// Throws NotCentral if a value leaves span{I(0), C1, C2, C3}.
CentralMap make_central(std::map<BasisKey, Element> table);
bool is_central_value(const Element& v);

LinearMap adjoint(AlgebraKind kind, const Element& x);
LinearMap operator+(LinearMap a, LinearMap b);
LinearMap scaled(const Scalar& c, LinearMap m);

/// Throws DomainNotCovered for tabular gaps.
Element apply(const LinearMap& m, const Element& x);
/// nullopt instead of throwing on a tabular gap.
std::optional<Element> try_apply(const LinearMap& m, const Element& x);

/// Tables `m` on the given keys, dropping zero values.
TabularMap tabulate(const LinearMap& m, const std::vector<BasisKey>& keys);

/// Checks m(x*y) = m(x)*y + x*m(y) on every ordered basis pair of the
/// window. Pairs that need a value outside a tabular domain are skipped.
CheckReport is_derivation(const LinearMap& m, const Product& product, const Window& w);
CheckReport is_derivation(const LinearMap& m, const ProductKind& product, const Window& w);

struct DerivationDecomposition {
  Element inner;  // I(0) coefficient fixed to 0
  Scalar a;       // D1
  Scalar b;       // D2
  Scalar c;       // D3
};

/// Solves d = ad x + a D1 + b D2 + c D3 on the interior keys |n| <= N-1 of
/// W(0,0), with x supported on |i| <= 2N. nullopt when no such combination
/// exists. Throws InvalidArgument for N < 3 and DomainNotCovered if `d`
/// misses an interior key.
std::optional<DerivationDecomposition> decompose_derivation(const TabularMap& d, const Window& w);

}  // namespace hv
