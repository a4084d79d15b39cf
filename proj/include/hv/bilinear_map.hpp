#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "hv/check.hpp"
#include "hv/product.hpp"

namespace hv {

/// Finite family mu_k, k in Z; only nonzero values are stored.
class Omega {
 public:
  Omega() = default;
  Omega(std::initializer_list<std::pair<const std::int64_t, Scalar>> values);
  explicit Omega(const std::map<std::int64_t, Scalar>& values);

  const std::map<std::int64_t, Scalar>& values() const { return mu_; }
  bool empty() const { return mu_.empty(); }
  void set(std::int64_t k, const Scalar& mu);

  friend bool operator==(const Omega&, const Omega&) = default;

 private:
  std::map<std::int64_t, Scalar> mu_;
};

struct BilinearMap;
using KeyPair = std::pair<BasisKey, BasisKey>;

/// lambda * [x, y].
struct InnerBi {
  Scalar lambda;
};
/// r(L_m, L_n) = sum_k mu_k I_{m+n+k}; zero on every other basis pair.
struct ROmega {
  Omega omega;
};
/// lambda * [x, y] + r_Omega(x, y).
struct Classified {
  Scalar lambda;
  Omega omega;
};
struct TabularBi {
  std::set<KeyPair> domain;
  std::map<KeyPair, Element> table;
};
struct SumBi {
  std::vector<BilinearMap> terms;
};

struct BilinearMap {
  std::variant<InnerBi, ROmega, Classified, TabularBi, SumBi> node;

  template <class T>
  BilinearMap(T t) : node(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  BilinearMap() : node(SumBi{}) {}
};

BilinearMap operator+(BilinearMap a, BilinearMap b);

/// r_Omega on two elements.
Element r_omega(const Omega& omega, const Element& x, const Element& y);

/// Throws DomainNotCovered for tabular gaps.
Element eval(const BilinearMap& f, const Product& product, const Element& x, const Element& y);
Element eval(const BilinearMap& f, const ProductKind& product, const Element& x, const Element& y);
std::optional<Element> try_eval(const BilinearMap& f, const Product& product, const Element& x,
                                const Element& y);

/// Checks f(x*y, z) = x*f(y,z) + f(x,z)*y and f(x, y*z) = f(x,y)*z + y*f(x,z)
/// on every ordered basis triple of the window. Counterexamples are labelled
/// "first-argument" and "second-argument".
CheckReport is_biderivation(const BilinearMap& f, const Product& product, const Window& w);
CheckReport is_biderivation(const BilinearMap& f, const ProductKind& product, const Window& w);

enum class Symmetry { Symmetric, Skew, Neither };
std::string symmetry_name(Symmetry s);

/// Exhaustive comparison of f(a,b) with f(b,a) on the window. The zero map
/// reports Symmetric.
Symmetry symmetry_class(const BilinearMap& f, const Window& w,
                        const ProductKind& product = ProductKind::lie_hv());

/// f(b, c) = f(c, b) = 0 for every window key b and c in the center basis.
/// Requires a Lie product (InvalidArgument otherwise).
CheckReport central_annihilation(const BilinearMap& f, const ProductKind& product, const Window& w);

}  // namespace hv
