#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hv/check.hpp"
#include "hv/element.hpp"
#include "hv/linalg.hpp"

namespace hv {

/// One unknown: the coefficient of `out` in g(args...).
struct Coordinate {
  std::vector<BasisKey> args;
  BasisKey out;

  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// "f(L(1),L(2)) : I(3)"
std::string coordinate_label(const std::string& map_name, const Coordinate& c);

struct GradedLayout {
  std::string map_name = "f";
  int arity = 2;
  /// Admissible (non-pinned) argument keys, sorted.
  std::vector<BasisKey> domain;
  /// Arguments equal to C1, C2, C3 are pinned: g(..., c, ...) = 0.
  bool pin_centrals = true;
  /// Whether outputs may carry C1, C2, C3 (only in degree-0 index).
  bool central_outputs = true;
  /// Output keys must satisfy |index| <= bound.
  std::int64_t bound = 0;
  /// Solved grading degrees: the output index of g(args) is sum(args) + d.
  std::vector<std::int64_t> degrees;
};

/// Candidate output keys of g(args) in degree d, ignoring the bound.
std::vector<BasisKey> graded_outputs(const GradedLayout& layout, const std::vector<BasisKey>& args,
                                     std::int64_t degree);

/// Assembles exact linear constraints on the coefficients of a multilinear
/// map g, graded by degree. A residual row that would need a coordinate
/// beyond the output bound is dropped, never truncated.
class GradedSystem {
 public:
  explicit GradedSystem(GradedLayout layout);

  const GradedLayout& layout() const { return layout_; }
  const std::vector<Coordinate>& coordinates() const { return coords_; }
  RegistryPtr registry() const { return registry_; }
  std::size_t nvars() const { return coords_.size(); }
  std::optional<VarIndex> find(const Coordinate& c) const;

  /// Residual of one identity instance, keyed by output basis key.
  class Equation {
   public:
    /// Adds coef * transform(g(args)) restricted to degree d. transform maps
    /// an output key of g to an Element (identity, left or right product).
    void add(const std::vector<BasisKey>& args, const Scalar& coef,
             const std::function<Element(const BasisKey&)>& transform);
    void add(const std::vector<BasisKey>& args, const Scalar& coef);

    bool admitted() const { return admitted_; }
    /// Rows that survived the bound rule.
    std::vector<SparseVector> rows() const;

   private:
    friend class GradedSystem;
    Equation(const GradedSystem& sys, std::int64_t degree) : sys_(&sys), degree_(degree) {}

    const GradedSystem* sys_;
    std::int64_t degree_;
    bool admitted_ = true;
    std::map<BasisKey, SparseVector> rows_;
    std::set<BasisKey> tainted_;
  };

  Equation equation(std::int64_t degree) const { return Equation(*this, degree); }

 private:
  GradedLayout layout_;
  std::set<BasisKey> domain_set_;
  std::vector<Coordinate> coords_;
  std::map<Coordinate, VarIndex> index_;
  RegistryPtr registry_;
};

/// Solution space of a graded system together with the structured meaning of
/// each variable.
struct GradedSpace {
  SolutionSpace space;
  Window window;
  std::vector<Coordinate> coords;
  GradedLayout layout;
  std::size_t constraint_rows = 0;

  std::size_t dim() const { return space.dim(); }
};

/// Restricts a graded space to coordinates whose arguments all satisfy `keep`.
GradedSpace restrict_arguments(const GradedSpace& s, const std::function<bool(const BasisKey&)>& keep);

/// Canonical span of the given vectors, expressed in `shape`'s coordinates
/// via `value(args, out)`.
GradedSpace graded_span(const GradedSpace& shape,
                        const std::vector<std::function<Scalar(const Coordinate&)>>& generators);

}  // namespace hv
