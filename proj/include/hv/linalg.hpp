#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

using VarIndex = std::size_t;

/// Bijection between dense variable ids and unique human-readable labels.
class VarRegistry {
 public:
  VarRegistry() = default;
  explicit VarRegistry(std::vector<std::string> labels);

  /// Throws InvalidArgument on a duplicate label.
  VarIndex add(std::string label);
  std::optional<VarIndex> find(const std::string& label) const;
  const std::string& label(VarIndex id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VarIndex> ids_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Sorted by VarIndex, no zero entries.
using SparseVector = std::vector<std::pair<VarIndex, Scalar>>;

/// Sorts, merges duplicate indices and drops zeros.
SparseVector normalized(SparseVector v);
/// a + c*b
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);
Scalar dot(const SparseVector& a, const SparseVector& b);

struct SparseMatrix {
  std::vector<SparseVector> rows;
  std::size_t ncols = 0;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t cols) : ncols(cols) {}
  SparseMatrix(std::vector<SparseVector> r, std::size_t cols);

  /// Normalizes the row; all-zero rows are dropped.
  void add_row(SparseVector row);
  std::size_t nrows() const { return rows.size(); }
};

SparseMatrix dense_to_sparse(const std::vector<std::vector<Scalar>>& dense);

/// Reduced row echelon form: nonzero rows only, ordered by pivot column,
/// leading entries 1, pivot columns cleared elsewhere. Pivots are chosen as
/// the smallest column with a nonzero entry.
SparseMatrix rref(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
/// m * v, one entry per row.
std::vector<Scalar> multiply(const SparseMatrix& m, const SparseVector& v);

/// Canonical basis of a subspace: the nonzero rows of its RREF.
struct SolutionSpace {
  RegistryPtr registry;
  std::vector<SparseVector> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t nvars() const { return registry ? registry->size() : 0; }
};

/// Canonical span of arbitrary vectors.
SolutionSpace span_of(std::vector<SparseVector> vectors, RegistryPtr registry);

/// {v : m v = 0}; the registry must have m.ncols variables.
SolutionSpace nullspace(const SparseMatrix& m, RegistryPtr registry);

bool in_span(const SolutionSpace& s, const SparseVector& v);

struct SpanComparison {
  enum class Side { None, OnlyInFirst, OnlyInSecond };
  bool equal = true;
  Side side = Side::None;
  std::optional<SparseVector> witness;  // set when !equal
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
  std::size_t rank_union = 0;
};

/// Decides span(a) == span(b) by comparing rank(a), rank(b) and
/// rank(a u b); throws IncompatibleSpaces when the registries differ.
SpanComparison span_equal(const SolutionSpace& a, const SolutionSpace& b);

/// Projects every basis vector onto the kept variables (in their original
/// order, under a new registry) and re-canonicalizes.
template <class Keep>
SolutionSpace restrict_coordinates(const SolutionSpace& s, Keep keep) {
  auto reg = std::make_shared<VarRegistry>();
  std::vector<std::optional<VarIndex>> remap(s.nvars());
  for (VarIndex i = 0; i < s.nvars(); ++i)
    if (keep(i)) remap[i] = reg->add(s.registry->label(i));
  std::vector<SparseVector> projected;
  for (const auto& v : s.basis) {
    SparseVector p;
    for (const auto& [i, c] : v)
      if (remap[i]) p.emplace_back(*remap[i], c);
    projected.push_back(std::move(p));
  }
  return span_of(std::move(projected), reg);
}

/// Solves A x = rhs (rhs given per row). Free variables are set to zero;
/// returns nullopt if the system is inconsistent.
std::optional<SparseVector> solve_affine(const std::vector<SparseVector>& rows,
                                        const std::vector<Scalar>& rhs, std::size_t ncols);

}  // namespace hv
