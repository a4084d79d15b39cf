#include "hv/linalg.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

VarRegistry::VarRegistry(std::vector<std::string> labels) {
  for (auto& l : labels) add(std::move(l));
}

VarIndex VarRegistry::add(std::string label) {
  if (ids_.count(label)) throw InvalidArgument("duplicate variable label " + label);
  VarIndex id = labels_.size();
  ids_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

std::optional<VarIndex> VarRegistry::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SparseVector normalized(SparseVector v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Scalar s = i->second + c * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar s;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

SparseMatrix::SparseMatrix(std::vector<SparseVector> r, std::size_t cols) : ncols(cols) {
  for (auto& row : r) add_row(std::move(row));
}

void SparseMatrix::add_row(SparseVector row) {
  row = normalized(std::move(row));
  if (row.empty()) return;
  if (row.back().first >= ncols) throw InvalidArgument("row entry beyond column count");
  rows.push_back(std::move(row));
}

SparseMatrix dense_to_sparse(const std::vector<std::vector<Scalar>>& dense) {
  SparseMatrix m(dense.empty() ? 0 : dense.front().size());
  for (const auto& r : dense) {
    SparseVector v;
    for (VarIndex j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) v.emplace_back(j, r[j]);
    m.add_row(std::move(v));
  }
  return m;
}

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

// Eliminates every pivot column from `row`, starting at position `from`.
void reduce(SparseVector& row, std::size_t from, const std::vector<std::size_t>& pivot_of,
            const std::vector<SparseVector>& pivots) {
  std::size_t pos = from;
  while (pos < row.size()) {
    VarIndex col = row[pos].first;
    std::size_t p = pivot_of[col];
    if (p == kNoPivot) {
      ++pos;
      continue;
    }
    Scalar c = -row[pos].second;
    row = axpy(row, c, pivots[p]);
  }
}

void make_monic(SparseVector& row) {
  if (row.front().second.is_one()) return;
  Scalar inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
}

}  // namespace

SparseMatrix rref(const SparseMatrix& m) {
  std::vector<std::size_t> pivot_of(m.ncols, kNoPivot);
  std::vector<SparseVector> pivots;
  for (const auto& input : m.rows) {
    if (pivots.size() == m.ncols) break;
    SparseVector row = input;
    reduce(row, 0, pivot_of, pivots);
    if (row.empty()) continue;
    make_monic(row);
    pivot_of[row.front().first] = pivots.size();
    pivots.push_back(std::move(row));
  }
  // Back substitution, largest pivot first, so each row sees fully reduced rows.
  std::vector<std::size_t> order(pivots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a].front().first > pivots[b].front().first; });
  for (std::size_t idx : order) reduce(pivots[idx], 1, pivot_of, pivots);

  std::sort(pivots.begin(), pivots.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().first < b.front().first; });
  SparseMatrix out(m.ncols);
  out.rows = std::move(pivots);
  return out;
}

std::size_t rank(const SparseMatrix& m) { return rref(m).nrows(); }

std::vector<Scalar> multiply(const SparseMatrix& m, const SparseVector& v) {
  std::vector<Scalar> out;
  out.reserve(m.nrows());
  for (const auto& r : m.rows) out.push_back(dot(r, v));
  return out;
}

SolutionSpace span_of(std::vector<SparseVector> vectors, RegistryPtr registry) {
  SparseMatrix m(registry->size());
  for (auto& v : vectors) m.add_row(std::move(v));
  return SolutionSpace{std::move(registry), rref(m).rows};
}

SolutionSpace nullspace(const SparseMatrix& m, RegistryPtr registry) {
  if (registry->size() != m.ncols) throw InvalidArgument("registry size differs from column count");
  SparseMatrix r = rref(m);
  std::vector<bool> is_pivot(m.ncols, false);
  for (const auto& row : r.rows) is_pivot[row.front().first] = true;

  std::vector<SparseVector> free_vectors(m.ncols);
  for (const auto& row : r.rows) {
    VarIndex p = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) free_vectors[row[k].first].emplace_back(p, -row[k].second);
  }
  std::vector<SparseVector> basis;
  for (VarIndex f = 0; f < m.ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = std::move(free_vectors[f]);
    v.emplace_back(f, Scalar(1));
    basis.push_back(normalized(std::move(v)));
  }
  return span_of(std::move(basis), std::move(registry));
}

bool in_span(const SolutionSpace& s, const SparseVector& v) {
  std::vector<std::size_t> pivot_of(s.nvars(), kNoPivot);
  for (std::size_t i = 0; i < s.basis.size(); ++i) pivot_of[s.basis[i].front().first] = i;
  SparseVector r = v;
  reduce(r, 0, pivot_of, s.basis);
  return r.empty();
}

SpanComparison span_equal(const SolutionSpace& a, const SolutionSpace& b) {
  if (!a.registry || !b.registry || !(*a.registry == *b.registry)) throw IncompatibleSpaces();
  SpanComparison out;
  out.rank_first = a.dim();
  out.rank_second = b.dim();
  std::vector<SparseVector> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  out.rank_union = span_of(std::move(all), a.registry).dim();
  out.equal = out.rank_first == out.rank_second && out.rank_second == out.rank_union;
  if (out.equal) return out;
  for (const auto& v : a.basis) {
    if (!in_span(b, v)) {
      out.side = SpanComparison::Side::OnlyInFirst;
      out.witness = v;
      return out;
    }
  }
  for (const auto& v : b.basis) {
    if (!in_span(a, v)) {
      out.side = SpanComparison::Side::OnlyInSecond;
      out.witness = v;
      return out;
    }
  }
  return out;
}

std::optional<SparseVector> solve_affine(const std::vector<SparseVector>& rows,
                                        const std::vector<Scalar>& rhs, std::size_t ncols) {
  if (rhs.size() != rows.size()) throw InvalidArgument("rhs length differs from row count");
  const VarIndex aug = ncols;
  SparseMatrix m(ncols + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector row = rows[i];
    if (!rhs[i].is_zero()) row.emplace_back(aug, rhs[i]);
    m.add_row(std::move(row));
  }
  SparseMatrix r = rref(m);
  SparseVector x;
  for (const auto& row : r.rows) {
    VarIndex p = row.front().first;
    if (p == aug) return std::nullopt;
    if (row.back().first == aug) x.emplace_back(p, row.back().second);
  }
  return normalized(std::move(x));
}

}  // namespace hv
