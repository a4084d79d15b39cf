#include "hv/graded_system.hpp"

#include <cstdlib>

#include "hv/errors.hpp"

namespace hv {

std::string coordinate_label(const std::string& map_name, const Coordinate& c) {
  std::string out = map_name + "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out += ",";
    out += format_key(c.args[i]);
  }
  return out + ") : " + format_key(c.out);
}

std::vector<BasisKey> graded_outputs(const GradedLayout& layout, const std::vector<BasisKey>& args,
                                     std::int64_t degree) {
  std::int64_t index = degree;
  for (const auto& a : args) index = checked_add(index, a.index);
  std::vector<BasisKey> out;
  if (index == 0 && layout.central_outputs) {
    out.push_back(BasisKey::C1());
    out.push_back(BasisKey::C2());
    out.push_back(BasisKey::C3());
  }
  out.push_back(BasisKey::I(index));
  out.push_back(BasisKey::L(index));
  return out;
}

namespace {

bool in_bound(const GradedLayout& layout, const BasisKey& k) {
  return k.index >= -layout.bound && k.index <= layout.bound;
}

}  // namespace

GradedSystem::GradedSystem(GradedLayout layout) : layout_(std::move(layout)) {
  domain_set_.insert(layout_.domain.begin(), layout_.domain.end());
  std::vector<BasisKey> sorted_domain(domain_set_.begin(), domain_set_.end());
  std::vector<std::vector<BasisKey>> tuples{{}};
  for (int i = 0; i < layout_.arity; ++i) {
    std::vector<std::vector<BasisKey>> next;
    for (const auto& t : tuples) {
      for (const auto& k : sorted_domain) {
        if (layout_.pin_centrals && k.is_central_symbol()) continue;
        auto u = t;
        u.push_back(k);
        next.push_back(std::move(u));
      }
    }
    tuples = std::move(next);
  }
  for (const auto& args : tuples) {
    std::vector<BasisKey> outs;
    for (auto d : layout_.degrees)
      for (const auto& o : graded_outputs(layout_, args, d))
        if (in_bound(layout_, o)) outs.push_back(o);
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
    for (const auto& o : outs) coords_.push_back({args, o});
  }
  auto reg = std::make_shared<VarRegistry>();
  for (VarIndex i = 0; i < coords_.size(); ++i) {
    index_.emplace(coords_[i], i);
    reg->add(coordinate_label(layout_.map_name, coords_[i]));
  }
  registry_ = std::move(reg);
}

std::optional<VarIndex> GradedSystem::find(const Coordinate& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GradedSystem::Equation::add(const std::vector<BasisKey>& args, const Scalar& coef,
                                 const std::function<Element(const BasisKey&)>& transform) {
  if (coef.is_zero() || !admitted_) return;
  const GradedLayout& layout = sys_->layout_;
  for (const auto& a : args) {
    if (a.is_central_symbol() && layout.pin_centrals) return;
  }
  for (const auto& a : args) {
    if (!sys_->domain_set_.count(a)) {
      admitted_ = false;
      return;
    }
  }
  for (const auto& out : graded_outputs(layout, args, degree_)) {
    Element image = transform(out);
    if (image.is_zero()) continue;
    auto var = in_bound(layout, out) ? sys_->find({args, out}) : std::nullopt;
    for (const auto& [t, c] : image) {
      if (var) {
        rows_[t].emplace_back(*var, coef * c);
      } else {
        tainted_.insert(t);
      }
    }
  }
}

void GradedSystem::Equation::add(const std::vector<BasisKey>& args, const Scalar& coef) {
  add(args, coef, [](const BasisKey& k) { return Element(k); });
}

std::vector<SparseVector> GradedSystem::Equation::rows() const {
  std::vector<SparseVector> out;
  if (!admitted_) return out;
  for (const auto& [t, row] : rows_) {
    if (tainted_.count(t)) continue;
    SparseVector r = normalized(row);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

GradedSpace restrict_arguments(const GradedSpace& s, const std::function<bool(const BasisKey&)>& keep) {
  auto keep_var = [&](VarIndex i) {
    for (const auto& a : s.coords[i].args)
      if (!keep(a)) return false;
    return true;
  };
  GradedSpace out;
  out.window = s.window;
  out.layout = s.layout;
  out.constraint_rows = s.constraint_rows;
  out.space = restrict_coordinates(s.space, keep_var);
  for (VarIndex i = 0; i < s.coords.size(); ++i)
    if (keep_var(i)) out.coords.push_back(s.coords[i]);
  return out;
}

GradedSpace graded_span(const GradedSpace& shape,
                        const std::vector<std::function<Scalar(const Coordinate&)>>& generators) {
  std::vector<SparseVector> vectors;
  for (const auto& g : generators) {
    SparseVector v;
    for (VarIndex i = 0; i < shape.coords.size(); ++i) {
      Scalar c = g(shape.coords[i]);
      if (!c.is_zero()) v.emplace_back(i, std::move(c));
    }
    vectors.push_back(std::move(v));
  }
  GradedSpace out;
  out.window = shape.window;
  out.coords = shape.coords;
  out.layout = shape.layout;
  out.space = span_of(std::move(vectors), shape.space.registry);
  return out;
}

}  // namespace hv
