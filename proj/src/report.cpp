#include "hv/report.hpp"

#include <json.hpp>

namespace hv {

namespace {

using nlohmann::ordered_json;

std::string format_inputs(const std::vector<BasisKey>& keys) {
  std::string s = "(";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) s += ", ";
    s += format_key(keys[i]);
  }
  return s + ")";
}

void line(std::ostream& os, const ordered_json& j) { os << j.dump() << '\n'; }

ordered_json vector_entries(const SolutionSpace& s, const SparseVector& v) {
  ordered_json entries = ordered_json::array();
  for (const auto& [i, c] : v) entries.push_back({{"var", s.registry->label(i)}, {"value", format_scalar(c)}});
  return entries;
}

}  // namespace

void write_check(std::ostream& os, const std::string& name, const CheckReport& r, Format f) {
  if (f == Format::Machine) {
    line(os, {{"record", "check"},
              {"name", name},
              {"result", r.passed ? "passed" : "failed"},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"counterexamples", r.counterexamples.size()}});
    for (const auto& c : r.counterexamples) {
      ordered_json inputs = ordered_json::array();
      for (const auto& k : c.inputs) inputs.push_back(format_key(k));
      line(os, {{"record", "counterexample"},
                {"name", name},
                {"inputs", inputs},
                {"identity", c.identity},
                {"residual", format_element(c.residual)}});
    }
    return;
  }
  os << name << ": " << (r.passed ? "passed" : "failed") << '\n';
  os << "  checked: " << r.checked << '\n';
  os << "  skipped: " << r.skipped << '\n';
  os << "  counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples)
    os << "  " << format_inputs(c.inputs) << " " << c.identity << ": " << format_element(c.residual) << '\n';
}

void write_space(std::ostream& os, const std::string& name, const SolutionSpace& s, Format f) {
  if (f == Format::Machine) {
    line(os, {{"record", "space"}, {"name", name}, {"dimension", s.dim()}, {"variables", s.nvars()}});
    for (std::size_t k = 0; k < s.basis.size(); ++k)
      line(os, {{"record", "vector"}, {"name", name}, {"index", k + 1}, {"entries", vector_entries(s, s.basis[k])}});
    return;
  }
  os << name << ": dimension " << s.dim() << " over " << s.nvars() << " variables\n";
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    os << "[" << name << " vector " << k + 1 << "]\n";
    for (const auto& [i, c] : s.basis[k]) os << s.registry->label(i) << " = " << format_scalar(c) << '\n';
  }
}

void write_comparison(std::ostream& os, const std::string& name, const SpanComparison& c,
                      const SolutionSpace& first, Format f) {
  const char* side = c.side == SpanComparison::Side::OnlyInFirst    ? "only-in-first"
                     : c.side == SpanComparison::Side::OnlyInSecond ? "only-in-second"
                                                                    : "none";
  if (f == Format::Machine) {
    ordered_json j = {{"record", "comparison"},
                      {"name", name},
                      {"equal", c.equal},
                      {"rank_first", c.rank_first},
                      {"rank_second", c.rank_second},
                      {"rank_union", c.rank_union},
                      {"side", side}};
    if (c.witness) j["witness"] = vector_entries(first, *c.witness);
    line(os, j);
    return;
  }
  os << name << ": " << (c.equal ? "equal" : "differs") << " (ranks " << c.rank_first << ", " << c.rank_second
     << ", union " << c.rank_union << ")\n";
  if (c.witness) {
    os << "  witness " << side << ":\n";
    for (const auto& [i, v] : *c.witness) os << "  " << first.registry->label(i) << " = " << format_scalar(v) << '\n';
  }
}

void write_strata(std::ostream& os, const std::vector<PairResidual>& rows, Format f) {
  std::size_t noncentral = 0, c1 = 0, c2 = 0, c3 = 0;
  for (const auto& r : rows) {
    noncentral += !r.residual.noncentral.is_zero();
    c1 += !r.residual.c1.is_zero();
    c2 += !r.residual.c2.is_zero();
    c3 += !r.residual.c3.is_zero();
  }
  if (f == Format::Machine) {
    line(os, {{"record", "subadjacent"},
              {"pairs", rows.size()},
              {"noncentral_nonzero", noncentral},
              {"c1_nonzero", c1},
              {"c2_nonzero", c2},
              {"c3_nonzero", c3}});
    for (const auto& r : rows) {
      if (r.residual.zero()) continue;
      line(os, {{"record", "subadjacent-residual"},
                {"inputs", {format_key(r.a), format_key(r.b)}},
                {"noncentral", format_element(r.residual.noncentral)},
                {"c1", format_scalar(r.residual.c1)},
                {"c2", format_scalar(r.residual.c2)},
                {"c3", format_scalar(r.residual.c3)}});
    }
    return;
  }
  os << "subadjacent commutator minus bracket over " << rows.size() << " pairs\n";
  os << "  L/I stratum nonzero: " << noncentral << '\n';
  os << "  C1 stratum nonzero: " << c1 << '\n';
  os << "  C2 stratum nonzero: " << c2 << '\n';
  os << "  C3 stratum nonzero: " << c3 << '\n';
  for (const auto& r : rows) {
    if (r.residual.zero()) continue;
    os << "  " << format_inputs({r.a, r.b}) << ": L/I " << format_element(r.residual.noncentral) << "; C1 "
       << format_scalar(r.residual.c1) << "; C2 " << format_scalar(r.residual.c2) << "; C3 "
       << format_scalar(r.residual.c3) << '\n';
  }
}

void write_value(std::ostream& os, const std::string& key, const std::string& value, Format f) {
  if (f == Format::Machine) {
    line(os, {{"record", "value"}, {"name", key}, {"value", value}});
    return;
  }
  os << key << ": " << value << '\n';
}

}  // namespace hv
