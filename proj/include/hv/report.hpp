#pragma once

#include <ostream>
#include <string>

#include "hv/check.hpp"
#include "hv/graded_system.hpp"
#include "hv/leftsym_checks.hpp"
#include "hv/linalg.hpp"

namespace hv {

enum class Format { Text, Machine };

// Machine mode writes one JSON object per line: a summary record followed by
// one record per counterexample or basis vector.

void write_check(std::ostream& os, const std::string& name, const CheckReport& r, Format f);

/// One block per basis vector, lines "label = coefficient".
void write_space(std::ostream& os, const std::string& name, const SolutionSpace& s, Format f);

void write_comparison(std::ostream& os, const std::string& name, const SpanComparison& c,
                      const SolutionSpace& first, Format f);

void write_strata(std::ostream& os, const std::vector<PairResidual>& rows, Format f);

void write_value(std::ostream& os, const std::string& key, const std::string& value, Format f);

}  // namespace hv
