#pragma once

#include <optional>
#include <string>

#include "morlab/grid.hpp"

namespace morlab {

class ExponentField;

/// CSV interchange: a `#`-prefixed header block (n, lower, upper, h)
/// followed by one value per line in row-major node order.
void write_gridfunction_csv(const std::string& path, const GridFunction& f);
GridFunction read_gridfunction_csv(const std::string& path);

/// Same format with `inf` as the sentinel token for p(x) = infinity;
/// an optional `# p_inf=` header line carries the declared limit.
void write_exponent_csv(const std::string& path, const ExponentField& p);
ExponentField read_exponent_csv(const std::string& path);

}  // namespace morlab
