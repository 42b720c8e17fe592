#pragma once

#include <string>

#include "projrep/cocycle.hpp"
#include "projrep/fpmatrix.hpp"
#include "projrep/pgroup.hpp"

namespace projrep {

/// Group descriptor text format: "p=<int>;r=<comma list>;s=<comma list>",
/// e.g. "p=2;r=2,2;s=1,1" for Z/4 x Z/4 x Z/2 x Z/2 (the s list carries the
/// exponents n_j of the G2 factors).
AbelianPGroup parse_group(const std::string& text);
std::string format_group(const AbelianPGroup& g);

/// Matrix text format: rows separated by ';', entries by ',' ("1,1;0,0").
FpMatrix parse_matrix(std::int64_t p, const std::string& text);
std::string format_matrix(const FpMatrix& m);

/// Subgroup form strings: "X1", "Y2", "A1,2", "B1", "C2,1", "FULL".
SubgroupSpec parse_form(const std::string& text);

/// Element rendered as a word in the generators, e.g. "x1^2*x2*y1"; the
/// identity renders as "1".
std::string format_element(const AbelianPGroup& g, const GroupElement& e);

}  // namespace projrep
