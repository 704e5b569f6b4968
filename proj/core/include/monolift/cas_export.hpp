// Plain-text script generation for external cross-checking in Macaulay2 and
// Singular: the ring, the lifted ideal, and resolution/initial-ideal probes.
#pragma once

#include <string>
#include <vector>

#include "monolift/poly.hpp"

namespace monolift {

std::string macaulay2_script(const Ring& ring, const std::vector<SparsePoly>& ideal_gens,
                             const std::string& comment = {});

std::string singular_script(const Ring& ring, const std::vector<SparsePoly>& ideal_gens,
                            const std::string& comment = {});

}  // namespace monolift
