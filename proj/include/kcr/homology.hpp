#pragma once

#include <vector>

#include "kcr/abgroup.hpp"
#include "kcr/kgraph.hpp"

namespace kcr {

// H_p = ker d_p / im d_{p+1}.
//
// Over Z the kernel basis comes from the right SNF transform of d_p; the
// image of d_{p+1} is rewritten in kernel coordinates and the quotient is
// read off a second SNF. Mod2 rows are handled as GF(2) linear algebra and
// give an elementary abelian 2-group.
//
// Throws std::out_of_range for p outside 0..k and std::invalid_argument if
// d_p d_{p+1} != 0.
FinAbGroup homology_at(const ChainComplex& complex, int p);

// H_0 .. H_k
std::vector<FinAbGroup> homology_all(const ChainComplex& complex);

}  // namespace kcr
