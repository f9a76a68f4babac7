#pragma once

// Slow reference constructions kept independent of the production paths so
// they can serve as oracles in tests and in `najc verify`.

#include "najc/hodge.hpp"

namespace najc::reference {

/// H~_{-k} as the literal span of all degree-k monomials in the basis of h1,
/// for k = 1, 2, ... until the rank stops growing.
Filtration symmetric_power_filtration(const Subspace& h1);

}  // namespace najc::reference
