#pragma once

#include "twinfoam/diagram.hpp"
#include "twinfoam/exact.hpp"

namespace twinfoam {

// The quantum sl(2) polynomial by the state sum
//   P2(D) = sum_J coeff(J) * (q + q^-1)^{#components(Gamma_J)},
// with per-crossing factors q (oriented, positive), -q^2 (singular, positive),
// q^-1 (oriented, negative), -q^-2 (singular, negative). Uses nothing from the
// TQFT pipeline beyond raw component counting.
LaurentPolynomial p2_state_sum(const LinkDiagram& d);

} // namespace twinfoam
