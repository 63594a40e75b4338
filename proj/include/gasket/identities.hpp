#pragma once

// Exact checks of the Thue-Morse word identities used throughout.

#include "gasket/report.hpp"

namespace gasket {

// The two lexicographic chains between shifted prefixes of lambda and gamma,
// for every level n <= n_max and every shift 0 <= i < 3*2^(n-1).
VerificationReport verify_lambda_gamma_chains(unsigned n_max);

// lambda and gamma against t_n^+ and Theta(t_n^+), and the interleaving
// with tau, for k < 2^(n_max - 1).
VerificationReport verify_interleave(unsigned n_max);

// Coordinate projections of u_n, v_n, w_n and their Phi images, n <= n_max.
VerificationReport verify_projections(unsigned n_max);

}  // namespace gasket
