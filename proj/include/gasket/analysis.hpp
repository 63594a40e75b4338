#pragma once

// Growth counts, entropy and dimension estimates, the X_n witnesses, the
// point family d^n (period-3 orbit), and the Mahler-type residual at the critical base.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gasket/admissibility.hpp"
#include "gasket/bases.hpp"
#include "gasket/geometry.hpp"
#include "gasket/report.hpp"

namespace gasket {

inline constexpr std::size_t kMaxGrowthLength = 40;

// Extendable counts W(m), m = 1..m_max, at horizon T.
GrowthTable growth_counts(const RealBase& beta, std::size_t m_max, std::size_t horizon, unsigned jobs = 1);

struct EntropyEstimate {
    double slope = 0;        // nats per symbol
    double uncertainty = 0;  // standard error of the slope
    std::size_t fit_from = 0, fit_to = 0;  // m range used
    std::size_t points = 0;
    std::string str() const;
};

// Least-squares slope of log W(m) against m over the larger half of the
// rows (at least 4). Rows with W = 0 are an error. Throws InsufficientData.
EntropyEstimate entropy_estimate(const GrowthTable& table);
EntropyEstimate entropy_estimate(const std::vector<std::pair<std::size_t, std::size_t>>& counts);

struct DimensionEstimate {
    double value = 0;
    double uncertainty = 0;
    EntropyEstimate entropy;
    std::string beta;       // label
    std::string enclosure;  // enclosure of log beta's argument used
    std::string str() const;
};
DimensionEstimate dimension_estimate(const RealBase& beta, const EntropyEstimate& entropy);
DimensionEstimate dimension_estimate(const RealBase& beta, const GrowthTable& table);

// Label words of all k-edge paths in the two-vertex graph presenting X_n.
struct XnBlocks {
    GasketWord ll, lr, rr, rl;  // Phi_A(u_n), Phi_A(u_n^B), u_n, u_n^B
};
XnBlocks xn_blocks(unsigned n);
std::vector<GasketWord> xn_words(unsigned n, unsigned k);
// Path-count entropy (log 2)/L and the alternative log 2 / log(2^(n-1) 3).
double xn_path_entropy(unsigned n);
double xn_printed_entropy(unsigned n);

struct MahlerResidual {
    Interval residual;    // R - S_N
    Interval tail_bound;  // x^{-3N} / (1 - x^{-3})
    Interval beta;        // enclosure used
    std::size_t terms = 0;
    bool within() const;  // |R - S_N| <= tail bound
    double ratio() const;  // lower bound of |R - S_N| over the tail bound
    std::string str() const;
};
// S_N = sum_{n<=N} tau_n x^{-3n}, R = x(x^3-x^2-1)/((x-1)(x^3-1)).
MahlerResidual mahler_residual(const RealBase& beta, std::size_t terms);

struct OrbitPoint {
    PeriodicCoding coding;
    Digit d;
    unsigned n;
    std::string orbit;   // one of the six period-3 words
    PlanarPoint series;  // point_of(coding)
    PlanarPoint closed;  // P + Q / (beta^n (beta^3 - 1))
    bool equal = false;  // exact equality, or overlapping enclosures
};
// d^n followed by a period-3 orbit, d in {A, B, C}, 0 <= n <= n_max (n = 0 once).
std::vector<OrbitPoint> orbit_points(const RealBase& beta, unsigned n_max);

// Periodic type-word sequences: admissible above beta_n for k <= n, and a
// violation at beta_k itself.
VerificationReport verify_periodic(unsigned n);

}  // namespace gasket
