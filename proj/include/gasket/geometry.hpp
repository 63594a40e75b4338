#pragma once

// Planar realization of codings: P = sum d_i beta^-i with A = (0,0),
// B = (1,0), C = (0,1). The hull is the triangle with legs 1/(beta-1); the
// first-generation images f_d(hull) have legs 1/(beta(beta-1)).

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gasket/bases.hpp"
#include "gasket/interval.hpp"
#include "gasket/words.hpp"

namespace gasket {

struct PlanarPoint {
    Interval x = Interval(), y = Interval();
    std::optional<mpq_class> exact_x, exact_y;  // set when beta is rational

    bool is_exact() const { return exact_x.has_value(); }
    std::string str(int digits = 12) const;
};

// Exact for rational beta, otherwise an enclosure computed from a beta
// enclosure of width 2^-bits.
PlanarPoint point_of(const PeriodicCoding& c, const RealBase& beta, mpfr_prec_t bits = kStartPrecision);

enum class RegionTag { fA, fB, fC, OA, OB, OC, OutsideHull };
const char* region_name(RegionTag t);

// Closed-triangle membership, in fA, fB, fC, OA, OB, OC, OutsideHull order.
// Throws Undecidable when an inequality cannot be signed.
std::vector<RegionTag> region_of(const PlanarPoint& p, const RealBase& beta);
// Same, re-evaluating the coding at increasing precision up to the cap.
std::vector<RegionTag> region_of(const PeriodicCoding& c, const RealBase& beta);

struct UniqueCheck {
    enum class Kind { InUtilde, TailInOverlap, Undecidable } kind = Kind::InUtilde;
    std::size_t shift = 0;  // first tail found in the overlap region
    std::string str() const;
};

// Tests every distinct tail sigma^n c, n >= 0, against the closed overlap region.
UniqueCheck geometric_unique_check(const PeriodicCoding& c, const RealBase& beta);

// All depth-k images of the hull with their pairwise intersections shaded.
void render_svg(const RealBase& beta, unsigned depth, std::ostream& out);
std::string render_svg(const RealBase& beta, unsigned depth);

}  // namespace gasket
