#include "gasket/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "gasket/error.hpp"

namespace gasket {

namespace {

// sum_{i<=q} b_i y^i + y^q (sum_{i<=p} a_i y^i) / (1 - y^p), for one coordinate.
template <class T, class Bits>
T series(const PeriodicCoding& c, const T& y, const T& one, Bits bit) {
    auto poly = [&](const GasketWord& w) {
        T acc = one - one, pw = one;
        for (std::size_t i = 0; i < w.size(); ++i) {
            pw = pw * y;
            if (bit(w[i])) acc = acc + pw;
        }
        return std::make_pair(acc, pw);
    };
    auto [pre, yq] = poly(c.preperiod());
    auto [per, yp] = poly(c.period());
    return pre + yq * per / (one - yp);
}

std::string fixed3(const mpq_class& v) {
    // Round half away from zero at three decimals.
    mpq_class s = v * 1000;
    mpz_class n = s.get_num(), d = s.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class r = (2 * n + d) / (2 * d);
    std::string digits = r.get_str();
    while (digits.size() < 4) digits = "0" + digits;
    std::string out = digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
    if (neg && r != 0) out = "-" + out;
    return out;
}

// Corner and leg of an upright right triangle {x >= a, y >= b, x + y <= a + b + s}.
struct Tri {
    mpq_class a, b, s;
};

}  // namespace

std::string PlanarPoint::str(int digits) const {
    if (is_exact()) return "(" + exact_x->get_str() + ", " + exact_y->get_str() + ")";
    return "(" + x.str(digits) + ", " + y.str(digits) + ")";
}

PlanarPoint point_of(const PeriodicCoding& c, const RealBase& beta, mpfr_prec_t bits) {
    PlanarPoint p;
    if (beta.is_rational()) {
        const mpq_class y = 1 / beta.rational_value(), one = 1;
        mpq_class px = series(c, y, one, p1), py = series(c, y, one, p2);
        const mpfr_prec_t prec = std::max<mpfr_prec_t>(bits, kStartPrecision);
        p.x = Interval(px, prec);
        p.y = Interval(py, prec);
        p.exact_x = px;
        p.exact_y = py;
        return p;
    }
    Interval b = beta.enclosure_bits(bits);
    Interval one(1L, b.precision());
    Interval y = b.reciprocal();
    p.x = series(c, y, one, p1);
    p.y = series(c, y, one, p2);
    return p;
}

const char* region_name(RegionTag t) {
    switch (t) {
        case RegionTag::fA: return "fA";
        case RegionTag::fB: return "fB";
        case RegionTag::fC: return "fC";
        case RegionTag::OA: return "O_A";
        case RegionTag::OB: return "O_B";
        case RegionTag::OC: return "O_C";
        case RegionTag::OutsideHull: return "outsideHull";
    }
    return "?";
}

namespace {

// Four closed triangles: fA, fB, fC, hull. Each holds iff its three forms are >= 0.
// Returns nullopt when some membership cannot be decided. A coding's point lies
// in the image of its first letter and in the hull, so those may be given as known.
std::optional<std::array<bool, 4>> memberships(const PlanarPoint& p, const RealBase& beta, mpfr_prec_t prec,
                                               int known = -1) {
    std::array<std::array<std::optional<int>, 3>, 4> sg;
    if (p.is_exact() && beta.is_rational()) {
        const mpq_class& bt = beta.rational_value();
        const mpq_class x = *p.exact_x, y = *p.exact_y, r = 1 / bt, s = 1 / (bt * (bt - 1)), h = 1 / (bt - 1);
        const std::array<std::array<mpq_class, 3>, 4> f = {{{x, y, s - x - y},
                                                             {x - r, y, s - (x - r) - y},
                                                             {x, y - r, s - x - (y - r)},
                                                             {x, y, h - x - y}}};
        for (int t = 0; t < 4; ++t)
            for (int k = 0; k < 3; ++k) sg[t][k] = sgn(f[t][k]);
    } else {
        Interval bt = beta.enclosure_bits(prec);
        Interval r = bt.reciprocal(), h = (bt - 1).reciprocal(), s = r * h;
        const Interval &x = p.x, &y = p.y;
        const std::array<std::array<Interval, 3>, 4> f = {{{x, y, s - x - y},
                                                            {x - r, y, s - (x - r) - y},
                                                            {x, y - r, s - x - (y - r)},
                                                            {x, y, h - x - y}}};
        for (int t = 0; t < 4; ++t) {
            for (int k = 0; k < 3; ++k) {
                const Interval& v = f[t][k];
                if (mpfr_sgn(v.lo().get()) >= 0) sg[t][k] = 1;
                else if (mpfr_sgn(v.hi().get()) < 0) sg[t][k] = -1;
            }
        }
    }
    std::array<bool, 4> in{};
    for (int t = 0; t < 4; ++t) {
        if (known >= 0 && (t == known || t == 3)) {
            in[t] = true;
            continue;
        }
        bool out = false, all = true;
        for (auto& v : sg[t]) {
            if (v && *v < 0) out = true;
            if (!v) all = false;
        }
        if (out) in[t] = false;
        else if (all) in[t] = true;
        else return std::nullopt;
    }
    return in;
}

std::vector<RegionTag> tags_of(const std::array<bool, 4>& in) {
    std::vector<RegionTag> out;
    if (in[0]) out.push_back(RegionTag::fA);
    if (in[1]) out.push_back(RegionTag::fB);
    if (in[2]) out.push_back(RegionTag::fC);
    if (in[1] && in[2]) out.push_back(RegionTag::OA);
    if (in[0] && in[2]) out.push_back(RegionTag::OB);
    if (in[0] && in[1]) out.push_back(RegionTag::OC);
    if (!in[3]) out.push_back(RegionTag::OutsideHull);
    return out;
}

bool in_overlap(const std::array<bool, 4>& in) {
    return (in[0] && in[1]) || (in[0] && in[2]) || (in[1] && in[2]);
}

std::optional<std::array<bool, 4>> adaptive(const PeriodicCoding& c, const RealBase& beta) {
    const int first = static_cast<int>(c.at(0));
    if (beta.is_rational()) return memberships(point_of(c, beta), beta, kStartPrecision, first);
    for (mpfr_prec_t bits = 64; bits <= kPrecisionCap; bits *= 2) {
        if (auto in = memberships(point_of(c, beta, bits), beta, bits, first)) return in;
    }
    return std::nullopt;
}

}  // namespace

std::vector<RegionTag> region_of(const PlanarPoint& p, const RealBase& beta) {
    auto in = memberships(p, beta, p.x.precision());
    if (!in) fail(ErrorCode::Undecidable, "region membership undecided at this precision");
    return tags_of(*in);
}

std::vector<RegionTag> region_of(const PeriodicCoding& c, const RealBase& beta) {
    auto in = adaptive(c, beta);
    if (!in) fail(ErrorCode::Undecidable, "region membership of " + c.str() + " undecided at the precision cap");
    return tags_of(*in);
}

std::string UniqueCheck::str() const {
    switch (kind) {
        case Kind::InUtilde: return "InUtilde";
        case Kind::TailInOverlap: return "TailInOverlap(shift " + std::to_string(shift) + ")";
        case Kind::Undecidable: return "Undecidable";
    }
    return "?";
}

UniqueCheck geometric_unique_check(const PeriodicCoding& c, const RealBase& beta) {
    bool undecided = false;
    for (std::size_t n = 0; n < c.orbit_size(); ++n) {
        auto in = adaptive(c.shift(n), beta);
        if (!in) {
            undecided = true;
            continue;
        }
        if (in_overlap(*in)) return {UniqueCheck::Kind::TailInOverlap, n};
    }
    return {undecided ? UniqueCheck::Kind::Undecidable : UniqueCheck::Kind::InUtilde, 0};
}

namespace {

std::optional<Tri> intersect(const Tri& t, const Tri& u) {
    Tri r;
    r.a = std::max(t.a, u.a);
    r.b = std::max(t.b, u.b);
    mpq_class c = std::min(t.a + t.b + t.s, u.a + u.b + u.s);
    r.s = c - r.a - r.b;
    if (r.s <= 0) return std::nullopt;
    return r;
}

void polygon(std::ostream& out, const Tri& t) {
    // Normalized coordinates in [0, 1], scaled to 1000 with y flipped.
    auto X = [](const mpq_class& v) { return fixed3(v * 1000); };
    auto Y = [](const mpq_class& v) { return fixed3(1000 - v * 1000); };
    out << "<polygon points=\"" << X(t.a) << "," << Y(t.b) << " " << X(t.a + t.s) << "," << Y(t.b) << " "
        << X(t.a) << "," << Y(t.b + t.s) << "\"/>\n";
}

}  // namespace

void render_svg(const RealBase& beta, unsigned depth, std::ostream& out) {
    if (depth > 12) fail(ErrorCode::PreconditionFailed, "depth must be <= 12");
    if (compare(beta, RealBase::rational(2)) >= 0) fail(ErrorCode::PreconditionFailed, "beta must lie in (1, 2)");
    const mpq_class bt = beta.is_rational() ? beta.rational_value() : beta.enclosure_bits(64).lo().to_rational();
    const mpq_class r = 1 / bt;

    // Images in normalized coordinates: the hull has legs 1.
    std::vector<Tri> tris{{0, 0, 1}};
    for (unsigned k = 0; k < depth; ++k) {
        std::vector<Tri> next;
        next.reserve(tris.size() * 3);
        for (const Tri& t : tris) {
            mpq_class s = t.s * r, shift = t.s * (1 - r);
            next.push_back({t.a, t.b, s});
            next.push_back({t.a + shift, t.b, s});
            next.push_back({t.a, t.b + shift, s});
        }
        tris = std::move(next);
    }

    // Pairwise intersections, found through a grid on the corners.
    std::vector<Tri> overlaps;
    if (depth > 0) {
        const double leg = tris.front().s.get_d();
        const long cells = std::max(1L, static_cast<long>(std::floor(1.0 / leg)));
        std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
        auto cell = [&](const Tri& t) {
            return std::make_pair(static_cast<long>(std::floor(t.a.get_d() * cells)),
                                  static_cast<long>(std::floor(t.b.get_d() * cells)));
        };
        for (std::size_t i = 0; i < tris.size(); ++i) grid[cell(tris[i])].push_back(i);
        for (std::size_t i = 0; i < tris.size(); ++i) {
            auto [cx, cy] = cell(tris[i]);
            // Corners of intersecting triangles differ by less than one leg in each axis.
            for (long dx = -1; dx <= 1; ++dx) {
                for (long dy = -1; dy <= 1; ++dy) {
                    auto it = grid.find({cx + dx, cy + dy});
                    if (it == grid.end()) continue;
                    for (std::size_t j : it->second) {
                        if (j <= i) continue;
                        if (auto t = intersect(tris[i], tris[j])) {
                            if (overlaps.size() >= 2'000'000) fail(ErrorCode::SizeLimit, "too many overlaps");
                            overlaps.push_back(*t);
                        }
                    }
                }
            }
        }
    }

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    out << "<title>fat Sierpinski gasket, beta=" << beta.label() << ", depth " << depth << "</title>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
    out << "<g fill=\"#9ecae1\" stroke=\"#08306b\" stroke-width=\"0.5\">\n";
    for (const Tri& t : tris) polygon(out, t);
    out << "</g>\n";
    out << "<g fill=\"#cb181d\" fill-opacity=\"0.4\" stroke=\"none\">\n";
    for (const Tri& t : overlaps) polygon(out, t);
    out << "</g>\n";
    out << "</svg>\n";
}

std::string render_svg(const RealBase& beta, unsigned depth) {
    std::ostringstream os;
    render_svg(beta, depth, os);
    return os.str();
}

}  // namespace gasket
