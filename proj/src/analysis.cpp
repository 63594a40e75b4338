#include "gasket/analysis.hpp"

#include <cmath>
#include <sstream>

#include "gasket/error.hpp"

namespace gasket {

GrowthTable growth_counts(const RealBase& beta, std::size_t m_max, std::size_t horizon, unsigned jobs) {
    if (m_max > kMaxGrowthLength)
        fail(ErrorCode::SizeLimit, "m_max above " + std::to_string(kMaxGrowthLength));
    EnumerationOptions opts;
    opts.m = m_max;
    opts.horizon = horizon;
    opts.jobs = jobs;
    opts.list_words = false;
    return enumerate(beta, opts).table;
}

std::string EntropyEstimate::str() const {
    std::ostringstream os;
    os.precision(6);
    os << slope << " +/- " << uncertainty << " nats/symbol (fit m=" << fit_from << ".." << fit_to << ", " << points
       << " points)";
    return os.str();
}

EntropyEstimate entropy_estimate(const std::vector<std::pair<std::size_t, std::size_t>>& counts) {
    if (counts.size() < 4) fail(ErrorCode::InsufficientData, "need at least 4 rows");
    const std::size_t k = std::max<std::size_t>(4, (counts.size() + 1) / 2);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = counts.size() - k; i < counts.size(); ++i) {
        if (counts[i].second == 0) fail(ErrorCode::InsufficientData, "zero count at m=" + std::to_string(counts[i].first));
        pts.emplace_back(static_cast<double>(counts[i].first), std::log(static_cast<double>(counts[i].second)));
    }
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) fail(ErrorCode::InsufficientData, "all rows share one length");
    EntropyEstimate e;
    e.slope = sxy / sxx;
    double ssr = 0;
    for (auto [x, y] : pts) {
        double r = y - (my + e.slope * (x - mx));
        ssr += r * r;
    }
    e.uncertainty = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
    e.fit_from = counts[counts.size() - k].first;
    e.fit_to = counts.back().first;
    e.points = k;
    return e;
}

EntropyEstimate entropy_estimate(const GrowthTable& table) {
    std::vector<std::pair<std::size_t, std::size_t>> counts;
    for (const auto& r : table.rows) counts.emplace_back(r.m, r.extendable);
    return entropy_estimate(counts);
}

std::string DimensionEstimate::str() const {
    std::ostringstream os;
    os.precision(6);
    os << "dimension " << value << " +/- " << uncertainty << " at beta=" << beta << " in " << enclosure
       << "; entropy " << entropy.str();
    return os.str();
}

DimensionEstimate dimension_estimate(const RealBase& beta, const EntropyEstimate& entropy) {
    DimensionEstimate d;
    Interval b = beta.enclosure(1e-12);
    const double lb = std::log(b.mid_double());
    d.value = entropy.slope / lb;
    d.uncertainty = entropy.uncertainty / lb;
    d.entropy = entropy;
    d.beta = beta.label();
    d.enclosure = b.str(15);
    return d;
}

DimensionEstimate dimension_estimate(const RealBase& beta, const GrowthTable& table) {
    return dimension_estimate(beta, entropy_estimate(table));
}

XnBlocks xn_blocks(unsigned n) {
    if (n < 1) fail(ErrorCode::PreconditionFailed, "n must be >= 1");
    const GasketWord u = type_word(Digit::A, n), ub = type_word(Digit::A, n, true);
    return {phi(Digit::A, u), phi(Digit::A, ub), u, ub};
}

std::vector<GasketWord> xn_words(unsigned n, unsigned k) {
    if (n < 1 || k < 1) fail(ErrorCode::PreconditionFailed, "n and k must be >= 1");
    if (n > 12 || k > 20 || (std::size_t{3} << (n - 1)) * k > 1u << 16)
        fail(ErrorCode::SizeLimit, "X_n words too long or too many");
    const XnBlocks b = xn_blocks(n);
    // (word, at Left)
    std::vector<std::pair<GasketWord, bool>> cur = {{GasketWord(), true}, {GasketWord(), false}};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<std::pair<GasketWord, bool>> next;
        next.reserve(cur.size() * 2);
        for (auto& [w, left] : cur) {
            if (left) {
                next.emplace_back(w + b.ll, true);
                next.emplace_back(w + b.lr, false);
            } else {
                next.emplace_back(w + b.rr, false);
                next.emplace_back(w + b.rl, true);
            }
        }
        cur = std::move(next);
    }
    std::vector<GasketWord> out;
    out.reserve(cur.size());
    for (auto& [w, left] : cur) out.push_back(std::move(w));
    return out;
}

double xn_path_entropy(unsigned n) { return std::log(2.0) / (3.0 * std::ldexp(1.0, static_cast<int>(n) - 1)); }

double xn_printed_entropy(unsigned n) {
    return std::log(2.0) / std::log(3.0 * std::ldexp(1.0, static_cast<int>(n) - 1));
}

bool MahlerResidual::within() const {
    Interval a = residual.abs();
    return mpfr_cmp(a.hi().get(), tail_bound.hi().get()) <= 0;
}

double MahlerResidual::ratio() const {
    Interval a = residual.abs();
    return a.lo().to_double() / tail_bound.mid_double();
}

std::string MahlerResidual::str() const {
    std::ostringstream os;
    os << "N=" << terms << " beta in " << beta.str(15) << "\n";
    os << "residual R - S_N in " << residual.str(6) << "\n";
    os << "tail bound " << tail_bound.str(6) << "\n";
    os << (within() ? "within tail bound" : "exceeds tail bound");
    return os.str();
}

MahlerResidual mahler_residual(const RealBase& beta, std::size_t terms) {
    if (terms < 8) fail(ErrorCode::PreconditionFailed, "N must be >= 8");
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(3 * terms + 64);
    Interval x = beta.is_rational() ? Interval(beta.rational_value(), bits + 64) : beta.enclosure_bits(bits);
    const mpfr_prec_t prec = x.precision();
    Interval one(1L, prec);
    Interval y3 = x.reciprocal().pow(3), pw = one, s = Interval(0L, prec);
    for (std::size_t n = 1; n <= terms; ++n) {
        pw = pw * y3;
        if (tau(n)) s = s + pw;
    }
    Interval x3 = x.pow(3);
    Interval r = x * (x3 - x * x - 1) / ((x - 1) * (x3 - 1));
    MahlerResidual m;
    m.residual = r - s;
    m.tail_bound = pw / (one - y3);
    m.beta = x;
    m.terms = terms;
    return m;
}

std::vector<OrbitPoint> orbit_points(const RealBase& beta, unsigned n_max) {
    if (n_max > 8) fail(ErrorCode::PreconditionFailed, "n_max must be <= 8");
    if (compare(beta, beta_golden()) <= 0 || compare(beta, RealBase::rational(mpq_class(3, 2))) > 0)
        fail(ErrorCode::PreconditionFailed, beta.label() + " is not in (beta_G, 3/2]");
    static const char* kOrbits[6] = {"BAC", "CAB", "CBA", "ABC", "ACB", "BCA"};
    const mpfr_prec_t bits = 256;
    std::vector<OrbitPoint> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (Digit d : kDigits) {
            if (n == 0 && d != Digit::A) continue;
            for (const char* orb : kOrbits) {
                GasketWord pre(std::vector<Digit>(n, d));
                const GasketWord per = GasketWord::parse(orb);
                PeriodicCoding c(pre, per);
                OrbitPoint pt{c, d, n, orb, point_of(c, beta, bits), PlanarPoint(), false};
                // Q = beta^2 e_1 + beta e_2 + e_3 per coordinate, for the orbit e_1 e_2 e_3.
                const int ax[3] = {p1(per[0]), p1(per[1]), p1(per[2])};
                const int ay[3] = {p2(per[0]), p2(per[1]), p2(per[2])};
                if (beta.is_rational()) {
                    const mpq_class b = beta.rational_value(), y = 1 / b;
                    mpq_class geo = 0, yn = 1;
                    for (unsigned i = 1; i <= n; ++i) {
                        yn *= y;
                        geo += yn;
                    }
                    mpq_class px = d == Digit::B ? geo : mpq_class(0), py = d == Digit::C ? geo : mpq_class(0);
                    mpq_class den = (b * b * b - 1) / yn;
                    mpq_class qx = b * b * ax[0] + b * ax[1] + ax[2], qy = b * b * ay[0] + b * ay[1] + ay[2];
                    mpq_class cx = px + qx / den, cy = py + qy / den;
                    pt.closed.exact_x = cx;
                    pt.closed.exact_y = cy;
                    pt.closed.x = Interval(cx, bits);
                    pt.closed.y = Interval(cy, bits);
                    pt.equal = *pt.series.exact_x == cx && *pt.series.exact_y == cy;
                } else {
                    const Interval b = beta.enclosure_bits(bits), y = b.reciprocal();
                    const mpfr_prec_t prec = b.precision();
                    Interval geo(0L, prec), yn(1L, prec);
                    for (unsigned i = 1; i <= n; ++i) {
                        yn = yn * y;
                        geo = geo + yn;
                    }
                    Interval zero(0L, prec);
                    Interval px = d == Digit::B ? geo : zero, py = d == Digit::C ? geo : zero;
                    auto q = [&](const int* e) {
                        return b * b * Interval(long(e[0]), prec) + b * Interval(long(e[1]), prec) + long(e[2]);
                    };
                    Interval den = (b.pow(3) - 1) / yn;
                    pt.closed.x = px + q(ax) / den;
                    pt.closed.y = py + q(ay) / den;
                    pt.equal = !pt.closed.x.disjoint_from(pt.series.x) && !pt.closed.y.disjoint_from(pt.series.y);
                }
                out.push_back(std::move(pt));
            }
        }
    }
    return out;
}

VerificationReport verify_periodic(unsigned n) {
    if (n < 1) fail(ErrorCode::PreconditionFailed, "n must be >= 1");
    VerificationReport r;
    r.name = "periodic";
    r.statement = "(u_k), (v_k), (w_k), (Phi_A(u_k)), (Phi_B(v_k)), (Phi_C(w_k)) are admissible above beta_n for "
                  "k <= n and fail at beta_k";
    const RealBase probe = plateau_probes(n).front();
    r.beta = probe.label() + " in (beta_n:" + std::to_string(n) + ", beta_n:" + std::to_string(n + 1) + ")";
    auto family = [](unsigned k) {
        std::vector<GasketWord> f;
        for (Digit kind : kDigits) {
            GasketWord w = type_word(kind, k);
            f.push_back(w);
            f.push_back(phi(kind, w));
        }
        return f;
    };
    for (unsigned k = 0; k <= n; ++k) {
        for (const auto& w : family(k)) {
            PeriodicCoding c(GasketWord(), w);
            auto v = is_admissible_periodic(c, probe);
            r.add("(" + w.str() + ") admissible at " + probe.label(), v.status == Status::Admissible, v.str());
        }
    }
    for (unsigned k = 1; k <= n; ++k) {
        const RealBase bk = beta_ladder(k);
        for (const auto& w : family(k)) {
            PeriodicCoding c(GasketWord(), w);
            auto v = is_admissible_periodic(c, bk);
            r.add("(" + w.str() + ") violation at beta_n:" + std::to_string(k), v.status == Status::Violation,
                  v.str());
        }
    }
    return r;
}

}  // namespace gasket
