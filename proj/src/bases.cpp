#include "gasket/bases.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "gasket/error.hpp"

namespace gasket {

namespace {

// g(x) with a single sign change at the root inside the working bracket.
class RootFunction {
public:
    virtual ~RootFunction() = default;
    // Rigorous enclosure of g at the rational point x.
    virtual Interval eval(const mpq_class& x, mpfr_prec_t prec) = 0;
    // Approximate g and g' at x, for Newton proposals only.
    virtual bool approx(const Real& x, Real& g, Real& dg) = 0;
    virtual std::optional<int> exact_sign(const mpq_class&) { return std::nullopt; }
};

class PolynomialFunction final : public RootFunction {
public:
    explicit PolynomialFunction(Polynomial p) : p_(std::move(p)), dp_(p_.derivative()) {}

    Interval eval(const mpq_class& x, mpfr_prec_t prec) override { return p_.eval(Interval(x, prec)); }

    bool approx(const Real& x, Real& g, Real& dg) override {
        horner(p_, x, g);
        horner(dp_, x, dg);
        return mpfr_regular_p(dg.get()) != 0;
    }

    std::optional<int> exact_sign(const mpq_class& x) override { return sgn(p_.eval(x)); }

private:
    static void horner(const Polynomial& p, const Real& x, Real& out) {
        out = Real(x.precision());
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            mpfr_mul(out.get(), out.get(), x.get(), MPFR_RNDN);
            mpfr_add_z(out.get(), out.get(), p.coeffs()[i].get_mpz_t(), MPFR_RNDN);
        }
    }

    Polynomial p_, dp_;
};

// Value and derivative with respect to y, carried together.
struct Dual {
    Real v, d;
    explicit Dual(mpfr_prec_t p) : v(p), d(p) {}
};

// Horner for sum_{i=1}^{n} c_i y^i with derivative.
template <class Coef>
void dual_series(const Coef& coef, std::size_t n, const Real& y, Dual& out) {
    mpfr_prec_t p = y.precision();
    out = Dual(p);
    Real t(p);
    for (std::size_t i = n; i >= 1; --i) {
        // (v, d) <- ((v + c_i) y, d y + v + c_i)
        mpfr_add_ui(t.get(), out.v.get(), coef(i), MPFR_RNDN);
        mpfr_mul(out.d.get(), out.d.get(), y.get(), MPFR_RNDN);
        mpfr_add(out.d.get(), out.d.get(), t.get(), MPFR_RNDN);
        mpfr_mul(out.v.get(), t.get(), y.get(), MPFR_RNDN);
    }
}

template <class Coef>
Interval interval_series(const Coef& coef, std::size_t n, const Interval& y) {
    Interval acc(0L, y.precision());
    for (std::size_t i = n; i >= 1; --i) {
        acc += static_cast<long>(coef(i));
        acc *= y;
    }
    return acc;
}

// G(x) = sum b_i x^-i + x^-q (sum a_i x^-i) / (1 - x^-p) - 1, decreasing on (1, inf).
class ExpansionFunction final : public RootFunction {
public:
    explicit ExpansionFunction(const EventuallyPeriodicBinary& a) : a_(a) {}

    Interval eval(const mpq_class& x, mpfr_prec_t prec) override {
        const auto& pre = a_.preperiod();
        const auto& per = a_.period();
        Interval y = Interval(x, prec).reciprocal();
        Interval b = interval_series([&](std::size_t i) { return pre[i - 1]; }, pre.size(), y);
        Interval a = interval_series([&](std::size_t i) { return per[i - 1]; }, per.size(), y);
        Interval den = Interval(1L, prec) - y.pow(per.size());
        Interval g = b + y.pow(pre.size()) * a / den;
        g -= 1;
        return g;
    }

    bool approx(const Real& x, Real& g, Real& dg) override {
        mpfr_prec_t p = x.precision();
        const auto& pre = a_.preperiod();
        const auto& per = a_.period();
        const std::size_t q = pre.size(), n = per.size();
        Real y(p);
        mpfr_ui_div(y.get(), 1, x.get(), MPFR_RNDN);
        Dual B(p), A(p);
        dual_series([&](std::size_t i) { return static_cast<unsigned long>(pre[i - 1]); }, q, y, B);
        dual_series([&](std::size_t i) { return static_cast<unsigned long>(per[i - 1]); }, n, y, A);
        Real yq(p), dyq(p), yp(p), dyp(p), t(p), den(p), r(p), dr(p);
        mpfr_pow_ui(yq.get(), y.get(), q, MPFR_RNDN);
        if (q == 0) {
            mpfr_set_zero(dyq.get(), 1);
        } else {
            mpfr_pow_ui(dyq.get(), y.get(), q - 1, MPFR_RNDN);
            mpfr_mul_ui(dyq.get(), dyq.get(), q, MPFR_RNDN);
        }
        mpfr_pow_ui(yp.get(), y.get(), n, MPFR_RNDN);
        mpfr_pow_ui(dyp.get(), y.get(), n - 1, MPFR_RNDN);
        mpfr_mul_ui(dyp.get(), dyp.get(), n, MPFR_RNDN);
        mpfr_ui_sub(den.get(), 1, yp.get(), MPFR_RNDN);
        // R = A / den, R' = (A' den + A yp') / den^2
        mpfr_div(r.get(), A.v.get(), den.get(), MPFR_RNDN);
        mpfr_mul(dr.get(), A.d.get(), den.get(), MPFR_RNDN);
        mpfr_mul(t.get(), A.v.get(), dyp.get(), MPFR_RNDN);
        mpfr_add(dr.get(), dr.get(), t.get(), MPFR_RNDN);
        mpfr_div(dr.get(), dr.get(), den.get(), MPFR_RNDN);
        mpfr_div(dr.get(), dr.get(), den.get(), MPFR_RNDN);
        // G = B + yq R - 1
        g = Real(p);
        mpfr_mul(g.get(), yq.get(), r.get(), MPFR_RNDN);
        mpfr_add(g.get(), g.get(), B.v.get(), MPFR_RNDN);
        mpfr_sub_ui(g.get(), g.get(), 1, MPFR_RNDN);
        // dG/dy = B' + yq' R + yq R'
        Real dy(p);
        mpfr_mul(dy.get(), dyq.get(), r.get(), MPFR_RNDN);
        mpfr_mul(t.get(), yq.get(), dr.get(), MPFR_RNDN);
        mpfr_add(dy.get(), dy.get(), t.get(), MPFR_RNDN);
        mpfr_add(dy.get(), dy.get(), B.d.get(), MPFR_RNDN);
        // dG/dx = dG/dy * (-y^2)
        dg = Real(p);
        mpfr_sqr(t.get(), y.get(), MPFR_RNDN);
        mpfr_mul(dg.get(), dy.get(), t.get(), MPFR_RNDN);
        mpfr_neg(dg.get(), dg.get(), MPFR_RNDN);
        return mpfr_regular_p(dg.get()) != 0;
    }

private:
    EventuallyPeriodicBinary a_;
};

// G(x) = sum lambda_i x^-i - 1, truncated with the tail in [0, x^-N/(x-1)].
class CriticalFunction final : public RootFunction {
public:
    Interval eval(const mpq_class& x, mpfr_prec_t prec) override {
        std::size_t n = terms_for(x, prec);
        ensure(n);
        Interval X(x, prec);
        Interval y = X.reciprocal();
        Interval s = interval_series([&](std::size_t i) { return lambda_[i - 1]; }, n, y);
        Interval xm1 = X - 1L;
        Interval tail = y.pow(n) / xm1;
        Real zero(prec);
        Interval tail_range(std::move(zero), tail.hi());
        s += tail_range;
        s -= 1;
        return s;
    }

    bool approx(const Real& x, Real& g, Real& dg) override {
        mpfr_prec_t p = x.precision();
        std::size_t n = terms_for(x.to_rational(), p);
        ensure(n);
        Real y(p);
        mpfr_ui_div(y.get(), 1, x.get(), MPFR_RNDN);
        Dual s(p);
        dual_series([&](std::size_t i) { return static_cast<unsigned long>(lambda_[i - 1]); }, n, y, s);
        g = s.v;
        mpfr_sub_ui(g.get(), g.get(), 1, MPFR_RNDN);
        Real t(p);
        mpfr_sqr(t.get(), y.get(), MPFR_RNDN);
        dg = Real(p);
        mpfr_mul(dg.get(), s.d.get(), t.get(), MPFR_RNDN);
        mpfr_neg(dg.get(), dg.get(), MPFR_RNDN);
        return mpfr_regular_p(dg.get()) != 0;
    }

private:
    static std::size_t terms_for(const mpq_class& x, mpfr_prec_t prec) {
        double l2 = std::log2(std::max(x.get_d(), 1.0 + 1e-9));
        return static_cast<std::size_t>(std::ceil((static_cast<double>(prec) + 16.0) / l2)) + 8;
    }
    void ensure(std::size_t n) {
        if (lambda_.size() < n) lambda_ = lambda_prefix(std::max(n, 2 * lambda_.size()));
    }
    BinaryWord lambda_;
};

long floor_log2(const mpq_class& w) {
    // floor(log2 w) up to +-1, enough for step sizing
    return static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2));
}

mpq_class pow2(long e) {
    mpq_class q = 1;
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return q;
}

mpfr_prec_t bits_of(const mpq_class& x) {
    return static_cast<mpfr_prec_t>(mpz_sizeinbase(x.get_num_mpz_t(), 2) +
                                    mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

}  // namespace

struct RealBase::Impl {
    Kind kind;
    std::string label;
    mpq_class value;  // rational kind
    std::optional<Polynomial> poly;
    std::optional<EventuallyPeriodicBinary> expansion;
    std::unique_ptr<RootFunction> fn;
    int sign_left = 1;

    std::mutex mu;
    mpq_class lo, hi;
    std::optional<QuasiGreedyExpansion> cache;

    int certified_sign(const mpq_class& x, mpfr_prec_t start) {
        for (mpfr_prec_t p = std::max<mpfr_prec_t>(start, 64); p <= 2 * kPrecisionCap + 256; p *= 2) {
            if (auto s = fn->eval(x, p).sign()) return *s;
        }
        if (auto e = fn->exact_sign(x)) return *e;
        fail(ErrorCode::PrecisionExhausted, "cannot sign the defining function of " + label);
    }

    // Place x into the bracket using its certified sign.
    bool cut(const mpq_class& x, mpfr_prec_t prec) {
        if (x <= lo || x >= hi) return false;
        int s = certified_sign(x, prec);
        if (s == 0) {
            lo = hi = x;
        } else if (s == sign_left) {
            lo = x;
        } else {
            hi = x;
        }
        return true;
    }

    void refine(mpfr_prec_t bits) {
        if (kind == Kind::Rational) return;
        if (bits > kPrecisionCap)
            fail(ErrorCode::PrecisionExhausted, "requested " + std::to_string(bits) + " bits for " + label);
        const mpq_class target = pow2(-static_cast<long>(bits));
        while (hi - lo > target) {
            mpq_class w = hi - lo;
            long wb = -floor_log2(w);
            mpq_class before = w;
            if (wb >= 6) {
                long k = std::min<long>(static_cast<long>(bits) + 4, 2 * wb - 3);
                mpfr_prec_t prec = static_cast<mpfr_prec_t>(k + 64);
                Real x(prec);
                mpq_class mid = (lo + hi) / 2;
                mpfr_set_q(x.get(), mid.get_mpq_t(), MPFR_RNDN);
                Real g(prec), dg(prec), step(prec);
                bool ok = true;
                for (int it = 0; it < 3 && ok; ++it) {
                    ok = fn->approx(x, g, dg);
                    if (!ok) break;
                    mpfr_div(step.get(), g.get(), dg.get(), MPFR_RNDN);
                    mpfr_sub(x.get(), x.get(), step.get(), MPFR_RNDN);
                    ok = mpfr_number_p(x.get()) != 0;
                }
                if (ok) {
                    mpz_class m;
                    mpfr_mul_2ui(x.get(), x.get(), static_cast<unsigned long>(k + 2), MPFR_RNDN);
                    mpfr_get_z(m.get_mpz_t(), x.get(), MPFR_RNDN);
                    mpq_class c = mpq_class(m) * pow2(-(k + 2));
                    mpq_class eps = pow2(-k);
                    cut(c - eps, prec);
                    cut(c + eps, prec);
                }
            }
            if (hi - lo > target && (hi - lo) * 2 > before) {
                mpq_class mid = (lo + hi) / 2;
                cut(mid, bits_of(mid) + 64);
            }
        }
    }

    Interval enclosure(mpfr_prec_t bits) {
        mpfr_prec_t prec = std::max<mpfr_prec_t>(bits + 64, kStartPrecision);
        if (kind == Kind::Rational) return Interval(value, prec);
        std::lock_guard lock(mu);
        refine(bits);
        return Interval(lo, hi, prec);
    }
};

RealBase RealBase::rational(const mpq_class& q, std::string label) {
    if (q <= 1 || q > 2) fail(ErrorCode::PreconditionFailed, "base " + q.get_str() + " outside (1, 2]");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Rational;
    impl->value = q;
    impl->value.canonicalize();
    impl->lo = impl->hi = impl->value;
    impl->label = label.empty() ? impl->value.get_str() : std::move(label);
    return RealBase(std::move(impl));
}

RealBase RealBase::polynomial_root(const Polynomial& p, const mpq_class& lo, const mpq_class& hi,
                                   std::string label) {
    if (!(lo < hi) || lo < 1 || hi > 2)
        fail(ErrorCode::PreconditionFailed, "isolating interval must lie in [1, 2]");
    mpq_class plo = p.eval(lo), phi_ = p.eval(hi);
    if (sgn(plo) * sgn(phi_) >= 0 || sturm_count(p, lo, hi) != 1)
        fail(ErrorCode::PreconditionFailed, "interval does not isolate exactly one simple root of " + p.str());
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Polynomial;
    impl->poly = p;
    impl->fn = std::make_unique<PolynomialFunction>(p);
    impl->sign_left = sgn(plo);
    impl->lo = lo;
    impl->hi = hi;
    impl->label = label.empty() ? "poly:" + p.str() + "@[" + lo.get_str() + "," + hi.get_str() + "]"
                                : std::move(label);
    return RealBase(std::move(impl));
}

namespace {

// X^q (X^p - 1) - (X^p - 1) sum b_i X^(q-i) - sum a_i X^(p-i)
Polynomial cleared_polynomial(const EventuallyPeriodicBinary& a) {
    const auto& pre = a.preperiod();
    const auto& per = a.period();
    const std::size_t q = pre.size(), p = per.size();
    std::vector<mpz_class> c(p + q + 1, 0);
    c[p + q] += 1;
    c[q] -= 1;
    for (std::size_t i = 1; i <= q; ++i) {
        if (!pre[i - 1]) continue;
        c[p + q - i] -= 1;
        c[q - i] += 1;
    }
    for (std::size_t i = 1; i <= p; ++i)
        if (per[i - 1]) c[p - i] -= 1;
    return Polynomial(std::move(c));
}

}  // namespace

RealBase RealBase::from_expansion(const EventuallyPeriodicBinary& a, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Expansion;
    impl->expansion = a;
    impl->poly = cleared_polynomial(a);
    impl->fn = std::make_unique<ExpansionFunction>(a);
    impl->sign_left = 1;
    impl->lo = 1;
    impl->hi = 2;
    impl->label = label.empty() ? "delta^-1(" + a.str() + ")" : std::move(label);
    return RealBase(std::move(impl));
}

RealBase RealBase::critical() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Critical;
    impl->fn = std::make_unique<CriticalFunction>();
    impl->sign_left = 1;
    impl->lo = mpq_class(3, 2);
    impl->hi = mpq_class(8, 5);
    if (impl->certified_sign(impl->lo, 128) != 1 || impl->certified_sign(impl->hi, 128) != -1)
        fail(ErrorCode::PreconditionFailed, "critical bracket check failed");
    impl->label = "beta_c";
    return RealBase(std::move(impl));
}

RealBase::Kind RealBase::kind() const { return impl_->kind; }
const std::string& RealBase::label() const { return impl_->label; }
const mpq_class& RealBase::rational_value() const {
    if (impl_->kind != Kind::Rational) fail(ErrorCode::PreconditionFailed, label() + " is not rational");
    return impl_->value;
}
const std::optional<Polynomial>& RealBase::polynomial() const { return impl_->poly; }
const std::optional<EventuallyPeriodicBinary>& RealBase::defining_expansion() const { return impl_->expansion; }

Interval RealBase::enclosure_bits(mpfr_prec_t bits) const { return impl_->enclosure(bits); }

Interval RealBase::enclosure(double tol) const {
    if (!(tol > 0)) fail(ErrorCode::PreconditionFailed, "tolerance must be positive");
    auto bits = static_cast<mpfr_prec_t>(std::ceil(-std::log2(tol)));
    return enclosure_bits(std::max<mpfr_prec_t>(bits, 1));
}

std::pair<mpq_class, mpq_class> RealBase::bracket() const {
    std::lock_guard lock(impl_->mu);
    return {impl_->lo, impl_->hi};
}

int compare(const RealBase& a, const RealBase& b, mpfr_prec_t cap_bits) {
    if (a.same_object(b)) return 0;
    if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value());
    // delta is strictly increasing, so exact expansions order their bases exactly.
    const auto& xa = a.defining_expansion();
    const auto& xb = b.defining_expansion();
    if (xa && xb) {
        switch (lex_compare(*xa, *xb)) {
            case LexOrder::Less: return -1;
            case LexOrder::Greater: return 1;
            default: return 0;
        }
    }
    for (mpfr_prec_t bits = 32; bits <= cap_bits; bits *= 2) {
        Interval ea = a.enclosure_bits(bits), eb = b.enclosure_bits(bits);
        if (ea.certainly_less(eb)) return -1;
        if (eb.certainly_less(ea)) return 1;
    }
    fail(ErrorCode::Undecidable, "cannot separate " + a.label() + " and " + b.label());
}

namespace {

QuasiGreedyExpansion expand_rational(const mpq_class& beta, std::size_t n) {
    QuasiGreedyExpansion out;
    std::vector<Bit> d;
    d.reserve(n);
    std::map<mpq_class, std::size_t> seen;  // x_k -> k
    mpq_class x = 1;
    seen.emplace(x, 0);
    while (d.size() < n) {
        mpq_class y = beta * x;
        Bit digit = y > 1 ? 1 : 0;
        x = y - digit;
        d.push_back(digit);
        auto [it, fresh] = seen.emplace(x, d.size());
        if (!fresh) {
            std::size_t start = it->second;
            std::vector<Bit> pre(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(start));
            std::vector<Bit> per(d.begin() + static_cast<std::ptrdiff_t>(start), d.end());
            out.exact.emplace(BinaryWord(pre), BinaryWord(per));
            break;
        }
    }
    out.digits = out.exact ? out.exact->prefix(n) : BinaryWord(std::move(d));
    return out;
}

}  // namespace

QuasiGreedyExpansion expand(const RealBase& beta, std::size_t n) {
    if (n == 0) fail(ErrorCode::PreconditionFailed, "expansion length must be positive");
    auto& impl = *beta.impl_;
    if (impl.kind == RealBase::Kind::Rational) return expand_rational(impl.value, n);

    std::lock_guard lock(impl.mu);
    if (impl.cache) {
        if (impl.cache->exact) return {impl.cache->exact->prefix(n), impl.cache->exact};
        if (impl.cache->digits.size() >= n) return {impl.cache->digits.prefix(n), std::nullopt};
    }

    // Exact-hit test: beta * x_{i-1} == 1 at step i, i.e. Q_i(beta) = 0.
    auto exact_hit = [&](const std::vector<Bit>& d) -> bool {
        const std::size_t i = d.size() + 1;
        if (impl.expansion) {
            const auto& a = *impl.expansion;
            if (!a.preperiod().empty() || i % a.period().size() != 0) return false;
            for (std::size_t j = 0; j + 1 < i; ++j)
                if (a.at(j) != d[j]) return false;
            return a.at(i - 1) == 0;
        }
        if (impl.poly && i <= 96 && impl.poly->degree() <= 96) {
            std::vector<mpz_class> c(i + 1, 0);
            c[i] = 1;
            c[0] = -1;
            for (std::size_t j = 1; j < i; ++j)
                if (d[j - 1]) c[i - j] -= 1;
            Polynomial g = gcd(*impl.poly, Polynomial(std::move(c)));
            return g.degree() >= 1 && sturm_count(g, impl.lo, impl.hi) >= 1;
        }
        return false;
    };

    double l2 = std::log2(impl.hi.get_d());
    auto prec = static_cast<mpfr_prec_t>(std::ceil(l2 * static_cast<double>(n))) + 64;
    prec = std::max(prec, kStartPrecision);
    for (;; prec *= 2) {
        if (prec > kPrecisionCap)
            fail(ErrorCode::PrecisionExhausted, "quasi-greedy digits of " + impl.label + " beyond " +
                                                    std::to_string(kPrecisionCap) + " bits");
        impl.refine(prec);
        Interval b(impl.lo, impl.hi, prec + 32);
        Interval x(1L, prec + 32);
        std::vector<Bit> d;
        d.reserve(n);
        bool stuck = false;
        std::optional<EventuallyPeriodicBinary> exact;
        while (d.size() < n) {
            Interval y = b * x;
            if (y.certainly_less(1)) {
                d.push_back(0);
                x = y;
            } else if (y.certainly_greater(1)) {
                d.push_back(1);
                x = y - 1L;
            } else if (exact_hit(d)) {
                d.push_back(0);
                exact.emplace(BinaryWord(), BinaryWord(d));
                break;
            } else {
                stuck = true;
                break;
            }
            x.clamp(0, 1);
        }
        if (stuck) continue;
        QuasiGreedyExpansion out;
        out.exact = exact;
        out.digits = exact ? exact->prefix(n) : BinaryWord(std::move(d));
        impl.cache = out;
        return out;
    }
}

BinaryWord quasi_greedy(const RealBase& beta, std::size_t n) { return expand(beta, n).digits; }

ParryResult parry_check(const BinaryWord& a) {
    for (std::size_t k = 1; k < a.size(); ++k) {
        for (std::size_t i = 0; k + i < a.size(); ++i) {
            if (a[k + i] == a[i]) continue;
            if (a[k + i] > a[i]) return {false, k + 1};
            break;
        }
    }
    return {};
}

ParryResult parry_check(const EventuallyPeriodicBinary& a) {
    for (std::size_t k = 1; k < a.orbit_size(); ++k)
        if (lex_compare(a.shift(k), a) == LexOrder::Greater) return {false, k + 1};
    return {};
}

RealBase delta_inverse(const EventuallyPeriodicBinary& a, double tol) {
    if (a.period() == BinaryWord::parse("0")) fail(ErrorCode::EndsInZeros, a.str());
    if (auto r = parry_check(a); !r.ok)
        fail(ErrorCode::NotParryAdmissible, a.str() + " at shift position " + std::to_string(r.position));
    if (a.preperiod().empty() && a.period() == BinaryWord::parse("1")) return RealBase::rational(2);
    RealBase b = RealBase::from_expansion(a);
    b.enclosure(tol);
    return b;
}

EventuallyPeriodicBinary ladder_expansion(unsigned n) { return {BinaryWord(), tm_word(n)}; }

EventuallyPeriodicBinary hat_expansion(unsigned n) {
    BinaryWord t = tm_word(n);
    return {plus(t), theta(t)};
}

RealBase beta_ladder(unsigned n, double tol) {
    if (n < 1) fail(ErrorCode::PreconditionFailed, "ladder index must be >= 1");
    RealBase b = RealBase::from_expansion(ladder_expansion(n), "beta_n:" + std::to_string(n));
    b.enclosure(tol);
    return b;
}

RealBase beta_hat(unsigned n, double tol) {
    if (n < 1) fail(ErrorCode::PreconditionFailed, "ladder index must be >= 1");
    RealBase b = RealBase::from_expansion(hat_expansion(n), "beta_hat:" + std::to_string(n));
    b.enclosure(tol);
    return b;
}

RealBase critical_base(double tol) {
    RealBase b = RealBase::critical();
    b.enclosure(tol);
    return b;
}

RealBase multinacci(unsigned m, double tol) {
    if (m < 1) fail(ErrorCode::PreconditionFailed, "multinacci order must be >= 1");
    BinaryWord block(m, 1);
    block.push_back(0);
    RealBase b = RealBase::from_expansion({BinaryWord(), block}, "multinacci:" + std::to_string(m));
    b.enclosure(tol);
    return b;
}

RealBase beta_golden() {
    return RealBase::from_expansion(EventuallyPeriodicBinary::parse("(100)"), "beta_G");
}

RealBase beta_star() {
    return RealBase::polynomial_root(Polynomial::parse("x^3-2x^2+2x-2"), mpq_class(3, 2), mpq_class(8, 5),
                                     "beta_star");
}

SeriesResidual lambda_residual(const Interval& x, std::size_t n) {
    BinaryWord lam = lambda_prefix(n);
    Interval y = x.reciprocal();
    Interval s = interval_series([&](std::size_t i) { return lam[i - 1]; }, n, y);
    s -= 1;
    return {s, y.pow(n) / (x - 1L)};
}

mpq_class parse_rational(std::string_view text) {
    auto bad = [&] { fail(ErrorCode::Parse, "not a number: " + std::string(text)); };
    if (text.empty()) bad();
    try {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            mpq_class q(std::string(text.substr(0, slash)) + "/" + std::string(text.substr(slash + 1)));
            if (q.get_den() == 0) bad();
            q.canonicalize();
            return q;
        }
        std::string s(text);
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            s.erase(0, 1);
        }
        auto dot = s.find('.');
        std::string ip = s.substr(0, dot), fp = dot == std::string::npos ? "" : s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad();
        for (char c : ip + fp)
            if (c < '0' || c > '9') bad();
        mpz_class num(ip.empty() && !fp.empty() ? fp : ip + fp);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        mpq_class q(num, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    } catch (const std::invalid_argument&) {
    }
    fail(ErrorCode::Parse, "not a number: " + std::string(text));
}

RealBase RealBase::parse(std::string_view text) {
    auto named_index = [&](std::string_view prefix) -> std::optional<unsigned> {
        if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
        std::string rest(text.substr(prefix.size()));
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::Parse, "bad index in " + std::string(text));
        return static_cast<unsigned>(std::stoul(rest));
    };
    if (text == "beta_G") return beta_golden();
    if (text == "beta_star") return beta_star();
    if (text == "beta_c") return RealBase::critical();
    if (auto k = named_index("beta_n:")) return beta_ladder(*k);
    if (auto k = named_index("beta_hat:")) return beta_hat(*k);
    if (auto k = named_index("multinacci:")) return multinacci(*k);
    if (text.substr(0, 5) == "poly:") {
        auto at = text.find('@');
        if (at == std::string_view::npos) fail(ErrorCode::Parse, "poly base needs @[lo,hi]");
        auto range = text.substr(at + 1);
        if (range.size() < 5 || range.front() != '[' || range.back() != ']')
            fail(ErrorCode::Parse, "bad isolating interval in " + std::string(text));
        auto comma = range.find(',');
        if (comma == std::string_view::npos) fail(ErrorCode::Parse, "bad isolating interval");
        mpq_class lo = parse_rational(range.substr(1, comma - 1));
        mpq_class hi = parse_rational(range.substr(comma + 1, range.size() - comma - 2));
        return polynomial_root(Polynomial::parse(text.substr(5, at - 5)), lo, hi, std::string(text));
    }
    return rational(parse_rational(text), std::string(text));
}

}  // namespace gasket
