#include "gasket/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

mpq_class Real::to_rational() const {
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class q(m);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return q;
}

std::string Real::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_si(lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(hi_.get(), v, MPFR_RNDU);
}

Interval::Interval(const mpq_class& q, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_q(lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_cmp(lo_.get(), hi_.get()) > 0) throw std::invalid_argument("interval with lo > hi");
}

double Interval::mid_double() const {
    Real m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
}

Real Interval::width() const {
    Real w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

double Interval::width_double() const { return mpfr_get_d(width().get(), MPFR_RNDU); }

bool Interval::contains(long v) const {
    return mpfr_cmp_si(lo_.get(), v) <= 0 && mpfr_cmp_si(hi_.get(), v) >= 0;
}

bool Interval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::subset_of(const Interval& o) const {
    return mpfr_cmp(o.lo_.get(), lo_.get()) <= 0 && mpfr_cmp(hi_.get(), o.hi_.get()) <= 0;
}

bool Interval::disjoint_from(const Interval& o) const {
    return mpfr_cmp(hi_.get(), o.lo_.get()) < 0 || mpfr_cmp(o.hi_.get(), lo_.get()) < 0;
}

bool Interval::certainly_less(long v) const { return mpfr_cmp_si(hi_.get(), v) < 0; }
bool Interval::certainly_greater(long v) const { return mpfr_cmp_si(lo_.get(), v) > 0; }
bool Interval::certainly_less(const Interval& o) const { return mpfr_cmp(hi_.get(), o.lo_.get()) < 0; }

std::optional<int> Interval::sign() const {
    if (mpfr_sgn(lo_.get()) > 0) return 1;
    if (mpfr_sgn(hi_.get()) < 0) return -1;
    return std::nullopt;
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Interval& Interval::operator+=(const Interval& o) {
    mpfr_prec_t p = joint(*this, o);
    Real lo(p), hi(p);
    mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval& Interval::operator-=(const Interval& o) {
    mpfr_prec_t p = joint(*this, o);
    Real lo(p), hi(p);
    mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval& Interval::operator*=(const Interval& o) {
    mpfr_prec_t p = joint(*this, o);
    Real lo(p), hi(p), t(p);
    // Fast path: both nonnegative, the common case in this library.
    if (mpfr_sgn(lo_.get()) >= 0 && mpfr_sgn(o.lo_.get()) >= 0) {
        mpfr_mul(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_mul(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    } else {
        mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
        mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
        bool first = true;
        for (auto x : a) {
            for (auto y : b) {
                mpfr_mul(t.get(), x, y, MPFR_RNDD);
                if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
                mpfr_mul(t.get(), x, y, MPFR_RNDU);
                if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
                first = false;
            }
        }
    }
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval Interval::reciprocal() const {
    if (contains_zero()) fail(ErrorCode::PreconditionFailed, "interval division by a range containing 0");
    Real lo(precision()), hi(precision());
    mpfr_ui_div(lo.get(), 1, hi_.get(), MPFR_RNDD);
    mpfr_ui_div(hi.get(), 1, lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval& Interval::operator/=(const Interval& o) { return *this *= o.reciprocal(); }

Interval& Interval::operator+=(long v) {
    mpfr_add_si(lo_.get(), lo_.get(), v, MPFR_RNDD);
    mpfr_add_si(hi_.get(), hi_.get(), v, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(long v) {
    mpfr_sub_si(lo_.get(), lo_.get(), v, MPFR_RNDD);
    mpfr_sub_si(hi_.get(), hi_.get(), v, MPFR_RNDU);
    return *this;
}

Interval Interval::operator-() const {
    Real lo(precision()), hi(precision());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow(unsigned long e) const {
    if (mpfr_sgn(lo_.get()) < 0) fail(ErrorCode::PreconditionFailed, "pow of an interval with negative part");
    Real lo(precision()), hi(precision());
    mpfr_pow_ui(lo.get(), lo_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), hi_.get(), e, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_.get()) <= 0) fail(ErrorCode::PreconditionFailed, "log of a nonpositive interval");
    Real lo(precision()), hi(precision());
    mpfr_log(lo.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    Real lo(precision()), hi(precision());
    mpfr_set_zero(lo.get(), 1);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_cmp(hi.get(), hi_.get()) < 0) mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::hull(const Interval& o) const {
    Interval out = *this;
    if (mpfr_cmp(o.lo_.get(), lo_.get()) < 0) out.lo_ = o.lo_;
    if (mpfr_cmp(o.hi_.get(), hi_.get()) > 0) out.hi_ = o.hi_;
    return out;
}

void Interval::clamp(long a, long b) {
    if (mpfr_cmp_si(lo_.get(), a) < 0) mpfr_set_si(lo_.get(), a, MPFR_RNDD);
    if (mpfr_cmp_si(hi_.get(), b) > 0) mpfr_set_si(hi_.get(), b, MPFR_RNDU);
    if (mpfr_cmp(lo_.get(), hi_.get()) > 0) mpfr_set(lo_.get(), hi_.get(), MPFR_RNDD);
}

std::string Interval::str(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

}  // namespace gasket
