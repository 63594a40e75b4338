#pragma once

// Outward-rounded interval arithmetic on MPFR endpoints.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

namespace gasket {

inline constexpr mpfr_prec_t kStartPrecision = 128;
inline constexpr mpfr_prec_t kPrecisionCap = 8192;

class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(double v, mpfr_prec_t prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Exact value of the (finite) binary float.
    mpq_class to_rational() const;
    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = kStartPrecision);
    Interval(long v, mpfr_prec_t prec);
    Interval(const mpq_class& q, mpfr_prec_t prec);
    Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    Interval(Real lo, Real hi);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    double mid_double() const;
    Real width() const;  // rounded up
    double width_double() const;

    bool contains(long v) const;
    bool contains(const mpq_class& q) const;
    bool contains_zero() const { return contains(0L); }
    bool subset_of(const Interval& o) const;
    bool disjoint_from(const Interval& o) const;

    bool certainly_less(long v) const;             // hi < v
    bool certainly_greater(long v) const;          // lo > v
    bool certainly_less(const Interval& o) const;  // hi < o.lo

    // +1 / -1 if the sign is certain, nullopt if 0 is enclosed.
    std::optional<int> sign() const;

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);  // throws if o contains 0
    Interval& operator+=(long v);
    Interval& operator-=(long v);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
    friend Interval operator+(Interval a, long b) { return a += b; }
    friend Interval operator-(Interval a, long b) { return a -= b; }
    Interval operator-() const;

    Interval pow(unsigned long e) const;  // requires lo >= 0
    Interval reciprocal() const;
    Interval log() const;  // requires lo > 0
    Interval abs() const;
    // Hull of both.
    Interval hull(const Interval& o) const;
    // Clamp to [a, b].
    void clamp(long a, long b);

    std::string str(int digits = 20) const;

private:
    Real lo_, hi_;
};

}  // namespace gasket
