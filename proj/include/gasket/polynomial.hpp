#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "gasket/interval.hpp"

namespace gasket {

// Integer polynomial; coeffs()[i] multiplies x^i. Trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);

    // e.g. "x^3-x^2-1", "2*x^2 - 3x + 1"
    static Polynomial parse(std::string_view text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    mpq_class eval(const mpq_class& x) const;
    Interval eval(const Interval& x) const;
    Polynomial derivative() const;

    // Content removed, leading coefficient positive.
    Polynomial primitive() const;

    std::string str() const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

private:
    std::vector<mpz_class> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);

// Number of distinct real roots in (lo, hi], by Sturm's theorem.
int sturm_count(const Polynomial& p, const mpq_class& lo, const mpq_class& hi);

}  // namespace gasket
