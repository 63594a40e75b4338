#pragma once

// Real bases beta in (1, 2]: exact rationals, algebraic numbers given by an
// isolating interval, the inverse of the quasi-greedy map on eventually
// periodic sequences, and the critical base defined by the lambda series.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gasket/interval.hpp"
#include "gasket/polynomial.hpp"
#include "gasket/words.hpp"

namespace gasket {

struct QuasiGreedyExpansion {
    BinaryWord digits;
    // delta(beta) itself, when it is known to be eventually periodic.
    std::optional<EventuallyPeriodicBinary> exact;
};

class RealBase {
public:
    enum class Kind { Rational, Polynomial, Expansion, Critical };

    static RealBase rational(const mpq_class& q, std::string label = "");
    // The unique root of p in (lo, hi); throws PreconditionFailed otherwise.
    static RealBase polynomial_root(const Polynomial& p, const mpq_class& lo, const mpq_class& hi,
                                    std::string label = "");
    // The beta with delta(beta) = a (no admissibility checks; see delta_inverse).
    static RealBase from_expansion(const EventuallyPeriodicBinary& a, std::string label = "");
    static RealBase critical();

    // Decimal "1.6", rational "8/5", "poly:x^3-x^2-1@[1.4,1.5]", or a name:
    // beta_G, beta_star, beta_c, beta_n:k, beta_hat:k, multinacci:m.
    static RealBase parse(std::string_view text);

    Kind kind() const;
    const std::string& label() const;
    bool is_rational() const { return kind() == Kind::Rational; }
    const mpq_class& rational_value() const;
    // Defining polynomial (cleared denominators for expansion bases).
    const std::optional<Polynomial>& polynomial() const;
    // delta(beta) when the base was built from its expansion.
    const std::optional<EventuallyPeriodicBinary>& defining_expansion() const;

    // Enclosure of width <= 2^-bits.
    Interval enclosure_bits(mpfr_prec_t bits) const;
    // Enclosure of width <= tol (tol > 0).
    Interval enclosure(double tol) const;
    // Current bracket [lo, hi]; never widens.
    std::pair<mpq_class, mpq_class> bracket() const;

    bool same_object(const RealBase& o) const { return impl_ == o.impl_; }

    struct Impl;

private:
    explicit RealBase(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;

    friend QuasiGreedyExpansion expand(const RealBase&, std::size_t);
};

// -1, 0, +1. Refines both enclosures until they separate; Undecidable at the
// cap unless the two are structurally identical.
int compare(const RealBase& a, const RealBase& b, mpfr_prec_t cap_bits = kPrecisionCap);

// First n digits of delta(beta), and the exact periodic form when found.
QuasiGreedyExpansion expand(const RealBase& beta, std::size_t n);
BinaryWord quasi_greedy(const RealBase& beta, std::size_t n);

struct ParryResult {
    bool ok = true;
    std::size_t position = 0;  // 1-based start of the offending shifted tail
};
ParryResult parry_check(const BinaryWord& a);
ParryResult parry_check(const EventuallyPeriodicBinary& a);

RealBase delta_inverse(const EventuallyPeriodicBinary& a, double tol = 1e-10);
RealBase beta_ladder(unsigned n, double tol = 1e-10);
RealBase beta_hat(unsigned n, double tol = 1e-10);
RealBase critical_base(double tol = 1e-10);
RealBase multinacci(unsigned m, double tol = 1e-10);
RealBase beta_golden();  // root of x^3 - x^2 - 1
RealBase beta_star();    // root of x^3 - 2x^2 + 2x - 2 near 1.5437

EventuallyPeriodicBinary ladder_expansion(unsigned n);  // (t_n)^inf
EventuallyPeriodicBinary hat_expansion(unsigned n);     // t_n^+ (Theta(t_n))^inf

// |sum_{i<=n} delta_i x^-i - 1| style residual of the defining series at an
// enclosure, plus the tail bound x^-n/(x-1).
struct SeriesResidual {
    Interval residual;
    Interval tail_bound;
};
SeriesResidual lambda_residual(const Interval& x, std::size_t n);

// Exact decimal or rational literal, e.g. "1.6" -> 8/5.
mpq_class parse_rational(std::string_view text);

}  // namespace gasket
