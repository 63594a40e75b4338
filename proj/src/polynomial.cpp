#include "gasket/polynomial.hpp"

#include <cctype>

#include "gasket/error.hpp"

namespace gasket {

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const Polynomial& p) {
    RatPoly r;
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

Polynomial from_rat(RatPoly r) {
    trim(r);
    mpz_class den = 1;
    for (const auto& c : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : r) {
        mpq_class v = c * den;
        out.push_back(v.get_num());
    }
    return Polynomial(std::move(out)).primitive();
}

RatPoly rem(RatPoly a, const RatPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

int sign_at(const RatPoly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return sgn(v);
}

int sign_changes(const std::vector<RatPoly>& seq, const mpq_class& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<mpz_class> c;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto bad = [&] { fail(ErrorCode::Parse, "polynomial: " + std::string(text)); };
    skip();
    if (i == text.size()) bad();
    while (i < text.size()) {
        int sign = 1;
        skip();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        }
        mpz_class coef = 1;
        bool have_num = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            coef = mpz_class(std::string(text.substr(start, i - start)));
            have_num = true;
        }
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        std::size_t power = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            power = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::size_t ps = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == ps) bad();
                power = std::stoul(std::string(text.substr(ps, i - ps)));
            }
        } else if (!have_num) {
            bad();
        }
        if (c.size() <= power) c.resize(power + 1, 0);
        c[power] += sign * coef;
        skip();
        if (i < text.size() && text[i] != '+' && text[i] != '-') bad();
    }
    Polynomial p(std::move(c));
    if (p.is_zero()) bad();
    return p;
}

mpq_class Polynomial::eval(const mpq_class& x) const {
    mpq_class v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Interval Polynomial::eval(const Interval& x) const {
    Interval v(0L, x.precision());
    for (std::size_t i = c_.size(); i-- > 0;) {
        v *= x;
        v += Interval(mpq_class(c_[i]), x.precision());
    }
    return v;
}

Polynomial Polynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
    if (c_.empty()) return *this;
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (c_.back() < 0) g = -g;
    std::vector<mpz_class> out;
    for (const auto& c : c_) out.push_back(c / g);
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || a != 1) out += a.get_str();
        if (i > 0 && a != 1) out += "*";
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    RatPoly x = to_rat(a), y = to_rat(b);
    while (!y.empty()) {
        RatPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return from_rat(std::move(x));
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial g = gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive();
    RatPoly num = to_rat(p), den = to_rat(g);
    RatPoly q(num.size() - den.size() + 1, 0);
    while (!num.empty() && num.size() >= den.size()) {
        mpq_class f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim(num);
    }
    return from_rat(std::move(q));
}

int sturm_count(const Polynomial& p, const mpq_class& lo, const mpq_class& hi) {
    Polynomial sf = squarefree_part(p);
    std::vector<RatPoly> seq;
    seq.push_back(to_rat(sf));
    seq.push_back(to_rat(sf.derivative()));
    while (!seq.back().empty()) {
        RatPoly r = rem(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

}  // namespace gasket
