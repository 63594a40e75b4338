#include "gasket/words.hpp"

#include <bit>
#include <numeric>

namespace gasket {

char symbol_char(Bit b) { return b ? '1' : '0'; }

char symbol_char(Digit d) {
    switch (d) {
        case Digit::A: return 'A';
        case Digit::B: return 'B';
        case Digit::C: return 'C';
    }
    return '?';
}

template <>
Bit parse_symbol<Bit>(char c) {
    if (c == '0') return 0;
    if (c == '1') return 1;
    fail(ErrorCode::Parse, std::string("not a binary digit: '") + c + "'");
}

template <>
Digit parse_symbol<Digit>(char c) {
    switch (c) {
        case 'A': return Digit::A;
        case 'B': return Digit::B;
        case 'C': return Digit::C;
        default: break;
    }
    fail(ErrorCode::Parse, std::string("not a gasket letter: '") + c + "'");
}

namespace {

template <class S>
bool has_period(const Word<S>& w, std::size_t d) {
    for (std::size_t i = d; i < w.size(); ++i)
        if (w[i] != w[i - d]) return false;
    return true;
}

}  // namespace

template <class S>
EventuallyPeriodic<S>::EventuallyPeriodic(Word<S> pre, Word<S> period)
    : pre_(std::move(pre)), per_(std::move(period)) {
    if (per_.empty()) fail(ErrorCode::Parse, "empty period");
    const std::size_t p = per_.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d == 0 && has_period(per_, d)) {
            per_ = per_.prefix(d);
            break;
        }
    }
    // Absorb trailing preperiod letters into a rotated period.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        std::vector<S> rot;
        rot.reserve(per_.size());
        rot.push_back(per_.back());
        for (std::size_t i = 0; i + 1 < per_.size(); ++i) rot.push_back(per_[i]);
        per_ = Word<S>(std::move(rot));
        pre_ = pre_.prefix(pre_.size() - 1);
    }
}

template <class S>
EventuallyPeriodic<S> EventuallyPeriodic<S>::parse(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        fail(ErrorCode::Parse, "expected pre(per): " + std::string(text));
    auto pre = Word<S>::parse(text.substr(0, open));
    auto per = Word<S>::parse(text.substr(open + 1, text.size() - open - 2));
    return EventuallyPeriodic(std::move(pre), std::move(per));
}

template <class S>
EventuallyPeriodic<S> EventuallyPeriodic<S>::shift(std::size_t k) const {
    if (k <= pre_.size()) return EventuallyPeriodic(pre_.substr(k), per_);
    std::size_t r = (k - pre_.size()) % per_.size();
    return EventuallyPeriodic(Word<S>(), per_.substr(r) + per_.prefix(r));
}

template class EventuallyPeriodic<Bit>;
template class EventuallyPeriodic<Digit>;

const char* lex_order_name(LexOrder o) {
    switch (o) {
        case LexOrder::Less: return "Less";
        case LexOrder::EqualSoFar: return "EqualSoFar";
        case LexOrder::Equal: return "Equal";
        case LexOrder::Greater: return "Greater";
    }
    return "?";
}

LexOrder lex_compare(const BinaryWord& x, const BinaryWord& y, std::size_t budget) {
    std::size_t n = std::min({x.size(), y.size(), budget});
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) return x[i] < y[i] ? LexOrder::Less : LexOrder::Greater;
    }
    return LexOrder::EqualSoFar;
}

LexOrder lex_compare(const EventuallyPeriodicBinary& x, const EventuallyPeriodicBinary& y) {
    // Past max preperiod + lcm of periods both sequences repeat in lockstep.
    std::size_t n = std::max(x.preperiod().size(), y.preperiod().size()) +
                    std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < n; ++i) {
        Bit a = x.at(i), b = y.at(i);
        if (a != b) return a < b ? LexOrder::Less : LexOrder::Greater;
    }
    return LexOrder::Equal;
}

LexOrder lex_compare(const EventuallyPeriodicBinary& x, const BinaryWord& y, std::size_t budget) {
    std::size_t n = std::min(y.size(), budget);
    for (std::size_t i = 0; i < n; ++i) {
        Bit a = x.at(i), b = y[i];
        if (a != b) return a < b ? LexOrder::Less : LexOrder::Greater;
    }
    return LexOrder::EqualSoFar;
}

bool is_omega_word(const BinaryWord& w) {
    if (w.size() % 3 != 0) return false;
    for (std::size_t i = 0; i < w.size(); i += 3)
        if (w[i + 1] != 0) return false;
    return true;
}

BinaryWord theta(const BinaryWord& w) {
    if (w.size() % 3 != 0) fail(ErrorCode::NonOmegaBlock, "length not divisible by 3: " + w.str());
    BinaryWord out = w;
    for (std::size_t i = 0; i < w.size(); i += 3) {
        // Omega = {x0y}; Theta flips x and y.
        if (w[i + 1] != 0)
            fail(ErrorCode::NonOmegaBlock, "block " + w.substr(i, 3).str() + " at offset " + std::to_string(i));
        out.set(i, 1 - w[i]);
        out.set(i + 2, 1 - w[i + 2]);
    }
    return out;
}

BinaryWord plus(const BinaryWord& w) {
    if (w.empty() || w.back() != 0) fail(ErrorCode::PreconditionFailed, "plus needs a word ending in 0");
    BinaryWord out = w;
    out.set(out.size() - 1, 1);
    return out;
}

BinaryWord reflection(const BinaryWord& w) {
    BinaryWord out = w;
    for (std::size_t i = 0; i < w.size(); ++i) out.set(i, 1 - w[i]);
    return out;
}

BinaryWord tm_word(unsigned n) {
    if (n < 1) fail(ErrorCode::PreconditionFailed, "tm_word needs n >= 1");
    if (n > kMaxTmLevel) fail(ErrorCode::SizeLimit, "tm_word level above " + std::to_string(kMaxTmLevel));
    BinaryWord t = BinaryWord::parse("100");
    for (unsigned k = 1; k < n; ++k) {
        BinaryWord tp = plus(t);
        t = tp + theta(tp);
    }
    return t;
}

Bit tau(std::uint64_t i) {
    Bit t = 0;
    while (i) {
        if (i & 1) t ^= 1;
        i >>= 1;
    }
    return t;
}

BinaryWord classical_tm(std::size_t n, unsigned start_index) {
    if (start_index > 1) fail(ErrorCode::PreconditionFailed, "start_index must be 0 or 1");
    std::vector<Bit> t(n + start_index);
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = (i % 2 == 0) ? t[i / 2] : 1 - t[i / 2];
    return BinaryWord(std::vector<Bit>(t.begin() + start_index, t.end()));
}

Bit lambda_digit(std::uint64_t i) {
    std::uint64_t k = (i - 1) / 3;
    switch ((i - 1) % 3) {
        case 0: return tau(2 * k + 1);
        case 1: return 0;
        default: return tau(2 * k + 2);
    }
}

Bit gamma_digit(std::uint64_t i) {
    if ((i - 1) % 3 == 1) return 0;
    return 1 - lambda_digit(i);
}

namespace {

BinaryWord interleave(std::size_t n, bool complement) {
    BinaryWord tm = classical_tm(2 * (n / 3 + 1), 1);  // tau_1, tau_2, ...
    std::vector<Bit> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = i / 3;
        switch (i % 3) {
            case 0: out[i] = tm[2 * k]; break;
            case 1: out[i] = 0; continue;
            default: out[i] = tm[2 * k + 1]; break;
        }
        if (complement) out[i] = 1 - out[i];
    }
    return BinaryWord(std::move(out));
}

}  // namespace

BinaryWord lambda_prefix(std::size_t n) { return interleave(n, false); }
BinaryWord gamma_prefix(std::size_t n) { return interleave(n, true); }

Digit variant_letter(Digit kind) {
    switch (kind) {
        case Digit::A: return Digit::B;
        case Digit::B: return Digit::C;
        case Digit::C: return Digit::A;
    }
    return Digit::A;
}

Digit phi(Digit kind, Digit d) {
    if (d == kind) return d;
    // the two non-fixed letters swap
    return static_cast<Digit>(3 - static_cast<int>(kind) - static_cast<int>(d));
}

GasketWord phi(Digit kind, const GasketWord& w) {
    GasketWord out = w;
    for (std::size_t i = 0; i < w.size(); ++i) out.set(i, phi(kind, w[i]));
    return out;
}

GasketWord type_word(Digit kind, unsigned n, bool variant) {
    if (variant && n == 0) fail(ErrorCode::VariantUndefined, "variant of a level-0 type word");
    if (n > kMaxTmLevel) fail(ErrorCode::SizeLimit, "type_word level above " + std::to_string(kMaxTmLevel));
    if (n == 0) return GasketWord(1, kind);
    const Digit last = variant_letter(kind);
    // level 1: BAC, CBA, ACB
    GasketWord w;
    w.push_back(last);
    w.push_back(kind);
    w.push_back(phi(kind, last));
    for (unsigned k = 1; k < n; ++k) {
        GasketWord wv = w;
        wv.set(wv.size() - 1, last);
        w = wv + phi(kind, wv);
    }
    if (variant) w.set(w.size() - 1, last);
    return w;
}

BinaryWord project(const GasketWord& w, Axis axis) {
    std::vector<Bit> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (axis) {
            case Axis::First: out[i] = p1(w[i]); break;
            case Axis::Second: out[i] = p2(w[i]); break;
            case Axis::Sum: out[i] = psum(w[i]); break;
        }
    }
    return BinaryWord(std::move(out));
}

Digit parse_kind(std::string_view text) {
    if (text.size() != 1) fail(ErrorCode::Parse, "kind must be one of A, B, C");
    return parse_symbol<Digit>(text[0]);
}

Axis parse_axis(std::string_view text) {
    if (text == "1") return Axis::First;
    if (text == "2") return Axis::Second;
    if (text == "sum") return Axis::Sum;
    fail(ErrorCode::Parse, "axis must be 1, 2 or sum");
}

}  // namespace gasket
