#pragma once

// Binary and three-letter words, eventually periodic sequences, and the
// Thue-Morse type constructions built on the block map Theta.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

using Bit = std::uint8_t;

// A=(0,0), B=(1,0), C=(0,1)
enum class Digit : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr Digit kDigits[3] = {Digit::A, Digit::B, Digit::C};

char symbol_char(Bit b);
char symbol_char(Digit d);

template <class S>
S parse_symbol(char c);
template <>
Bit parse_symbol<Bit>(char c);
template <>
Digit parse_symbol<Digit>(char c);

inline Bit p1(Digit d) { return d == Digit::B ? 1 : 0; }
inline Bit p2(Digit d) { return d == Digit::C ? 1 : 0; }
inline Bit psum(Digit d) { return d == Digit::A ? 0 : 1; }

template <class S>
class Word {
public:
    using symbol_type = S;

    Word() = default;
    explicit Word(std::vector<S> symbols) : s_(std::move(symbols)) {}
    Word(std::size_t n, S fill) : s_(n, fill) {}

    static Word parse(std::string_view text) {
        std::vector<S> out;
        out.reserve(text.size());
        for (char c : text) out.push_back(parse_symbol<S>(c));
        return Word(std::move(out));
    }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    S operator[](std::size_t i) const { return s_[i]; }
    S back() const { return s_.back(); }
    const std::vector<S>& symbols() const { return s_; }
    auto begin() const { return s_.begin(); }
    auto end() const { return s_.end(); }

    void push_back(S s) { s_.push_back(s); }
    void set(std::size_t i, S s) { s_[i] = s; }
    void reserve(std::size_t n) { s_.reserve(n); }

    Word& operator+=(const Word& o) {
        s_.insert(s_.end(), o.s_.begin(), o.s_.end());
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }

    Word prefix(std::size_t n) const { return substr(0, n); }
    Word substr(std::size_t pos, std::size_t len = std::numeric_limits<std::size_t>::max()) const {
        if (pos >= s_.size()) return Word();
        std::size_t e = len > s_.size() - pos ? s_.size() : pos + len;
        return Word(std::vector<S>(s_.begin() + static_cast<std::ptrdiff_t>(pos),
                                   s_.begin() + static_cast<std::ptrdiff_t>(e)));
    }
    Word repeat(std::size_t k) const {
        Word out;
        out.reserve(s_.size() * k);
        for (std::size_t i = 0; i < k; ++i) out += *this;
        return out;
    }

    std::string str() const {
        std::string out;
        out.reserve(s_.size());
        for (S s : s_) out.push_back(symbol_char(s));
        return out;
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word& o) const { return s_ <=> o.s_; }

private:
    std::vector<S> s_;
};

using BinaryWord = Word<Bit>;
using GasketWord = Word<Digit>;

// pre · per^infinity, kept in canonical form: minimal period, then the
// shortest preperiod.
template <class S>
class EventuallyPeriodic {
public:
    EventuallyPeriodic(Word<S> pre, Word<S> period);

    // "pre(per)", e.g. "B(ACB)" or "(10)"
    static EventuallyPeriodic parse(std::string_view text);

    const Word<S>& preperiod() const { return pre_; }
    const Word<S>& period() const { return per_; }

    S at(std::size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }
    Word<S> prefix(std::size_t n) const {
        std::vector<S> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
        return Word<S>(std::move(out));
    }
    // sigma^k
    EventuallyPeriodic shift(std::size_t k) const;

    // Number of distinct shifts: |pre| + |per|.
    std::size_t orbit_size() const { return pre_.size() + per_.size(); }

    std::string str() const { return pre_.str() + "(" + per_.str() + ")"; }

    bool operator==(const EventuallyPeriodic&) const = default;

private:
    Word<S> pre_;
    Word<S> per_;
};

using EventuallyPeriodicBinary = EventuallyPeriodic<Bit>;
using PeriodicCoding = EventuallyPeriodic<Digit>;

extern template class EventuallyPeriodic<Bit>;
extern template class EventuallyPeriodic<Digit>;

// Lexicographic comparison. EqualSoFar: no difference among the symbols
// examined. Equal: two eventually periodic sequences are identical.
enum class LexOrder { Less, EqualSoFar, Equal, Greater };

const char* lex_order_name(LexOrder o);

LexOrder lex_compare(const BinaryWord& x, const BinaryWord& y,
                     std::size_t budget = std::numeric_limits<std::size_t>::max());
LexOrder lex_compare(const EventuallyPeriodicBinary& x, const EventuallyPeriodicBinary& y);
LexOrder lex_compare(const EventuallyPeriodicBinary& x, const BinaryWord& y,
                     std::size_t budget = std::numeric_limits<std::size_t>::max());

// Blockwise 000<->101, 001<->100. Throws NonOmegaBlock.
BinaryWord theta(const BinaryWord& w);
bool is_omega_word(const BinaryWord& w);

// Last bit 0 -> 1. Throws PreconditionFailed on an empty word or trailing 1.
BinaryWord plus(const BinaryWord& w);
BinaryWord reflection(const BinaryWord& w);

inline constexpr unsigned kMaxTmLevel = 24;

// t_1 = 100, t_{n+1} = t_n^+ Theta(t_n^+); |t_n| = 3*2^(n-1).
BinaryWord tm_word(unsigned n);

// tau_0 = 0, tau_{2j} = tau_j, tau_{2j+1} = 1 - tau_j.
Bit tau(std::uint64_t i);
BinaryWord classical_tm(std::size_t n, unsigned start_index);

// Limits lambda = lim t_n^+ and gamma = lim Theta(t_n^+), via the tau interleaving.
BinaryWord lambda_prefix(std::size_t n);
BinaryWord gamma_prefix(std::size_t n);
Bit lambda_digit(std::uint64_t i);  // 1-based
Bit gamma_digit(std::uint64_t i);   // 1-based

// The letter that replaces the last digit in the variant of a type word:
// u -> B, v -> C, w -> A.
Digit variant_letter(Digit kind);

// kind A: u_n, B: v_n, C: w_n.
GasketWord type_word(Digit kind, unsigned n, bool variant = false);

// Phi_kind fixes `kind` and swaps the other two letters.
Digit phi(Digit kind, Digit d);
GasketWord phi(Digit kind, const GasketWord& w);

enum class Axis { First, Second, Sum };
BinaryWord project(const GasketWord& w, Axis axis);

Digit parse_kind(std::string_view text);
Axis parse_axis(std::string_view text);

}  // namespace gasket
