#include <doctest.h>

#include "gasket/error.hpp"
#include "gasket/words.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("tm words match the recursive construction") {
    CHECK(tm_word(1).str() == "100");
    CHECK(tm_word(2).str() == "101000");
    CHECK(tm_word(3).str() == "101001000100");
    for (unsigned n = 1; n <= 12; ++n) {
        BinaryWord t = tm_word(n);
        CHECK(t.size() == 3u * (1u << (n - 1)));
        CHECK(t.str() == oracle::tm(n));
    }
    CHECK_THROWS_AS(tm_word(0), Error);
    CHECK_THROWS_AS(tm_word(kMaxTmLevel + 1), Error);
}

TEST_CASE("tau is the popcount parity") {
    for (std::uint64_t i = 0; i < 5000; ++i) CHECK(int(tau(i)) == oracle::tau(i));
    CHECK(tau((1ull << 40) + 3) == 1);
}

TEST_CASE("theta, plus, reflection") {
    CHECK(theta(BinaryWord::parse("000001100101")).str() == "101100001000");
    CHECK_THROWS_AS(theta(BinaryWord::parse("011")), Error);
    CHECK_THROWS_AS(theta(BinaryWord::parse("10")), Error);
    for (unsigned n = 1; n <= 8; ++n) {
        BinaryWord t = tm_word(n);
        CHECK(theta(theta(t)) == t);
        CHECK(is_omega_word(t));
        CHECK(theta(t).str() == oracle::theta(t.str()));
    }
    CHECK(plus(BinaryWord::parse("100")).str() == "101");
    CHECK_THROWS_AS(plus(BinaryWord::parse("101")), Error);
    CHECK_THROWS_AS(plus(BinaryWord()), Error);
    CHECK(reflection(BinaryWord::parse("1001")).str() == "0110");
}

TEST_CASE("lambda and gamma are limits of t_n^+ and Theta(t_n^+)") {
    const unsigned n = 10;
    const BinaryWord tp = plus(tm_word(n));
    CHECK(lambda_prefix(tp.size()) == tp);
    CHECK(gamma_prefix(tp.size()) == theta(tp));
    CHECK(lambda_prefix(12).str() == "101001000101");
    for (std::uint64_t i = 1; i <= 200; ++i) {
        CHECK(lambda_digit(i) == lambda_prefix(i)[i - 1]);
        CHECK(gamma_digit(i) == gamma_prefix(i)[i - 1]);
    }
}

TEST_CASE("type words project onto t_n and Theta(t_n)") {
    auto proj = [](const GasketWord& w, int j) {
        std::string out;
        for (Digit d : w) out += char('0' + (j == 2 ? 1 - oracle::chan(symbol_char(d), 2) : oracle::chan(symbol_char(d), j)));
        return out;
    };
    auto refl = [](std::string s) {
        for (char& c : s) c = c == '0' ? '1' : '0';
        return s;
    };
    CHECK(type_word(Digit::A, 0).str() == "A");
    CHECK(type_word(Digit::A, 1).str() == "BAC");
    for (unsigned n = 1; n <= 10; ++n) {
        const std::string t = oracle::tm(n), th = oracle::theta(t);
        std::string z, s;
        for (std::size_t i = 0; i < (std::size_t{1} << (n - 1)); ++i) z += "010", s += "101";
        const GasketWord u = type_word(Digit::A, n), v = type_word(Digit::B, n), w = type_word(Digit::C, n);
        CHECK(u.size() == t.size());
        CHECK(proj(u, 0) == t);
        CHECK(proj(u, 1) == th);
        CHECK(proj(phi(Digit::A, u), 1) == t);
        CHECK(proj(v, 0) == z);
        CHECK(proj(v, 1) == t);
        CHECK(proj(w, 0) == th);
        CHECK(proj(w, 1) == z);
        CHECK(proj(u, 2) == s);
        CHECK(proj(v, 2) == refl(th));
        CHECK(proj(w, 2) == refl(t));
        CHECK(project(u, Axis::Sum).str() == s);
        CHECK(type_word(Digit::A, n, true).back() == Digit::B);
        CHECK(type_word(Digit::B, n, true).back() == Digit::C);
        CHECK(type_word(Digit::C, n, true).back() == Digit::A);
        // u_{n+1} = u_n^B Phi_A(u_n^B)
        const GasketWord ub = type_word(Digit::A, n, true);
        CHECK(type_word(Digit::A, n + 1) == ub + phi(Digit::A, ub));
    }
}

TEST_CASE("phi fixes its letter and is an involution") {
    for (Digit k : kDigits) {
        CHECK(phi(k, k) == k);
        for (Digit d : kDigits) CHECK(phi(k, phi(k, d)) == d);
    }
    CHECK(phi(Digit::A, GasketWord::parse("BAC")).str() == "CAB");
    CHECK(phi(Digit::B, GasketWord::parse("BAC")).str() == "BCA");
    CHECK(project(GasketWord::parse("BAC"), Axis::Sum).str() == "101");
}

TEST_CASE("parsing and eventually periodic canonical form") {
    CHECK(GasketWord::parse("ABC").str() == "ABC");
    CHECK_THROWS_AS(GasketWord::parse("ABD"), Error);
    CHECK_THROWS_AS(BinaryWord::parse("102"), Error);
    CHECK(PeriodicCoding::parse("B(ACB)").str() == "(BAC)");
    CHECK(PeriodicCoding::parse("(BABA)").str() == "(BA)");
    CHECK(PeriodicCoding::parse("BAA(BC)").str() == "BAA(BC)");
    CHECK(EventuallyPeriodicBinary::parse("1(01)").str() == "(10)");
    CHECK_THROWS_AS(PeriodicCoding::parse("AB"), Error);
    CHECK_THROWS_AS(PeriodicCoding::parse("A()"), Error);
    auto c = PeriodicCoding::parse("A(BC)");
    CHECK(c.orbit_size() == 3);
    CHECK(c.shift(1).str() == "(BC)");
    CHECK(c.shift(2).str() == "(CB)");
    CHECK(c.prefix(6).str() == "ABCBCB");
}

TEST_CASE("lexicographic comparison") {
    auto b = [](const char* s) { return BinaryWord::parse(s); };
    auto e = [](const char* s) { return EventuallyPeriodicBinary::parse(s); };
    CHECK(lex_compare(b("100"), b("101")) == LexOrder::Less);
    CHECK(lex_compare(b("11"), b("101")) == LexOrder::Greater);
    CHECK(lex_compare(b("10"), b("101")) == LexOrder::EqualSoFar);
    CHECK(lex_compare(e("(10)"), e("1(01)")) == LexOrder::Equal);
    CHECK(lex_compare(e("(100)"), e("(10)")) == LexOrder::Less);
    CHECK(lex_compare(e("(101000)"), b("101001")) == LexOrder::Less);
    CHECK(lex_compare(e("(10)"), b("1010"), 3) == LexOrder::EqualSoFar);
}
