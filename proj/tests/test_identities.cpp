#include <doctest.h>

#include "gasket/identities.hpp"
#include "gasket/words.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("lambda/gamma chains, string oracle") {
    for (unsigned n = 1; n <= 8; ++n) {
        const std::string lam = oracle::plus(oracle::tm(n)), gam = oracle::theta(lam);
        const std::size_t L = lam.size();
        for (std::size_t i = 0; i < L; ++i) {
            const std::string gh = gam.substr(0, L - i), lh = lam.substr(0, L - i);
            const std::string lt = lam.substr(i), gt = gam.substr(i);
            CHECK(gh < lt);
            CHECK(lt <= lh);
            CHECK(gh <= gt);
            CHECK(gt < lh);
        }
    }
    CHECK(lex_compare(gamma_prefix(12), lambda_prefix(12)) == LexOrder::Less);
}

TEST_CASE("lambda/gamma chain report") {
    auto r = verify_lambda_gamma_chains(10);
    CHECK(r.passed());
    CHECK(r.checks.size() == 10);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("interleaving, popcount oracle") {
    const std::string lam = oracle::plus(oracle::tm(12)), gam = oracle::theta(lam);
    REQUIRE(lam.size() == 6144);
    for (std::size_t k = 0; k < 2048; ++k) {
        const char a = char('0' + oracle::tau(2 * k + 1)), b = char('0' + oracle::tau(2 * k + 2));
        CHECK(lam[3 * k] == a);
        CHECK(lam[3 * k + 1] == '0');
        CHECK(lam[3 * k + 2] == b);
        CHECK(gam[3 * k] == (a == '0' ? '1' : '0'));
        CHECK(gam[3 * k + 2] == (b == '0' ? '1' : '0'));
    }
    CHECK(lambda_prefix(6144).str() == lam);
    CHECK(gamma_prefix(6144).str() == gam);
}

TEST_CASE("interleave and projection reports") {
    auto a = verify_interleave(12);
    CHECK(a.passed());
    auto b = verify_projections(12);
    CHECK(b.passed());
    CHECK(b.checks.size() == 12 * 7);
}
