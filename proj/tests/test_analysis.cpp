#include <doctest.h>

#include <cmath>
#include <set>

#include "gasket/analysis.hpp"
#include "gasket/error.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("entropy of synthetic counts") {
    std::vector<std::pair<std::size_t, std::size_t>> exp2, flat, poly;
    for (std::size_t m = 1; m <= 20; ++m) {
        exp2.emplace_back(m, std::size_t{1} << m);
        flat.emplace_back(m, 7);
        poly.emplace_back(m, m * m);
    }
    auto e = entropy_estimate(exp2);
    CHECK(e.slope == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(e.uncertainty < 1e-12);
    CHECK(e.fit_from == 11);
    CHECK(e.fit_to == 20);
    CHECK(entropy_estimate(flat).slope == doctest::Approx(0.0));
    // polynomial growth has a slope of about degree / m
    CHECK(entropy_estimate(poly).slope == doctest::Approx(2.0 / 15.5).epsilon(0.05));
    CHECK_THROWS_AS(entropy_estimate(std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 9}}), Error);
    CHECK_THROWS_AS(entropy_estimate(std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 0}, {3, 1}, {4, 1}}),
                    Error);
}

TEST_CASE("growth below beta_G is constant") {
    GrowthTable t = growth_counts(RealBase::parse("1.45"), 14, 14);
    for (const auto& r : t.rows) CHECK(r.extendable == 3);
    CHECK(entropy_estimate(t).slope == doctest::Approx(0.0));
    CHECK_THROWS_AS(growth_counts(RealBase::parse("1.45"), kMaxGrowthLength + 1, 1), Error);
}

TEST_CASE("X_n label words") {
    const XnBlocks b = xn_blocks(2);
    CHECK(b.rr == type_word(Digit::A, 2));
    CHECK(b.rl == type_word(Digit::A, 2, true));
    CHECK(b.ll == phi(Digit::A, b.rr));
    CHECK(b.lr == phi(Digit::A, b.rl));
    const RealBase beta = RealBase::parse("1.6");
    for (unsigned k = 1; k <= 8; ++k) {
        auto ws = xn_words(2, k);
        CHECK(ws.size() == (std::size_t{1} << (k + 1)));
        CHECK(std::set<GasketWord>(ws.begin(), ws.end()).size() == ws.size());
        for (const auto& w : ws) {
            CHECK(w.size() == 6 * k);
            CHECK(!oracle::violates(w.str(), oracle::delta(mpq_class(8, 5), w.size())));
        }
    }
    CHECK(xn_path_entropy(2) == doctest::Approx(std::log(2.0) / 6));
    CHECK(xn_printed_entropy(2) == doctest::Approx(std::log(2.0) / std::log(6.0)));
    CHECK_THROWS_AS(xn_words(0, 1), Error);
}

TEST_CASE("dimension estimate from X_2 path counts") {
    std::vector<std::pair<std::size_t, std::size_t>> counts;
    for (unsigned k = 1; k <= 8; ++k) counts.emplace_back(6 * k, xn_words(2, k).size());
    auto e = entropy_estimate(counts);
    CHECK(e.slope == doctest::Approx(std::log(2.0) / 6));
    auto d = dimension_estimate(RealBase::parse("1.6"), e);
    CHECK(d.value == doctest::Approx(std::log(2.0) / 6 / std::log(1.6)));
    CHECK(d.value >= 0.2);
}

TEST_CASE("Mahler residual") {
    auto r = mahler_residual(critical_base(), 60);
    CHECK(r.within());
    auto neg = mahler_residual(RealBase::parse("1.7"), 60);
    CHECK(!neg.within());
    CHECK(neg.ratio() >= 10);
    // the residual shrinks like the tail
    auto r8 = mahler_residual(critical_base(), 8), r16 = mahler_residual(critical_base(), 16);
    CHECK(r8.within());
    CHECK(r16.within());
    CHECK(mpfr_cmp(r16.residual.abs().hi().get(), r8.residual.abs().lo().get()) < 0);
    CHECK_THROWS_AS(mahler_residual(critical_base(), 4), Error);
}

TEST_CASE("point identities for d^n followed by a period-3 orbit") {
    const RealBase b = RealBase::parse("3/2");
    auto pts = orbit_points(b, 5);
    CHECK(pts.size() == 6 + 5 * 3 * 6);
    for (const auto& p : pts) {
        CHECK(p.equal);
        REQUIRE(p.series.is_exact());
        // independent evaluation of the coding
        auto [x, y] = oracle::point(std::string(p.n, symbol_char(p.d)), p.orbit, mpq_class(3, 2));
        CHECK(*p.series.exact_x == x);
        CHECK(*p.closed.exact_x == x);
        CHECK(*p.closed.exact_y == y);
    }
    for (const auto& p : orbit_points(RealBase::parse("poly:5x^2-11@[1.4,1.5]"), 3)) CHECK(p.equal);
    CHECK_THROWS_AS(orbit_points(RealBase::parse("1.6"), 3), Error);
    CHECK_THROWS_AS(orbit_points(RealBase::parse("1.45"), 3), Error);
}

TEST_CASE("periodic type-word sequences") {
    auto r = verify_periodic(2);
    CHECK(r.passed());
    CHECK(r.checks.size() == 6 * 3 + 6 * 2);
}
