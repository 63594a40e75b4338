#include <doctest.h>

#include <random>

#include "gasket/admissibility.hpp"
#include "gasket/error.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

GasketWord random_word(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(0, 2);
    GasketWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Digit>(d(rng)));
    return w;
}

AdmissibilityVerdict periodic(const char* coding, const char* beta) {
    return is_admissible_periodic(PeriodicCoding::parse(coding), RealBase::parse(beta));
}

}  // namespace

TEST_CASE("finite-word checker agrees with the naive checker") {
    std::mt19937 rng(7);
    for (const char* b : {"1.2", "1.45", "1.5", "1.6", "1.7", "1.9"}) {
        const RealBase beta = RealBase::parse(b);
        const std::string d = oracle::delta(beta.rational_value(), 64);
        for (int trial = 0; trial < 400; ++trial) {
            GasketWord w = random_word(rng, 2 + trial % 13);
            auto v = is_admissible_prefix(w, beta);
            CHECK_MESSAGE((v.status == Status::Violation) == oracle::violates(w.str(), d), b, " ", w.str());
        }
    }
}

TEST_CASE("violation witnesses are minimal") {
    std::mt19937 rng(11);
    const RealBase beta = RealBase::parse("1.6");
    int seen = 0;
    for (int trial = 0; trial < 600; ++trial) {
        GasketWord w = random_word(rng, 12);
        auto v = is_admissible_prefix(w, beta);
        if (v.status != Status::Violation) continue;
        ++seen;
        REQUIRE(v.witness() <= w.size());
        CHECK(is_admissible_prefix(w.prefix(v.witness()), beta).status == Status::Violation);
        if (v.witness() > 1) CHECK(is_admissible_prefix(w.prefix(v.witness() - 1), beta).status == Status::Admissible);
    }
    CHECK(seen > 100);
}

TEST_CASE("single words") {
    const RealBase b = RealBase::parse("1.6");
    CHECK(is_admissible_prefix(GasketWord::parse("BAB"), b).status == Status::Admissible);
    CHECK(is_admissible_prefix(GasketWord::parse("A"), b).status == Status::Admissible);
    auto v = is_admissible_prefix(GasketWord::parse("BAA"), b);
    CHECK(v.status == Status::Violation);
    CHECK(v.position == 1);
    CHECK(v.condition == Condition::SumReflected);
    CHECK(v.offset == 2);
    CHECK_THROWS_AS(is_admissible_prefix(GasketWord(), b), Error);
    CHECK_THROWS_AS(is_admissible_prefix(GasketWord::parse("ABCABC"), b, 3), Error);
}

TEST_CASE("periodic codings") {
    CHECK(periodic("(BAC)", "beta_n:2").status == Status::Admissible);
    CHECK(periodic("BAA(BC)", "1.7").status == Status::Admissible);
    auto v = periodic("B(AA)", "1.7");
    CHECK(v.status == Status::Violation);
    CHECK(v.position == 1);
    CHECK(v.condition == Condition::SumReflected);
    CHECK(v.offset == 3);
    // the channel tail equals delta exactly, which is not strictly smaller
    auto e = periodic("(BABCAC)", "beta_n:2");
    CHECK(e.status == Status::Violation);
    CHECK(e.offset == 0);
    CHECK(periodic("(BABCAC)", "beta_n:3").status == Status::Admissible);
    CHECK(periodic("(A)", "1.01").status == Status::Admissible);
    CHECK(periodic("(BC)", "1.9").status == Status::Admissible);
    CHECK(periodic("(BC)", "1.5").status == Status::Violation);
    // with a short budget and inexact delta a long agreement stays open
    auto u = is_admissible_periodic(PeriodicCoding::parse("A(B)"), RealBase::parse("1.999"), 3);
    CHECK(u.status == Status::Undecided);
}

TEST_CASE("enumeration agrees with brute force") {
    for (const char* b : {"1.3", "1.5", "1.6", "1.8"}) {
        const RealBase beta = RealBase::parse(b);
        EnumerationOptions o;
        o.m = 5;
        o.horizon = 4;
        o.omega = OmegaMode::Off;
        auto r = enumerate(beta, o);
        const auto want = oracle::extendable_counts(oracle::delta(beta.rational_value(), 32), 5, 4);
        REQUIRE(r.table.rows.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) CHECK_MESSAGE(r.table.rows[i].extendable == want[i], b, " m=", i + 1);
        CHECK(r.words.size() == want[4]);
        for (const auto& w : r.words) CHECK(is_admissible_prefix(w, beta).status == Status::Admissible);
        CHECK(std::is_sorted(r.words.begin(), r.words.end()));
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    const RealBase beta = RealBase::parse("1.6");
    EnumerationOptions o;
    o.m = 9;
    o.horizon = 9;
    auto a = enumerate(beta, o);
    o.jobs = 3;
    auto b = enumerate(beta, o);
    CHECK(a.words == b.words);
    for (std::size_t i = 0; i < a.table.rows.size(); ++i) {
        CHECK(a.table.rows[i].admissible == b.table.rows[i].admissible);
        CHECK(a.table.rows[i].extendable == b.table.rows[i].extendable);
    }
}

TEST_CASE("exact infinite extendability at beta_G") {
    EnumerationOptions o;
    o.m = 12;
    o.horizon = 0;
    auto r = enumerate(beta_golden(), o);
    CHECK(r.table.omega);
    REQUIRE(r.words.size() == 3);
    CHECK(r.words[0].str() == std::string(12, 'A'));
    CHECK(r.words[1].str() == std::string(12, 'B'));
    CHECK(r.words[2].str() == std::string(12, 'C'));
    DeltaTarget d(EventuallyPeriodicBinary::parse("(100)"));
    OmegaOracle oracle(EventuallyPeriodicBinary::parse("(100)"));
    CheckerState s;
    for (Digit x : GasketWord::parse("BAC")) REQUIRE(advance(s, x, d));
    CHECK(reachable(s, 30, d));
    CHECK(!oracle.extendable(s));
    CheckerState t;
    for (Digit x : GasketWord::parse("BBB")) REQUIRE(advance(t, x, d));
    CHECK(oracle.extendable(t));
}

TEST_CASE("forbidden blocks") {
    auto r = verify_forbidden_blocks(RealBase::parse("1.6"));
    CHECK(r.passed());
    CHECK(verify_forbidden_blocks(critical_base()).passed());
    // delta(1.7) begins 11, outside the hypothesis
    CHECK_THROWS_AS(verify_forbidden_blocks(RealBase::parse("1.7")), Error);
}

TEST_CASE("no three distinct letters up to beta_G") {
    CHECK(verify_triple_distinct(beta_golden(), 12).passed());
    CHECK(triple_distinct_witnesses(beta_golden(), 10).empty());
    auto neg = verify_triple_distinct(RealBase::parse("1.5"), 10);
    CHECK(!neg.passed());
    CHECK(!neg.counterexamples.empty());
}

TEST_CASE("forced continuations") {
    auto six = verify_forced_continuation(ForcedFamily::SixBlocks, 0, beta_ladder(2), 3);
    CHECK(six.passed());
    CHECK(six.checks.size() == 6);
    CHECK_THROWS_AS(verify_forced_continuation(ForcedFamily::SixBlocks, 0, RealBase::parse("1.54"), 3), Error);
    for (unsigned k = 1; k <= 2; ++k) {
        CHECK(verify_forced_continuation(ForcedFamily::TypeA, k, critical_base(), 3).passed());
        CHECK(verify_forced_continuation(ForcedFamily::TypeBC, k, critical_base(), 3).passed());
    }
    CHECK_THROWS_AS(verify_forced_continuation(ForcedFamily::TypeA, 1, RealBase::parse("1.6"), 3), Error);
    auto cases = forced_cases(ForcedFamily::TypeA, 1);
    CHECK(!cases.empty());
    for (const auto& c : cases) CHECK(c.allowed.size() == 2);
}

TEST_CASE("plateaus") {
    auto p = verify_plateau(1, 8, 8);
    CHECK(p.report.passed());
    REQUIRE(p.sets.size() >= 2);
    CHECK(p.sets[0] == p.sets[1]);
    auto probes = plateau_probes(2);
    REQUIRE(probes.size() == 2);
    CHECK(compare(beta_ladder(2), probes[0]) < 0);
    CHECK(compare(probes[1], beta_ladder(3)) < 0);
}
