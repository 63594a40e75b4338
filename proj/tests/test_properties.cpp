#include <doctest.h>

#include <random>

#include "gasket/admissibility.hpp"
#include "gasket/bases.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

GasketWord random_word(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(0, 2);
    GasketWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Digit>(d(rng)));
    return w;
}

bool admissible(const GasketWord& w, const DeltaTarget& d) { return is_admissible_prefix(w, d).status == Status::Admissible; }

}  // namespace

TEST_CASE("admissible words are factor-closed") {
    std::mt19937 rng(3);
    const DeltaTarget b(RealBase::parse("1.62"), 64);
    int tested = 0;
    for (int trial = 0; trial < 3000 && tested < 200; ++trial) {
        GasketWord w = random_word(rng, 10);
        if (!admissible(w, b)) continue;
        ++tested;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t len = 1; i + len <= w.size(); ++len) CHECK(admissible(w.substr(i, len), b));
    }
    CHECK(tested >= 50);
}

TEST_CASE("admissibility is invariant under the letter swaps") {
    std::mt19937 rng(5);
    for (const char* s : {"1.5", "1.6", "1.75"}) {
        const DeltaTarget b(RealBase::parse(s), 64);
        for (int trial = 0; trial < 300; ++trial) {
            GasketWord w = random_word(rng, 2 + trial % 11);
            const bool a = admissible(w, b);
            for (Digit k : kDigits) CHECK(admissible(phi(k, w), b) == a);
        }
    }
}

TEST_CASE("admissibility is monotone in beta") {
    std::mt19937 rng(9);
    std::vector<DeltaTarget> bases;
    for (const char* s : {"1.3", "1.45", "1.5", "1.55", "1.6", "1.7", "1.85", "1.99"})
        bases.emplace_back(RealBase::parse(s), 64);
    for (int trial = 0; trial < 400; ++trial) {
        GasketWord w = random_word(rng, 3 + trial % 10);
        bool prev = false;
        for (const auto& d : bases) {
            const bool a = admissible(w, d);
            CHECK(!(prev && !a));
            prev = a;
        }
    }
}

TEST_CASE("quasi-greedy expansions increase with beta") {
    std::vector<RealBase> bases = {RealBase::parse("1.2"), beta_golden(), RealBase::parse("1.5"), beta_ladder(2),
                                   critical_base(), RealBase::parse("1.6"), multinacci(1), RealBase::parse("1.9")};
    for (std::size_t i = 0; i + 1 < bases.size(); ++i)
        CHECK(lex_compare(quasi_greedy(bases[i], 64), quasi_greedy(bases[i + 1], 64)) == LexOrder::Less);
}

TEST_CASE("periodic admissibility implies admissible prefixes") {
    const RealBase b = RealBase::parse("1.7");
    const DeltaTarget d(b, 64);
    for (const auto& [pre, per] : oracle::small_codings()) {
        PeriodicCoding c(GasketWord::parse(pre), GasketWord::parse(per));
        if (is_admissible_periodic(c, b).status != Status::Admissible) continue;
        for (std::size_t n = 1; n <= 20; ++n) CHECK(admissible(c.prefix(n), d));
    }
}

TEST_CASE("extendable counts are monotone in the horizon") {
    const RealBase b = RealBase::parse("1.58");
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    for (std::size_t T : {0, 2, 4, 8, 12}) {
        EnumerationOptions o;
        o.m = 8;
        o.horizon = T;
        o.list_words = false;
        auto r = enumerate(b, o);
        CHECK(r.table.rows.back().extendable <= prev);
        prev = r.table.rows.back().extendable;
        for (const auto& row : r.table.rows) CHECK(row.extendable <= row.admissible);
    }
}
