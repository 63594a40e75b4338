#include "gasket/identities.hpp"

#include <string>

#include "gasket/words.hpp"

namespace gasket {

namespace {

// <= 0 when x <= y for words of equal length.
int cmp(const BinaryWord& x, const BinaryWord& y) {
    switch (lex_compare(x, y)) {
        case LexOrder::Less: return -1;
        case LexOrder::Greater: return 1;
        default: return 0;
    }
}

}  // namespace

VerificationReport verify_lambda_gamma_chains(unsigned n_max) {
    VerificationReport r;
    r.name = "l50";
    r.statement = "gamma_1..gamma_{L-i} < lambda_{i+1}..lambda_L <= lambda_1..lambda_{L-i} and "
                  "gamma_1..gamma_{L-i} <= gamma_{i+1}..gamma_L < lambda_1..lambda_{L-i}, L = 3*2^(n-1)";
    r.beta = "-";
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::size_t L = 3 * (std::size_t{1} << (n - 1));
        const BinaryWord lam = lambda_prefix(L), gam = gamma_prefix(L);
        std::size_t bad = 0;
        for (std::size_t i = 0; i < L; ++i) {
            const BinaryWord g_head = gam.prefix(L - i), l_head = lam.prefix(L - i);
            const BinaryWord l_tail = lam.substr(i), g_tail = gam.substr(i);
            bool ok = cmp(g_head, l_tail) < 0 && cmp(l_tail, l_head) <= 0 && cmp(g_head, g_tail) <= 0 &&
                      cmp(g_tail, l_head) < 0;
            if (!ok) {
                ++bad;
                if (r.counterexamples.size() < 10)
                    r.counterexamples.push_back("n=" + std::to_string(n) + " i=" + std::to_string(i));
            }
        }
        r.add("n=" + std::to_string(n), bad == 0, std::to_string(L) + " shifts");
    }
    return r;
}

VerificationReport verify_interleave(unsigned n_max) {
    VerificationReport r;
    r.name = "interleave";
    r.statement = "lambda = lim t_n^+, gamma = lim Theta(t_n^+), lambda_{3k+1} = tau_{2k+1}, lambda_{3k+2} = 0, "
                  "lambda_{3k+3} = tau_{2k+2}, gamma = the same with 1 - tau";
    r.beta = "-";
    for (unsigned n = 1; n <= n_max; ++n) {
        const BinaryWord tp = plus(tm_word(n));
        bool ok = lambda_prefix(tp.size()) == tp && gamma_prefix(tp.size()) == theta(tp);
        r.add("prefixes at level " + std::to_string(n), ok, std::to_string(tp.size()) + " symbols");
    }
    // The substitution limit, independent of the interleaving construction.
    const BinaryWord lam = plus(tm_word(n_max)), gam = theta(lam);
    const std::size_t K = lam.size() / 3;
    std::size_t bad = 0;
    for (std::size_t k = 0; k < K; ++k) {
        const Bit a = tau(2 * k + 1), b = tau(2 * k + 2);
        bool ok = lam[3 * k] == a && lam[3 * k + 1] == 0 && lam[3 * k + 2] == b && gam[3 * k] == 1 - a &&
                  gam[3 * k + 1] == 0 && gam[3 * k + 2] == 1 - b;
        if (!ok && ++bad <= 10) r.counterexamples.push_back("k=" + std::to_string(k));
    }
    r.add("tau interleaving for k < " + std::to_string(K), bad == 0);
    return r;
}

VerificationReport verify_projections(unsigned n_max) {
    VerificationReport r;
    r.name = "projections";
    r.statement = "u_n, v_n, w_n project to t_n, Theta(t_n), (010)^(2^(n-1)) and their reflections";
    r.beta = "-";
    for (unsigned n = 1; n <= n_max; ++n) {
        const BinaryWord t = tm_word(n), th = theta(t), z = BinaryWord::parse("010").repeat(std::size_t{1} << (n - 1));
        const BinaryWord s = BinaryWord::parse("101").repeat(std::size_t{1} << (n - 1));
        const GasketWord u = type_word(Digit::A, n), v = type_word(Digit::B, n), w = type_word(Digit::C, n);
        const GasketWord pu = phi(Digit::A, u);
        auto P = [](const GasketWord& x, Axis a) { return project(x, a); };
        const std::string lv = " n=" + std::to_string(n);
        r.add("u^1 = t, Phi_A(u)^2 = t" + lv, P(u, Axis::First) == t && P(pu, Axis::Second) == t);
        r.add("u^2 = Theta(t), Phi_A(u)^1 = Theta(t)" + lv, P(u, Axis::Second) == th && P(pu, Axis::First) == th);
        r.add("v^1 = (010)^*, v^2 = t" + lv, P(v, Axis::First) == z && P(v, Axis::Second) == t);
        r.add("w^1 = Theta(t), w^2 = (010)^*" + lv, P(w, Axis::First) == th && P(w, Axis::Second) == z);
        r.add("u^sum = Phi_A(u)^sum = (101)^*" + lv, P(u, Axis::Sum) == s && P(pu, Axis::Sum) == s);
        r.add("v^sum = reflection(Theta(t))" + lv, P(v, Axis::Sum) == reflection(th));
        r.add("w^sum = reflection(t)" + lv, P(w, Axis::Sum) == reflection(t));
    }
    return r;
}

}  // namespace gasket
