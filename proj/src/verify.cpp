#include <algorithm>
#include <functional>
#include <set>

#include "gasket/admissibility.hpp"
#include "gasket/error.hpp"

namespace gasket {

VerificationReport verify_forbidden_blocks(const RealBase& beta) {
    BinaryWord head = quasi_greedy(beta, 2);
    if (head.str() != "10")
        fail(ErrorCode::PreconditionFailed, "delta(" + beta.label() + ") begins " + head.str() + ", not 10");
    VerificationReport r;
    r.name = "lemma33";
    r.statement = "when delta(beta) begins 10, the blocks BAA, BCC, ABB, ACC, CBB, CAA never occur";
    r.beta = beta.label();
    DeltaTarget delta(beta, 16);
    for (const char* b : {"BAA", "BCC", "ABB", "ACC", "CBB", "CAA"}) {
        GasketWord block = GasketWord::parse(b);
        AdmissibilityVerdict alone = is_admissible_prefix(block, delta);
        bool ok = alone.status == Status::Violation;
        std::size_t contexts = 0;
        for (Digit x : kDigits) {
            for (Digit y : kDigits) {
                GasketWord w;
                w.push_back(x);
                w.push_back(y);
                w += block;
                ++contexts;
                if (is_admissible_prefix(w, delta).status != Status::Violation) {
                    ok = false;
                    r.counterexamples.push_back(w.str() + " is admissible");
                }
            }
        }
        r.add(std::string(b) + " forbidden", ok, alone.str() + ", " + std::to_string(contexts) + " contexts");
    }
    return r;
}

std::vector<ForcedCase> forced_cases(ForcedFamily family, unsigned k) {
    auto W = [](const char* s) { return GasketWord::parse(s); };
    std::vector<ForcedCase> out;
    if (family == ForcedFamily::SixBlocks) {
        const char* pairs[6][2] = {{"BAB", "CAC"}, {"CAC", "BAB"}, {"ABA", "CBC"},
                                   {"CBC", "ABA"}, {"ACA", "BCB"}, {"BCB", "ACA"}};
        for (auto& p : pairs) out.push_back({W(p[0]), {W(p[1])}});
        return out;
    }
    if (k < 1) fail(ErrorCode::PreconditionFailed, "level k must be >= 1");
    auto family_cases = [&](Digit kind) {
        GasketWord x = type_word(kind, k), xv = type_word(kind, k, true);
        out.push_back({xv, {phi(kind, xv), phi(kind, x)}});
        out.push_back({phi(kind, xv), {xv, x}});
    };
    if (family == ForcedFamily::TypeA) {
        family_cases(Digit::A);
    } else {
        family_cases(Digit::B);
        family_cases(Digit::C);
    }
    return out;
}

namespace {

std::string join(const std::vector<GasketWord>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ",") + w.str();
    return "{" + s + "}";
}

}  // namespace

VerificationReport verify_forced_continuation(ForcedFamily family, unsigned k, const RealBase& beta,
                                              std::size_t context_len, std::size_t horizon) {
    VerificationReport r;
    r.beta = beta.label();
    if (family == ForcedFamily::SixBlocks) {
        BinaryWord head = quasi_greedy(beta, 6);
        if (head.str() != "101000")
            fail(ErrorCode::PreconditionFailed, "delta(" + beta.label() + ") begins " + head.str() + ", not 101000");
        r.name = "lemma34";
        r.statement = "when delta(beta) begins 101000, each of BAB, CAC, ABA, CBC, ACA, BCB after a differing "
                      "letter is followed by its forced partner block";
    } else {
        if (beta.kind() != RealBase::Kind::Critical)
            fail(ErrorCode::PreconditionFailed, "forced Thue-Morse continuations need the critical base");
        r.name = family == ForcedFamily::TypeA ? "prop44" : "prop48";
        r.statement = family == ForcedFamily::TypeA
                          ? "at beta_c, u_k^B and Phi_A(u_k^B) after a differing letter continue only with "
                            "Phi_A(u_k^B), Phi_A(u_k) resp. u_k^B, u_k"
                          : "at beta_c, the type-B and type-C analogues of the u_k continuation rule hold";
    }
    if (context_len < 1) fail(ErrorCode::PreconditionFailed, "context length must be >= 1");
    auto cases = forced_cases(family, k);
    const std::size_t L = cases.front().trigger.size();
    if (horizon == 0) horizon = 2 * L + 12;
    DeltaTarget delta(beta, context_len + 2 * L + horizon + 2);
    // Finite extendability only: it admits at least the continuations of
    // infinite sequences, so passing here is the stronger statement.
    r.notes.push_back("continuations counted when extendable by " + std::to_string(horizon) + " more letters");

    for (const auto& fc : cases) {
        std::set<GasketWord> realized;
        std::size_t contexts = 0;
        // DFS over contexts x, then the trigger, then continuations y of length L.
        std::vector<Digit> x;
        std::vector<Digit> y;
        std::function<void(const CheckerState&, std::size_t)> cont = [&](const CheckerState& s, std::size_t left) {
            if (left == 0) {
                if (!reachable(s, horizon, delta)) return;
                GasketWord w(y);
                if (!realized.count(w)) {
                    realized.insert(w);
                    if (std::find(fc.allowed.begin(), fc.allowed.end(), w) == fc.allowed.end())
                        r.counterexamples.push_back(GasketWord(x).str() + "|" + fc.trigger.str() + "|" + w.str());
                }
                return;
            }
            for (Digit d : kDigits) {
                CheckerState c = s;
                if (!advance(c, d, delta)) continue;
                y.push_back(d);
                cont(c, left - 1);
                y.pop_back();
            }
        };
        std::function<void(const CheckerState&)> ctx = [&](const CheckerState& s) {
            if (!x.empty() && x.back() != fc.trigger[0]) {
                CheckerState t = s;
                bool alive = true;
                for (Digit d : fc.trigger)
                    if (!(alive = advance(t, d, delta))) break;
                if (alive) {
                    ++contexts;
                    cont(t, L);
                }
            }
            if (x.size() == context_len) return;
            for (Digit d : kDigits) {
                CheckerState c = s;
                if (!advance(c, d, delta)) continue;
                x.push_back(d);
                ctx(c);
                x.pop_back();
            }
        };
        ctx(CheckerState{});
        std::vector<GasketWord> seen(realized.begin(), realized.end());
        bool ok = realized == std::set<GasketWord>(fc.allowed.begin(), fc.allowed.end());
        r.add(fc.trigger.str() + " -> " + join(fc.allowed), ok,
              std::to_string(contexts) + " contexts, realized " + join(seen));
    }
    return r;
}

namespace {

bool has_triple(const GasketWord& w) {
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] != w[i + 1] && w[i + 1] != w[i + 2] && w[i] != w[i + 2]) return true;
    return false;
}

}  // namespace

std::vector<GasketWord> triple_distinct_witnesses(const RealBase& beta, std::size_t m) {
    EnumerationOptions opts;
    opts.m = m;
    opts.horizon = m;
    auto res = enumerate(beta, opts);
    std::vector<GasketWord> out;
    for (auto& w : res.words)
        if (has_triple(w)) out.push_back(w);
    return out;
}

VerificationReport verify_triple_distinct(const RealBase& beta, std::size_t m) {
    VerificationReport r;
    if (compare(beta, beta_golden()) > 0) r.notes.push_back(beta.label() + " exceeds beta_G, expected to fail");
    r.name = "lemma31";
    r.statement = "for beta <= beta_G no three consecutive letters are pairwise distinct";
    r.beta = beta.label();
    EnumerationOptions opts;
    opts.m = m;
    opts.horizon = m;
    auto res = enumerate(beta, opts);
    std::size_t bad = 0;
    for (auto& w : res.words) {
        if (!has_triple(w)) continue;
        ++bad;
        if (r.counterexamples.size() < 20) r.counterexamples.push_back(w.str());
    }
    r.add("extendable words of length " + std::to_string(m) + " avoid three distinct consecutive letters",
          bad == 0,
          std::to_string(res.words.size()) + " words, " + std::to_string(bad) + " with a distinct triple" +
              (res.table.omega ? ", exact infinite extendability" : ", horizon only"));
    return r;
}

namespace {

std::string decimal(const mpq_class& q, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class v = q.get_num() * scale / q.get_den();
    std::string s = v.get_str();
    while (s.size() <= digits) s = "0" + s;
    std::string out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

}  // namespace

std::vector<RealBase> plateau_probes(unsigned n) {
    mpq_class lo = 1;
    if (n > 0) lo = beta_ladder(n).bracket().second;
    mpq_class hi = beta_ladder(n + 1).bracket().first;
    for (unsigned k = 2; k < 40; ++k) {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 10, k);
        mpq_class a = lo + (hi - lo) / 3, b = lo + 2 * (hi - lo) / 3;
        mpz_class ca = (a.get_num() * s + a.get_den() - 1) / a.get_den();  // ceil(a s)
        mpz_class fb = (b.get_num() * s) / b.get_den();                      // floor(b s)
        mpq_class p1(ca, s), p2(fb, s);
        p1.canonicalize();
        p2.canonicalize();
        if (lo < p1 && p1 < p2 && p2 < hi)
            return {RealBase::rational(p1, decimal(p1, k)), RealBase::rational(p2, decimal(p2, k))};
    }
    fail(ErrorCode::PreconditionFailed, "no rational probes found");
}

PlateauResult verify_plateau(unsigned n, std::size_t m, std::size_t horizon, unsigned jobs) {
    PlateauResult out;
    out.probes = plateau_probes(n);
    out.probes.push_back(beta_ladder(n + 1));
    VerificationReport& r = out.report;
    r.name = "plateau";
    r.statement = "the extendable language is constant on (beta_n, beta_{n+1}]";
    r.beta = "(" + (n == 0 ? std::string("1") : "beta_n:" + std::to_string(n)) + ", beta_n:" +
             std::to_string(n + 1) + "]";
    EnumerationOptions opts;
    opts.m = m;
    opts.horizon = horizon;
    opts.jobs = jobs;
    for (const auto& p : out.probes) {
        auto res = enumerate(p, opts);
        r.notes.push_back(p.label() + ": " + std::to_string(res.words.size()) + " extendable words" +
                          (res.table.omega ? " (exact infinite extendability)" : ""));
        out.sets.push_back(std::move(res.words));
    }
    for (std::size_t i = 1; i < out.sets.size(); ++i)
        r.add(out.probes[i].label() + " matches " + out.probes[0].label(), out.sets[i] == out.sets[0]);
    return out;
}

}  // namespace gasket
