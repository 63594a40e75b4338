#include "gasket/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "gasket/admissibility.hpp"
#include "gasket/analysis.hpp"
#include "gasket/bases.hpp"
#include "gasket/error.hpp"
#include "gasket/geometry.hpp"
#include "gasket/identities.hpp"
#include "gasket/words.hpp"

namespace gasket {

namespace {

using Json = nlohmann::ordered_json;

struct Result {
    Json json = Json::object();
    std::string text;
    std::optional<std::string> csv;
    std::optional<std::string> raw;  // written verbatim (SVG)
    int code = kExitOk;
};

struct Leaf {
    std::string format = "text";
    std::string out;
};

Json interval_json(const Interval& i, int digits = 25) {
    return {{"lo", i.lo().to_string(digits)}, {"hi", i.hi().to_string(digits)}};
}

Json report_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"name", r.name},       {"statement", r.statement},          {"beta", r.beta},
            {"passed", r.passed()}, {"checks", checks},                  {"counterexamples", r.counterexamples},
            {"notes", r.notes}};
}

Result report_result(const VerificationReport& r) {
    Result res;
    res.json = report_json(r);
    res.text = r.str();
    res.code = r.passed() ? kExitOk : kExitCounterexample;
    return res;
}

Json verdict_json(const std::string& word, const AdmissibilityVerdict& v) {
    Json j = {{"word", word}, {"status", status_name(v.status)}};
    if (v.status == Status::Violation) {
        j["position"] = v.position;
        j["condition"] = condition_name(v.condition);
        j["offset"] = v.offset;
    } else {
        j["position"] = nullptr;
        j["condition"] = nullptr;
    }
    return j;
}

Json table_json(const GrowthTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back({{"m", r.m}, {"admissible", r.admissible}, {"extendable", r.extendable}});
    return rows;
}

std::string table_text(const GrowthTable& t) {
    std::ostringstream os;
    os << "beta=" << t.beta << " T=" << t.horizon << (t.omega ? " (exact infinite extendability)" : "") << "\n";
    os << "m\tadmissible\textendable\n";
    for (const auto& r : t.rows) os << r.m << "\t" << r.admissible << "\t" << r.extendable << "\n";
    return os.str();
}

std::string table_csv(const GrowthTable& t) {
    std::ostringstream os;
    os << "m,admissible,extendable\n";
    for (const auto& r : t.rows) os << r.m << "," << r.admissible << "," << r.extendable << "\n";
    return os.str();
}

Result base_result(const RealBase& b, double tol) {
    Result res;
    Interval e = b.enclosure(tol);
    res.json["beta"] = b.label();
    res.json["enclosure"] = interval_json(e);
    res.json["width"] = e.width_double();
    std::ostringstream os;
    os << b.label() << " in " << e.str(20) << "\n";
    os << "width " << e.width_double() << "\n";
    if (const auto& p = b.polynomial()) {
        res.json["polynomial"] = p->str();
        os << "polynomial " << p->str() << "\n";
    }
    if (const auto& x = b.defining_expansion()) {
        res.json["expansion"] = x->str();
        os << "delta " << x->str() << "\n";
    }
    res.text = os.str();
    return res;
}

Result critical_result(double tol, std::size_t terms) {
    Result res = base_result(critical_base(tol), tol);
    const RealBase bc = critical_base(tol);
    // The series check needs beta to well below the tail bound.
    const auto bits = static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(terms) * std::log2(1.6))) + 64;
    SeriesResidual s = lambda_residual(bc.enclosure_bits(bits), terms);
    const bool within = mpfr_cmp(s.residual.abs().hi().get(), s.tail_bound.hi().get()) <= 0;
    const bool above = compare(beta_ladder(10), bc) < 0, below = compare(bc, beta_hat(10)) < 0;
    const double mid = bc.enclosure(tol).mid_double(), ref = 1.55263, diff = std::fabs(mid - ref);
    res.json["series"] = {{"N", terms}, {"residual", interval_json(s.residual, 6)},
                          {"tail_bound", interval_json(s.tail_bound, 6)}, {"within", within}};
    res.json["inside_ladders"] = above && below;
    res.json["reference"] = {{"value", ref}, {"difference", diff}, {"tolerance", 2e-3}, {"consistent", diff <= 2e-3}};
    std::ostringstream os;
    os << res.text;
    os << "series N=" << terms << ": sum - 1 in " << s.residual.str(6) << ", tail bound " << s.tail_bound.hi().to_string(6)
       << (within ? " (within)" : " (EXCEEDS)") << "\n";
    os << "beta_n:10 < beta_c < beta_hat:10: " << (above && below ? "yes" : "NO") << "\n";
    os << "reference decimal 1.55263: difference " << diff << (diff <= 2e-3 ? " (within 2e-3)" : " (outside 2e-3)")
       << "\n";
    res.text = os.str();
    if (!within || !above || !below) res.code = kExitCounterexample;
    return res;
}

Result point_result(const RealBase& b, const PeriodicCoding& c) {
    Result res;
    PlanarPoint p = point_of(c, b, 256);
    res.json = {{"beta", b.label()}, {"coding", c.str()}};
    if (p.is_exact()) {
        res.json["x"] = p.exact_x->get_str();
        res.json["y"] = p.exact_y->get_str();
    } else {
        res.json["x"] = interval_json(p.x);
        res.json["y"] = interval_json(p.y);
    }
    res.text = c.str() + " -> " + p.str(20) + "\n";
    return res;
}

Result growth_result(const GrowthTable& t) {
    Result res;
    res.json = {{"beta", t.beta}, {"m", t.rows.size()}, {"T", t.horizon}, {"omega", t.omega}, {"counts", table_json(t)}};
    res.text = table_text(t);
    res.csv = table_csv(t);
    return res;
}

std::vector<std::pair<std::size_t, std::size_t>> xn_counts(unsigned n, unsigned k_max) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t L = std::size_t{3} << (n - 1);
    for (unsigned k = 1; k <= k_max; ++k) out.emplace_back(k * L, xn_words(n, k).size());
    return out;
}

Json entropy_json(const EntropyEstimate& e) {
    return {{"slope", e.slope}, {"uncertainty", e.uncertainty}, {"fit_from", e.fit_from}, {"fit_to", e.fit_to},
            {"points", e.points}, {"units", "nats/symbol"}};
}

struct Opts {
    std::string beta_s, word_s, coding_s, kind_s, axis_s, seq_s, omega_s = "auto";
    unsigned n = 0, k = 1, m_u = 0, depth = 1, jobs = 1;
    std::size_t m = 0, horizon = 0, budget = kDefaultBudget, context = 4, terms = 60;
    double tol = 1e-10;
    bool variant = false, list_words = false;
    std::optional<unsigned> xn_level;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fat Sierpinski gasket toolkit: quasi-greedy expansions, admissibility, geometry, analysis"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show all subcommands");

    std::function<Result()> action;
    Leaf leaf;
    // Each leaf owns its option storage so defaults do not collide.
    std::deque<Opts> store;
    Opts* o = nullptr;
    auto make_leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        o = &store.emplace_back();
        CLI::App* c = parent->add_subcommand(name, desc);
        c->add_option("--format", leaf.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--out", leaf.out, "Write output to this path");
        return c;
    };

    // words
    CLI::App* words = app.add_subcommand("words", "Binary and gasket words");
    words->require_subcommand(1);
    {
        auto* c = make_leaf(words, "tm", "Thue-Morse type word t_n");
        c->add_option("--n", o->n, "Level n >= 1")->required();
        c->callback([&, o] {
            action = [&, o] {
                Result r;
                BinaryWord w = tm_word(o->n);
                r.json = {{"n", o->n}, {"word", w.str()}};
                r.text = w.str() + "\n";
                return r;
            };
        });
        for (const char* which : {"lambda", "gamma"}) {
            auto* g = make_leaf(words, which, std::string("Prefix of ") + which);
            g->add_option("--n", o->n, "Prefix length")->required();
            const std::string w = which;
            g->callback([&, o, w] {
                action = [&, o, w] {
                    Result r;
                    BinaryWord p = w == "lambda" ? lambda_prefix(o->n) : gamma_prefix(o->n);
                    r.json = {{"n", o->n}, {"word", p.str()}};
                    r.text = p.str() + "\n";
                    return r;
                };
            });
        }
        auto* t = make_leaf(words, "type", "Type word u_n (A), v_n (B), w_n (C)");
        t->add_option("--kind", o->kind_s, "A, B or C")->required();
        t->add_option("--n", o->n, "Level")->required();
        t->add_flag("--variant", o->variant, "Replace the last letter");
        t->callback([&, o] {
            action = [&, o] {
                Result r;
                GasketWord w = type_word(parse_kind(o->kind_s), o->n, o->variant);
                r.json = {{"kind", o->kind_s}, {"n", o->n}, {"variant", o->variant}, {"word", w.str()}};
                r.text = w.str() + "\n";
                return r;
            };
        });
        auto* p = make_leaf(words, "phi", "Letter swap Phi_kind");
        p->add_option("--kind", o->kind_s, "A, B or C")->required();
        p->add_option("--word", o->word_s, "Gasket word")->required();
        p->callback([&, o] {
            action = [&, o] {
                Result r;
                GasketWord w = phi(parse_kind(o->kind_s), GasketWord::parse(o->word_s));
                r.json = {{"kind", o->kind_s}, {"word", w.str()}};
                r.text = w.str() + "\n";
                return r;
            };
        });
        auto* pr = make_leaf(words, "project", "Coordinate projection");
        pr->add_option("--word", o->word_s, "Gasket word")->required();
        pr->add_option("--axis", o->axis_s, "1, 2 or sum")->required();
        pr->callback([&, o] {
            action = [&, o] {
                Result r;
                BinaryWord w = project(GasketWord::parse(o->word_s), parse_axis(o->axis_s));
                r.json = {{"axis", o->axis_s}, {"word", w.str()}};
                r.text = w.str() + "\n";
                return r;
            };
        });
    }

    // base
    CLI::App* base = app.add_subcommand("base", "Real bases and quasi-greedy expansions");
    base->require_subcommand(1);
    {
        auto* d = make_leaf(base, "delta", "First digits of delta(beta)");
        d->add_option("--beta", o->beta_s, "Base")->required();
        d->add_option("--n", o->n, "Number of digits")->default_val(48);
        d->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                QuasiGreedyExpansion e = expand(b, o->n);
                r.json = {{"beta", b.label()}, {"n", o->n}, {"digits", e.digits.str()}};
                r.json["exact"] = e.exact ? Json(e.exact->str()) : Json(nullptr);
                r.text = e.digits.str() + "\n" + (e.exact ? "exact " + e.exact->str() + "\n" : "");
                return r;
            };
        });
        auto* inv = make_leaf(base, "invert", "The base with delta(beta) equal to an eventually periodic sequence");
        inv->add_option("seq,--seq", o->seq_s, "Sequence like (100) or 1(10)");
        inv->add_option("--tol", o->tol, "Enclosure width")->default_val(1e-10);
        inv->callback([&, o] {
            action = [&, o] {
                if (o->seq_s.empty()) fail(ErrorCode::Parse, "missing sequence");
                return base_result(delta_inverse(EventuallyPeriodicBinary::parse(o->seq_s), o->tol), o->tol);
            };
        });
        for (const char* which : {"ladder", "hat"}) {
            auto* l = make_leaf(base, which, std::string(which) == "ladder" ? "beta_n" : "beta_hat_n");
            l->add_option("--n", o->n, "Index n >= 1")->required();
            l->add_option("--tol", o->tol, "Enclosure width")->default_val(1e-10);
            const std::string w = which;
            l->callback([&, o, w] {
                action = [&, o, w] { return base_result(w == "ladder" ? beta_ladder(o->n, o->tol) : beta_hat(o->n, o->tol), o->tol); };
            });
        }
        auto* cr = make_leaf(base, "critical", "The critical base beta_c");
        cr->add_option("--tol", o->tol, "Enclosure width")->default_val(1e-10);
        cr->add_option("--N", o->terms, "Series terms for the residual check")->default_val(200);
        cr->callback([&, o] { action = [&, o] { return critical_result(o->tol, o->terms); }; });
        auto* mu = make_leaf(base, "multinacci", "delta = (1^m 0)^inf");
        mu->add_option("--m", o->m_u, "m >= 1")->required();
        mu->add_option("--tol", o->tol, "Enclosure width")->default_val(1e-10);
        mu->callback([&, o] { action = [&, o] { return base_result(multinacci(o->m_u, o->tol), o->tol); }; });
    }

    // adm
    CLI::App* adm = app.add_subcommand("adm", "Admissibility");
    adm->require_subcommand(1);
    {
        auto* c = make_leaf(adm, "check", "Check a finite word");
        c->add_option("--beta", o->beta_s, "Base")->required();
        c->add_option("--word", o->word_s, "Gasket word")->required();
        c->add_option("--budget", o->budget, "delta digits")->default_val(kDefaultBudget);
        c->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                GasketWord w = GasketWord::parse(o->word_s);
                AdmissibilityVerdict v = is_admissible_prefix(w, b, std::max(o->budget, w.size()));
                r.json = {{"beta", b.label()}, {"m", w.size()}, {"T", nullptr}, {"counts", Json::array()},
                          {"words", Json::array()}, {"verdicts", Json::array({verdict_json(w.str(), v)})}};
                r.text = w.str() + ": " + v.str() + "\n";
                return r;
            };
        });
        auto* p = make_leaf(adm, "check-periodic", "Check an eventually periodic coding");
        p->add_option("--beta", o->beta_s, "Base")->required();
        p->add_option("--coding", o->coding_s, "Coding like B(AC)")->required();
        p->add_option("--budget", o->budget, "Comparison budget")->default_val(kDefaultBudget);
        p->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                PeriodicCoding c = PeriodicCoding::parse(o->coding_s);
                AdmissibilityVerdict v = is_admissible_periodic(c, b, o->budget);
                r.json = {{"beta", b.label()}, {"m", nullptr}, {"T", nullptr}, {"counts", Json::array()},
                          {"words", Json::array()}, {"verdicts", Json::array({verdict_json(c.str(), v)})}};
                r.text = c.str() + ": " + v.str() + "\n";
                return r;
            };
        });
        auto* e = make_leaf(adm, "enumerate", "Extendable words of length m");
        e->add_option("--beta", o->beta_s, "Base")->required();
        e->add_option("--m", o->m, "Word length")->required();
        e->add_option("--T,--horizon", o->horizon, "Extendability horizon")->default_val(0);
        e->add_option("--jobs", o->jobs, "Worker threads (1-3)")->default_val(1);
        e->add_option("--omega", o->omega_s, "Exact infinite extendability when delta is periodic")
            ->check(CLI::IsMember({"auto", "off"}));
        e->add_flag("--words", o->list_words, "List the words");
        e->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                EnumerationOptions eo;
                eo.m = o->m;
                eo.horizon = o->horizon;
                eo.jobs = o->jobs;
                eo.list_words = o->list_words;
                eo.omega = o->omega_s == "off" ? OmegaMode::Off : OmegaMode::Auto;
                EnumerationResult er = enumerate(b, eo);
                Json ws = Json::array();
                for (const auto& w : er.words) ws.push_back(w.str());
                r.json = {{"beta", b.label()}, {"m", o->m},      {"T", o->horizon},          {"omega", er.table.omega},
                          {"counts", table_json(er.table)}, {"words", ws}, {"verdicts", Json::array()}};
                r.text = table_text(er.table);
                for (const auto& w : er.words) r.text += w.str() + "\n";
                r.csv = table_csv(er.table);
                return r;
            };
        });
    }

    // verify
    CLI::App* ver = app.add_subcommand("verify", "Mechanical checks of the structural statements");
    ver->require_subcommand(1);
    {
        auto* l31 = make_leaf(ver, "lemma31", "No three distinct consecutive letters up to beta_G");
        l31->add_option("--beta", o->beta_s, "Base")->default_val("beta_G");
        l31->add_option("--m", o->m, "Word length")->default_val(12);
        l31->callback([&, o] {
            action = [&, o] { return report_result(verify_triple_distinct(RealBase::parse(o->beta_s), o->m)); };
        });
        auto* l33 = make_leaf(ver, "lemma33", "Forbidden blocks when delta begins 10");
        l33->add_option("--beta", o->beta_s, "Base")->default_val("beta_c");
        l33->callback([&, o] { action = [&, o] { return report_result(verify_forbidden_blocks(RealBase::parse(o->beta_s))); }; });
        auto* l34 = make_leaf(ver, "lemma34", "Forced partner blocks when delta begins 101000");
        l34->add_option("--beta", o->beta_s, "Base")->default_val("beta_n:2");
        l34->add_option("--context", o->context, "Maximal context length")->default_val(4);
        l34->add_option("--horizon", o->horizon, "Extendability horizon (0: automatic)")->default_val(0);
        l34->callback([&, o] {
            action = [&, o] {
                return report_result(verify_forced_continuation(ForcedFamily::SixBlocks, 0, RealBase::parse(o->beta_s),
                                                                o->context, o->horizon));
            };
        });
        for (const char* which : {"prop44", "prop48"}) {
            auto* p = make_leaf(ver, which,
                                std::string(which) == "prop44" ? "Type-A forced continuations at beta_c"
                                                               : "Type-B and type-C forced continuations at beta_c");
            p->add_option("--k", o->k, "Level k >= 1")->default_val(1);
            p->add_option("--beta", o->beta_s, "Base (the critical base)")->default_val("beta_c");
            p->add_option("--context", o->context, "Maximal context length")->default_val(4);
            p->add_option("--horizon", o->horizon, "Extendability horizon (0: automatic)")->default_val(0);
            const std::string w = which;
            p->callback([&, o, w] {
                action = [&, o, w] {
                    return report_result(verify_forced_continuation(
                        w == "prop44" ? ForcedFamily::TypeA : ForcedFamily::TypeBC, o->k, RealBase::parse(o->beta_s),
                        o->context, o->horizon));
                };
            });
        }
        auto* l50 = make_leaf(ver, "l50", "Lexicographic chains between lambda and gamma");
        l50->add_option("--n", o->n, "Maximal level")->default_val(10);
        l50->callback([&, o] { action = [&, o] { return report_result(verify_lambda_gamma_chains(o->n)); }; });
        auto* il = make_leaf(ver, "interleave", "Interleaving and projection identities");
        il->add_option("--n", o->n, "Maximal level")->default_val(12);
        il->callback([&, o] {
            action = [&, o] {
                VerificationReport a = verify_interleave(o->n), b = verify_projections(o->n);
                a.name = "interleave";
                for (auto& c : b.checks) a.checks.push_back(c);
                for (auto& c : b.counterexamples) a.counterexamples.push_back(c);
                a.statement += "; " + b.statement;
                return report_result(a);
            };
        });
        auto* pl = make_leaf(ver, "plateau", "Constant extendable language on (beta_n, beta_{n+1}]");
        pl->add_option("--n", o->n, "Ladder index n >= 0")->default_val(1);
        pl->add_option("--m", o->m, "Word length")->default_val(10);
        pl->add_option("--T,--horizon", o->horizon, "Extendability horizon")->default_val(20);
        pl->add_option("--jobs", o->jobs, "Worker threads (1-3)")->default_val(1);
        pl->callback([&, o] { action = [&, o] { return report_result(verify_plateau(o->n, o->m, o->horizon, o->jobs).report); }; });
        auto* pe = make_leaf(ver, "periodic", "Periodic type-word sequences above and at the ladder");
        pe->add_option("--n", o->n, "Ladder index n >= 1")->default_val(3);
        pe->callback([&, o] { action = [&, o] { return report_result(verify_periodic(o->n)); }; });
    }

    // geom
    CLI::App* geom = app.add_subcommand("geom", "Planar realization");
    geom->require_subcommand(1);
    {
        auto* p = make_leaf(geom, "point", "Point of a coding");
        p->add_option("--beta", o->beta_s, "Base")->required();
        p->add_option("--coding", o->coding_s, "Coding like (BAC)")->required();
        p->callback([&, o] {
            action = [&, o] { return point_result(RealBase::parse(o->beta_s), PeriodicCoding::parse(o->coding_s)); };
        });
        auto* rg = make_leaf(geom, "region", "Closed triangles containing the point of a coding");
        rg->add_option("--beta", o->beta_s, "Base")->required();
        rg->add_option("--coding", o->coding_s, "Coding like (BAC)")->required();
        rg->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                PeriodicCoding c = PeriodicCoding::parse(o->coding_s);
                Json tags = Json::array();
                std::string t;
                for (RegionTag g : region_of(c, b)) {
                    tags.push_back(region_name(g));
                    t += (t.empty() ? "" : " ") + std::string(region_name(g));
                }
                r.json = {{"beta", b.label()}, {"coding", c.str()}, {"regions", tags}};
                r.text = c.str() + ": " + t + "\n";
                return r;
            };
        });
        auto* u = make_leaf(geom, "unique", "Do all tails avoid the overlap region?");
        u->add_option("--beta", o->beta_s, "Base")->required();
        u->add_option("--coding", o->coding_s, "Coding like (BAC)")->required();
        u->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                PeriodicCoding c = PeriodicCoding::parse(o->coding_s);
                UniqueCheck g = geometric_unique_check(c, b);
                r.json = {{"beta", b.label()}, {"coding", c.str()}, {"result", g.str()}};
                r.text = c.str() + ": " + g.str() + "\n";
                return r;
            };
        });
        auto* rd = make_leaf(geom, "render", "SVG of the depth-k images of the hull");
        rd->add_option("--beta", o->beta_s, "Base")->required();
        rd->add_option("--depth", o->depth, "Generations (<= 12)")->default_val(1);
        rd->callback([&, o] {
            action = [&, o] {
                Result r;
                r.raw = render_svg(RealBase::parse(o->beta_s), o->depth);
                return r;
            };
        });
    }

    // analyze
    CLI::App* an = app.add_subcommand("analyze", "Growth, entropy, dimension and identities");
    an->require_subcommand(1);
    {
        auto growth_opts = [&](CLI::App* c) {
            c->add_option("--beta", o->beta_s, "Base");
            c->add_option("--m", o->m, "Maximal word length")->default_val(24);
            c->add_option("--T,--horizon", o->horizon, "Extendability horizon")->default_val(24);
            c->add_option("--jobs", o->jobs, "Worker threads (1-3)")->default_val(1);
        };
        auto* g = make_leaf(an, "growth", "Extendable counts W(m)");
        growth_opts(g);
        g->callback([&, o] {
            action = [&, o] { return growth_result(growth_counts(RealBase::parse(o->beta_s), o->m, o->horizon, o->jobs)); };
        });
        for (const char* which : {"entropy", "dimension"}) {
            auto* e = make_leaf(an, which,
                                std::string(which) == "entropy" ? "Log-slope of the counts" : "Entropy over log beta");
            growth_opts(e);
            e->add_option("--xn", o->xn_level, "Use X_n path counts at this level instead of enumeration");
            e->add_option("--k", o->k, "Path lengths 1..k for --xn")->default_val(8);
            const std::string w = which;
            e->callback([&, o, w] {
                action = [&, o, w] {
                    Result r;
                    EntropyEstimate est;
                    std::ostringstream os;
                    if (o->xn_level) {
                        est = entropy_estimate(xn_counts(*o->xn_level, o->k));
                        r.json["source"] = "X_" + std::to_string(*o->xn_level) + " path counts, k <= " + std::to_string(o->k);
                        r.json["path_entropy"] = xn_path_entropy(*o->xn_level);
                        r.json["alternative_entropy"] = xn_printed_entropy(*o->xn_level);
                        os << "X_" << *o->xn_level << " path counts, k = 1.." << o->k << "\n";
                        os << "path-count entropy (log 2)/L = " << xn_path_entropy(*o->xn_level)
                           << ", log 2 / log(2^(n-1) 3) = " << xn_printed_entropy(*o->xn_level) << "\n";
                    } else {
                        GrowthTable t = growth_counts(RealBase::parse(o->beta_s), o->m, o->horizon, o->jobs);
                        est = entropy_estimate(t);
                        r.json["source"] = "extendable counts, beta=" + t.beta + ", T=" + std::to_string(o->horizon);
                        os << "extendable counts, beta=" << t.beta << ", m <= " << o->m << ", T=" << o->horizon << "\n";
                    }
                    r.json["entropy"] = entropy_json(est);
                    os << "entropy " << est.str() << "\n";
                    if (w == "dimension") {
                        if (o->beta_s.empty()) fail(ErrorCode::PreconditionFailed, "dimension needs --beta");
                        DimensionEstimate d = dimension_estimate(RealBase::parse(o->beta_s), est);
                        r.json["beta"] = d.beta;
                        r.json["enclosure"] = d.enclosure;
                        r.json["dimension"] = d.value;
                        r.json["uncertainty"] = d.uncertainty;
                        os << d.str() << "\n";
                    }
                    r.text = os.str();
                    return r;
                };
            });
        }
        auto* x = make_leaf(an, "xn", "Label words of the X_n graph");
        x->add_option("--n", o->n, "Level n >= 1")->default_val(2);
        x->add_option("--k", o->k, "Path length")->default_val(3);
        x->add_option("--beta", o->beta_s, "Also check admissibility at this base");
        x->add_flag("--words", o->list_words, "List the words");
        x->callback([&, o] {
            action = [&, o] {
                Result r;
                std::vector<GasketWord> ws = xn_words(o->n, o->k);
                std::ostringstream os;
                os << ws.size() << " words of length " << ws.front().size() << "\n";
                os << "path-count entropy " << xn_path_entropy(o->n) << ", alternative " << xn_printed_entropy(o->n) << "\n";
                r.json = {{"n", o->n}, {"k", o->k}, {"count", ws.size()}, {"length", ws.front().size()},
                          {"path_entropy", xn_path_entropy(o->n)}, {"alternative_entropy", xn_printed_entropy(o->n)}};
                if (!o->beta_s.empty()) {
                    RealBase b = RealBase::parse(o->beta_s);
                    Json verdicts = Json::array();
                    std::size_t bad = 0;
                    for (const auto& w : ws) {
                        AdmissibilityVerdict v = is_admissible_prefix(w, b, std::max(kDefaultBudget, w.size()));
                        if (v.status == Status::Violation) ++bad;
                        if (o->list_words) verdicts.push_back(verdict_json(w.str(), v));
                    }
                    r.json["beta"] = b.label();
                    r.json["violations"] = bad;
                    if (o->list_words) r.json["verdicts"] = verdicts;
                    os << bad << " violations at " << b.label() << "\n";
                    if (bad) r.code = kExitCounterexample;
                }
                if (o->list_words) {
                    Json arr = Json::array();
                    for (const auto& w : ws) {
                        arr.push_back(w.str());
                        os << w.str() << "\n";
                    }
                    r.json["words"] = arr;
                }
                r.text = os.str();
                return r;
            };
        });
        auto* mh = make_leaf(an, "mahler", "Residual of the tau series identity");
        mh->add_option("--beta", o->beta_s, "Base")->default_val("beta_c");
        mh->add_option("--N", o->terms, "Terms")->default_val(60);
        mh->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                MahlerResidual res = mahler_residual(b, o->terms);
                r.json = {{"beta", b.label()},
                          {"N", o->terms},
                          {"enclosure", interval_json(res.beta)},
                          {"residual", interval_json(res.residual, 8)},
                          {"tail_bound", interval_json(res.tail_bound, 8)},
                          {"within", res.within()},
                          {"ratio", res.ratio()}};
                r.text = res.str() + "\n";
                return r;
            };
        });
        auto* ta = make_leaf(an, "theorem-a", "Point identities for d^n followed by a period-3 orbit");
        ta->add_option("--beta", o->beta_s, "Base in (beta_G, 3/2]")->default_val("3/2");
        ta->add_option("--n", o->n, "Maximal n (<= 8)")->default_val(5);
        ta->callback([&, o] {
            action = [&, o] {
                Result r;
                RealBase b = RealBase::parse(o->beta_s);
                auto pts = orbit_points(b, o->n);
                Json arr = Json::array();
                std::ostringstream os;
                std::size_t bad = 0;
                for (const auto& p : pts) {
                    arr.push_back({{"coding", p.coding.str()},
                                   {"d", std::string(1, symbol_char(p.d))},
                                   {"n", p.n},
                                   {"orbit", p.orbit},
                                   {"series", p.series.str(20)},
                                   {"closed_form", p.closed.str(20)},
                                   {"equal", p.equal}});
                    os << std::string(p.n, symbol_char(p.d)) << "(" << p.orbit << ") " << p.series.str(20)
                       << (p.equal ? " = " : " != ") << p.closed.str(20) << "\n";
                    if (!p.equal) ++bad;
                }
                os << pts.size() << " codings, " << bad << " mismatches\n";
                r.json = {{"beta", b.label()}, {"n_max", o->n}, {"points", arr}, {"mismatches", bad}};
                r.text = os.str();
                if (bad) r.code = kExitCounterexample;
                return r;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action) {
        err << "error: no command\n";
        return kExitUsage;
    }

    Result r;
    try {
        r = action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::PrecisionExhausted || e.code() == ErrorCode::Undecidable ? kExitPrecision
                                                                                               : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string body;
    if (r.raw) {
        body = *r.raw;
    } else if (leaf.format == "json") {
        body = r.json.dump(2) + "\n";
    } else if (leaf.format == "csv") {
        if (!r.csv) {
            err << "error: csv output is not available for this command\n";
            return kExitUsage;
        }
        body = *r.csv;
    } else {
        body = r.text;
    }
    if (leaf.out.empty()) {
        out << body;
    } else {
        std::ofstream f(leaf.out, std::ios::binary);
        if (!f || !(f << body)) {
            err << "error: cannot write " << leaf.out << "\n";
            return kExitUsage;
        }
    }
    return r.code;
}

}  // namespace gasket
