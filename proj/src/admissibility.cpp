#include "gasket/admissibility.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>
#include <tuple>

#include "gasket/error.hpp"

namespace gasket {

const char* status_name(Status s) {
    switch (s) {
        case Status::Admissible: return "Admissible";
        case Status::Violation: return "Violation";
        case Status::Undecided: return "Undecided";
    }
    return "?";
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::Coord1: return "coord1";
        case Condition::Coord2: return "coord2";
        case Condition::SumReflected: return "sumReflected";
    }
    return "?";
}

std::string AdmissibilityVerdict::str() const {
    if (status != Status::Violation) return status_name(status);
    return std::string("Violation(n=") + std::to_string(position) + ", " + condition_name(condition) +
           ", offset=" + std::to_string(offset) + ")";
}

DeltaTarget::DeltaTarget(const RealBase& beta, std::size_t length) {
    QuasiGreedyExpansion e = expand(beta, std::max<std::size_t>(length, 1));
    digits_ = std::move(e.digits);
    exact_ = std::move(e.exact);
    build_masks();
}

DeltaTarget::DeltaTarget(const EventuallyPeriodicBinary& exact)
    : digits_(exact.prefix(exact.orbit_size())), exact_(exact) {
    build_masks();
}

void DeltaTarget::build_masks() {
    folds_ = exact_ && exact_->orbit_size() < kStateBits;
    std::size_t limit = folds_ ? exact_->orbit_size() : std::min(available(), kStateBits - 1);
    if (folds_) {
        fold_from_ = exact_->orbit_size();
        fold_to_ = exact_->preperiod().size();
    }
    for (std::size_t o = 0; o < limit; ++o) {
        valid_.set(o);
        ((*this)[o] ? ones_ : zeros_).set(o);
    }
}

std::size_t DeltaTarget::available() const {
    return exact_ ? std::numeric_limits<std::size_t>::max() : digits_.size();
}

std::size_t DeltaTarget::reduce(std::size_t offset) const {
    if (!folds_) return offset;
    std::size_t q = exact_->preperiod().size(), p = exact_->period().size();
    return offset < q ? offset : q + (offset - q) % p;
}

AdmissibilityVerdict is_admissible_prefix(const GasketWord& w, const DeltaTarget& delta) {
    if (w.empty()) fail(ErrorCode::PreconditionFailed, "empty word");
    const std::size_t m = w.size();
    if (delta.available() + 1 < m)
        fail(ErrorCode::PreconditionFailed, "delta budget shorter than the word");
    AdmissibilityVerdict best;
    for (std::size_t n = 1; n < m; ++n) {
        for (int j = 0; j < 3; ++j) {
            if (channel_bit(w[n - 1], j) != 0) continue;
            for (std::size_t k = 1; n + k <= m; ++k) {
                Bit b = channel_bit(w[n + k - 1], j), d = delta[k - 1];
                if (b == d) continue;
                if (b > d) {
                    AdmissibilityVerdict v{Status::Violation, n, static_cast<Condition>(j), k};
                    if (best.status != Status::Violation ||
                        std::tuple(v.witness(), v.position, j) <
                            std::tuple(best.witness(), best.position, static_cast<int>(best.condition)))
                        best = v;
                }
                break;
            }
        }
    }
    return best;
}

AdmissibilityVerdict is_admissible_prefix(const GasketWord& w, const RealBase& beta, std::size_t delta_budget) {
    if (delta_budget < w.size()) fail(ErrorCode::PreconditionFailed, "delta_budget must be >= |w|");
    return is_admissible_prefix(w, DeltaTarget(beta, delta_budget));
}

namespace {

EventuallyPeriodicBinary channel(const PeriodicCoding& c, int j) {
    auto map = [j](const GasketWord& w) {
        std::vector<Bit> out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = channel_bit(w[i], j);
        return BinaryWord(std::move(out));
    };
    return {map(c.preperiod()), map(c.period())};
}

}  // namespace

AdmissibilityVerdict is_admissible_periodic(const PeriodicCoding& c, const DeltaTarget& delta, std::size_t budget) {
    const auto& exact = delta.exact();
    if (!exact && delta.available() < budget)
        fail(ErrorCode::PreconditionFailed, "delta prefix shorter than the comparison budget");
    std::array<EventuallyPeriodicBinary, 3> chans = {channel(c, 0), channel(c, 1), channel(c, 2)};
    bool undecided = false;
    const std::size_t positions = c.orbit_size();
    for (std::size_t n = 1; n <= positions; ++n) {
        for (int j = 0; j < 3; ++j) {
            if (channel_bit(c.at(n - 1), j) != 0) continue;
            EventuallyPeriodicBinary tail = chans[j].shift(n);
            std::size_t limit = budget;
            if (exact)
                limit = std::max(tail.preperiod().size(), exact->preperiod().size()) +
                        std::lcm(tail.period().size(), exact->period().size());
            std::size_t k = 0;
            Bit b = 0, d = 0;
            for (; k < limit; ++k) {
                b = tail.at(k);
                d = delta[k];
                if (b != d) break;
            }
            if (k == limit) {
                if (exact) return {Status::Violation, n, static_cast<Condition>(j), 0};
                undecided = true;
            } else if (b > d) {
                return {Status::Violation, n, static_cast<Condition>(j), k + 1};
            }
        }
    }
    AdmissibilityVerdict v;
    v.status = undecided ? Status::Undecided : Status::Admissible;
    return v;
}

AdmissibilityVerdict is_admissible_periodic(const PeriodicCoding& c, const RealBase& beta, std::size_t budget) {
    return is_admissible_periodic(c, DeltaTarget(beta, budget), budget);
}

bool advance(CheckerState& s, Digit d, const DeltaTarget& delta) {
    for (int j = 0; j < 3; ++j) {
        OffsetSet& live = s.live[j];
        if ((live & ~delta.valid()).any()) fail(ErrorCode::SizeLimit, "comparison outgrew the known delta prefix");
        if (channel_bit(d, j)) {
            if ((live & delta.zeros()).any()) return false;
            live &= delta.ones();
        } else {
            live &= delta.zeros();
        }
        live <<= 1;
        if (delta.folds() && live.test(delta.fold_from())) {
            live.reset(delta.fold_from());
            live.set(delta.fold_to());
        }
        if (!channel_bit(d, j)) live.set(0);
    }
    return true;
}

bool reachable(const CheckerState& s, std::size_t length, const DeltaTarget& delta) {
    if (length == 0) return true;
    for (Digit d : kDigits) {
        CheckerState c = s;
        if (advance(c, d, delta) && reachable(c, length - 1, delta)) return true;
    }
    return false;
}

namespace {

struct Worker {
    const DeltaTarget& delta;
    const EnumerationOptions& opts;
    std::unique_ptr<OmegaOracle> oracle;
    std::vector<std::size_t> adm, ext;
    std::vector<GasketWord> words;
    std::vector<Digit> path;

    Worker(const DeltaTarget& d, const EnumerationOptions& o, bool omega)
        : delta(d), opts(o), adm(o.m + 1, 0), ext(o.m + 1, 0) {
        if (omega) oracle = std::make_unique<OmegaOracle>(*d.exact());
    }

    // Returns the deepest violation-free depth below this node, capped at
    // m + horizon.
    std::size_t visit(const CheckerState& s, std::size_t depth) {
        ++adm[depth];
        const std::size_t need = depth + opts.horizon;
        std::size_t best = depth;
        if (depth < opts.m) {
            for (Digit d : kDigits) {
                CheckerState c = s;
                if (!advance(c, d, delta)) continue;
                path.push_back(d);
                best = std::max(best, visit(c, depth + 1));
                path.pop_back();
            }
        } else if (reachable(s, opts.horizon, delta)) {
            best = need;
        } else if (opts.horizon > 1) {
            // Ancestors need the exact reach; reachability is monotone in the length.
            std::size_t lo = 0, hi = opts.horizon - 1;
            while (lo < hi) {
                std::size_t mid = (lo + hi + 1) / 2;
                if (reachable(s, mid, delta))
                    lo = mid;
                else
                    hi = mid - 1;
            }
            best = depth + lo;
        }
        bool ok = best >= need;
        if (ok && oracle) ok = oracle->extendable(s);
        if (ok) {
            ++ext[depth];
            if (depth == opts.m && opts.list_words) {
                if (words.size() >= opts.word_cap)
                    fail(ErrorCode::SizeLimit, "more than " + std::to_string(opts.word_cap) + " words");
                words.emplace_back(path);
            }
        }
        return best;
    }
};

}  // namespace

EnumerationResult enumerate(const RealBase& beta, const EnumerationOptions& opts) {
    if (opts.m < 1) fail(ErrorCode::PreconditionFailed, "m must be >= 1");
    DeltaTarget delta(beta, opts.m + opts.horizon + 1);
    const bool omega = opts.omega == OmegaMode::Auto && delta.folds();

    std::vector<std::unique_ptr<Worker>> workers;
    for (int i = 0; i < 3; ++i) workers.push_back(std::make_unique<Worker>(delta, opts, omega));
    auto run = [&](int i) {
        CheckerState s;
        Digit d = kDigits[i];
        advance(s, d, delta);  // a single letter never violates
        workers[i]->path.push_back(d);
        workers[i]->visit(s, 1);
    };
    const unsigned jobs = std::clamp(opts.jobs, 1u, 3u);
    if (jobs == 1) {
        for (int i = 0; i < 3; ++i) run(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (int i; (i = next++) < 3;) run(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    EnumerationResult out;
    out.table.beta = beta.label();
    out.table.horizon = opts.horizon;
    out.table.omega = omega;
    for (std::size_t m = 1; m <= opts.m; ++m) {
        GrowthRow row{m, 0, 0};
        for (auto& w : workers) {
            row.admissible += w->adm[m];
            row.extendable += w->ext[m];
        }
        out.table.rows.push_back(row);
    }
    for (auto& w : workers)
        for (auto& word : w->words) out.words.push_back(std::move(word));
    return out;
}

}  // namespace gasket
