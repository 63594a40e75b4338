#pragma once

// Membership in the intrinsic univoque set via three lexicographic channel
// conditions: whenever c^j_n = 0 (n >= 1) the tail c^j_{n+1} c^j_{n+2} ...
// must be strictly below delta(beta), where c^1 = p1, c^2 = p2, c^3 = 1 - psum.
// The third channel is the reflected form of the coordinate-sum condition.

#include <array>
#include <bitset>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gasket/bases.hpp"
#include "gasket/report.hpp"
#include "gasket/words.hpp"

namespace gasket {

inline constexpr std::size_t kDefaultBudget = 256;

// Live comparison offsets are kept in fixed bitsets.
inline constexpr std::size_t kStateBits = 256;
using OffsetSet = std::bitset<kStateBits>;

enum class Status { Admissible, Violation, Undecided };
enum class Condition { Coord1, Coord2, SumReflected };

const char* status_name(Status s);
const char* condition_name(Condition c);

// Channel bit c^j(d); a condition is triggered where it is 0.
inline Bit channel_bit(Digit d, int j) {
    switch (j) {
        case 0: return p1(d);
        case 1: return p2(d);
        default: return 1 - psum(d);
    }
}

struct AdmissibilityVerdict {
    Status status = Status::Admissible;
    std::size_t position = 0;  // triggering n, 1-based
    Condition condition = Condition::Coord1;
    // Symbols compared until the difference (1-based); 0 when the tail equals delta.
    std::size_t offset = 0;

    std::size_t witness() const { return position + offset; }
    std::string str() const;
};

// delta(beta) as seen by the checkers: a finite prefix, plus the exact
// eventually periodic form when known.
class DeltaTarget {
public:
    DeltaTarget(const RealBase& beta, std::size_t length);
    explicit DeltaTarget(const EventuallyPeriodicBinary& exact);

    Bit operator[](std::size_t i) const { return exact_ ? exact_->at(i) : digits_[i]; }  // 0-based
    std::size_t available() const;
    const std::optional<EventuallyPeriodicBinary>& exact() const { return exact_; }
    const BinaryWord& digits() const { return digits_; }

    // Offsets of live comparisons may be folded into one period when exact.
    std::size_t reduce(std::size_t offset) const;
    // True when exact and one orbit fits in an OffsetSet; offsets are then folded.
    bool folds() const { return folds_; }

    // Offsets o with delta[o] = 0, resp. 1, and the offsets that may be compared.
    const OffsetSet& zeros() const { return zeros_; }
    const OffsetSet& ones() const { return ones_; }
    const OffsetSet& valid() const { return valid_; }
    std::size_t fold_from() const { return fold_from_; }
    std::size_t fold_to() const { return fold_to_; }

private:
    void build_masks();

    BinaryWord digits_;
    std::optional<EventuallyPeriodicBinary> exact_;
    bool folds_ = false;
    OffsetSet zeros_, ones_, valid_;
    std::size_t fold_from_ = 0, fold_to_ = 0;
};

AdmissibilityVerdict is_admissible_prefix(const GasketWord& w, const RealBase& beta,
                                          std::size_t delta_budget = kDefaultBudget);
AdmissibilityVerdict is_admissible_prefix(const GasketWord& w, const DeltaTarget& delta);

AdmissibilityVerdict is_admissible_periodic(const PeriodicCoding& c, const RealBase& beta,
                                            std::size_t budget = kDefaultBudget);
AdmissibilityVerdict is_admissible_periodic(const PeriodicCoding& c, const DeltaTarget& delta,
                                            std::size_t budget = kDefaultBudget);

// Live comparisons of a finite word: per channel, the offsets of comparisons
// whose tails still equal the delta prefix.
struct CheckerState {
    std::array<OffsetSet, 3> live;
    bool operator==(const CheckerState&) const = default;
};

// Appends d; returns false on a violation (s is then unspecified). Throws
// SizeLimit when a comparison outgrows the known delta prefix.
bool advance(CheckerState& s, Digit d, const DeltaTarget& delta);

// Is there a violation-free continuation of the given length?
bool reachable(const CheckerState& s, std::size_t length, const DeltaTarget& delta);

// Exact infinite extendability for eventually periodic delta: is there an
// infinite continuation in which no comparison ever becomes Greater and every
// comparison eventually resolves Less?  Decided by a breakpoint construction
// over reduced offsets and an accepting-cycle search.
class OmegaOracle {
public:
    explicit OmegaOracle(const EventuallyPeriodicBinary& delta, std::size_t node_cap = 4'000'000);
    ~OmegaOracle();
    OmegaOracle(OmegaOracle&&) noexcept;
    OmegaOracle& operator=(OmegaOracle&&) noexcept;

    bool extendable(const CheckerState& s);
    std::size_t nodes() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct GrowthRow {
    std::size_t m = 0;
    std::size_t admissible = 0;
    std::size_t extendable = 0;
};

struct GrowthTable {
    std::string beta;
    std::size_t horizon = 0;
    bool omega = false;  // extendability also required exact infinite extension
    std::vector<GrowthRow> rows;
};

enum class OmegaMode { Auto, Off };

struct EnumerationOptions {
    std::size_t m = 1;
    std::size_t horizon = 0;
    unsigned jobs = 1;
    bool list_words = true;
    std::size_t word_cap = 2'000'000;
    OmegaMode omega = OmegaMode::Auto;
};

struct EnumerationResult {
    GrowthTable table;
    std::vector<GasketWord> words;  // extendable words of length m, A < B < C order
};

EnumerationResult enumerate(const RealBase& beta, const EnumerationOptions& opts);

// Blocks BAA, BCC, ABB, ACC, CBB, CAA when delta(beta) begins 10.
VerificationReport verify_forbidden_blocks(const RealBase& beta);

enum class ForcedFamily { SixBlocks, TypeA, TypeBC };

// Forced continuations: the six-blocks case for delta beginning 101000, and
// the type-A / type-B,C Thue-Morse cases at the critical base.  Contexts x of
// lengths 1..context_len end in a letter different from the trigger's first.
// A continuation counts when the whole word is extendable by `horizon`.
VerificationReport verify_forced_continuation(ForcedFamily family, unsigned k, const RealBase& beta,
                                              std::size_t context_len, std::size_t horizon = 0);

struct ForcedCase {
    GasketWord trigger;
    std::vector<GasketWord> allowed;
};
std::vector<ForcedCase> forced_cases(ForcedFamily family, unsigned k);

// Extendable words of length m containing three distinct consecutive letters.
std::vector<GasketWord> triple_distinct_witnesses(const RealBase& beta, std::size_t m);
VerificationReport verify_triple_distinct(const RealBase& beta, std::size_t m);

struct PlateauResult {
    VerificationReport report;
    std::vector<RealBase> probes;                   // interior probes, then the endpoint
    std::vector<std::vector<GasketWord>> sets;      // one per probe
};
// Probes strictly inside (beta_n, beta_{n+1}), with beta_0 = 1, plus the endpoint.
PlateauResult verify_plateau(unsigned n, std::size_t m, std::size_t horizon, unsigned jobs = 1);
std::vector<RealBase> plateau_probes(unsigned n);

}  // namespace gasket
