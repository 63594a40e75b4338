// Exact extendability when delta is eventually periodic.
//
// A state S holds, per channel, the set of reduced offsets of live
// comparisons. An infinite continuation is good iff it never produces a
// Greater and no comparison stays equal forever. O is the set of observed
// comparisons (a subset of S); when every observed comparison has resolved,
// the step is a breakpoint and O restarts from the new S. A run is good iff
// it passes infinitely many breakpoints, so a state is extendable iff its
// (S, S) node reaches a cycle with a breakpoint edge.

#include <unordered_map>

#include "gasket/admissibility.hpp"
#include "gasket/error.hpp"

namespace gasket {

namespace {

using Key = std::vector<std::uint64_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL;
        for (auto w : k) {
            h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

struct OmegaOracle::Impl {
    DeltaTarget delta;
    std::size_t width;  // offsets per channel
    std::size_t words;  // uint64 per channel set
    std::size_t cap;

    std::unordered_map<Key, int, KeyHash> ids;
    std::vector<Key> keys;
    std::vector<signed char> good;  // -1 undecided

    Impl(const EventuallyPeriodicBinary& d, std::size_t node_cap)
        : delta(d), width(d.orbit_size()), words((width + 63) / 64), cap(node_cap) {
        if (!delta.folds()) fail(ErrorCode::SizeLimit, "delta orbit too long for exact extendability");
    }

    bool test(const Key& k, std::size_t set, std::size_t bit) const {
        return (k[set * words + bit / 64] >> (bit % 64)) & 1U;
    }
    void put(Key& k, std::size_t set, std::size_t bit) const { k[set * words + bit / 64] |= 1ULL << (bit % 64); }

    int intern(Key k) {
        auto [it, fresh] = ids.emplace(std::move(k), static_cast<int>(keys.size()));
        if (fresh) {
            if (keys.size() >= cap) fail(ErrorCode::SizeLimit, "omega automaton exceeds node cap");
            keys.push_back(it->first);
            good.push_back(-1);
        }
        return it->second;
    }

    // Successor on letter d; nullopt when some comparison becomes Greater.
    std::optional<std::pair<Key, bool>> step(const Key& k, Digit d) const {
        Key s(6 * words, 0), o(6 * words, 0);
        bool observed_alive = false;
        for (int j = 0; j < 3; ++j) {
            const Bit b = channel_bit(d, j);
            for (std::size_t off = 0; off < width; ++off) {
                if (!test(k, j, off)) continue;
                Bit dd = delta[off];
                if (b > dd) return std::nullopt;
                if (b < dd) continue;
                std::size_t next = delta.reduce(off + 1);
                put(s, j, next);
                if (test(k, 3 + j, off)) {
                    put(o, 3 + j, next);
                    observed_alive = true;
                }
            }
            if (b == 0) put(s, j, 0);
        }
        const bool breakpoint = !observed_alive;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t w = 0; w < words; ++w)
                s[(3 + j) * words + w] = breakpoint ? s[j * words + w] : o[(3 + j) * words + w];
        return std::make_pair(std::move(s), breakpoint);
    }

    // Decide every undecided node reachable from root (iterative Tarjan).
    void solve(int root) {
        struct Frame {
            int v;
            std::vector<std::pair<int, bool>> edges;
            std::size_t next = 0;
        };
        std::unordered_map<int, int> index, low;
        std::unordered_map<int, std::vector<std::pair<int, bool>>> adj;
        std::vector<int> stack;
        std::unordered_map<int, bool> on_stack;
        std::vector<Frame> frames;
        int counter = 0;

        auto open = [&](int v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = true;
            Frame f{v, {}, 0};
            for (Digit d : kDigits) {
                if (auto nxt = step(keys[v], d)) f.edges.emplace_back(intern(std::move(nxt->first)), nxt->second);
            }
            adj[v] = f.edges;
            frames.push_back(std::move(f));
        };

        open(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < f.edges.size()) {
                int w = f.edges[f.next++].first;
                if (good[w] >= 0) continue;
                if (!index.count(w)) {
                    open(w);
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] != index[v]) continue;
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            // Members are marked so membership can be tested by the sentinel value.
            for (int u : comp) good[u] = 2;
            bool ok = false;
            for (int u : comp) {
                for (auto [x, acc] : adj[u]) {
                    if (good[x] == 2) {
                        if (acc) ok = true;
                    } else if (good[x] == 1) {
                        ok = true;
                    }
                }
            }
            for (int u : comp) good[u] = ok ? 1 : 0;
        }
    }
};

OmegaOracle::OmegaOracle(const EventuallyPeriodicBinary& delta, std::size_t node_cap)
    : impl_(std::make_unique<Impl>(delta, node_cap)) {}
OmegaOracle::~OmegaOracle() = default;
OmegaOracle::OmegaOracle(OmegaOracle&&) noexcept = default;
OmegaOracle& OmegaOracle::operator=(OmegaOracle&&) noexcept = default;

std::size_t OmegaOracle::nodes() const { return impl_->keys.size(); }

bool OmegaOracle::extendable(const CheckerState& s) {
    Impl& m = *impl_;
    Key k(6 * m.words, 0);
    for (int j = 0; j < 3; ++j) {
        for (std::size_t off = 0; off < m.width; ++off) {
            if (!s.live[j].test(off)) continue;
            m.put(k, j, off);
            m.put(k, 3 + j, off);
        }
    }
    int id = m.intern(std::move(k));
    if (m.good[id] < 0) m.solve(id);
    return m.good[id] == 1;
}

}  // namespace gasket
