// Bounded-weight Grandmama sequence U_t(n,w): the RCL concatenation engine and
// the first non-zero successor rule h1.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

/// Streams U_t(n,w) by walking the first non-zero concatenation tree in RCL
/// order with an explicit stack. Children are discovered on the fly by
/// probing the change index first and then scanning left.
class ConcatStream final : public SymbolStream {
public:
    explicit ConcatStream(const ParamSet& p, Instrumentation* counters = nullptr);

    std::optional<Symbol> next() override;
    std::uint64_t length() const noexcept override { return length_; }

    /// Advances to the next necklace in colex order; returns false when done.
    /// The current necklace and its aperiodic prefix length are then
    /// available through necklace() and period().
    bool next_necklace();
    std::span<const Symbol> necklace() const noexcept { return word_; }
    std::size_t period() const noexcept { return period_; }

    /// Upper bound on the traversal stack: one frame per unit of weight plus the root.
    std::size_t stack_capacity() const noexcept { return capacity_; }

private:
    struct Frame {
        std::size_t change;  // 0-based change index
        std::uint64_t weight;
        std::size_t next_child;  // next left-scan child index to visit
        bool change_child;       // whether the change-index child is still pending
    };

    std::size_t test(std::span<const Symbol> w);
    void expand(Frame& f);

    ParamSet params_;
    std::uint64_t w_eff_;
    std::uint64_t length_;
    Instrumentation* counters_;
    std::vector<Symbol> word_;
    std::vector<Frame> stack_;
    std::size_t capacity_;
    std::size_t period_ = 0;
    std::size_t emit_pos_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// Emits U_t(n,w) into a UCycle.
UCycle generate_concat(const ParamSet& p, Instrumentation* counters = nullptr);

/// Calls `sink` once per symbol of U_t(n,w); returns the symbol count.
template <class Sink>
std::uint64_t generate_concat(const ParamSet& p, Sink&& sink, Instrumentation* counters = nullptr) {
    ConcatStream stream(p, counters);
    std::uint64_t count = 0;
    while (auto s = stream.next()) {
        sink(*s);
        ++count;
    }
    return count;
}

/// First non-zero (Grandmama) successor rule. Throws std::invalid_argument
/// unless alpha is in Sigma_t(n,w).
Symbol successor_h1(const ParamSet& p, std::span<const Symbol> alpha,
                    Instrumentation* counters = nullptr);
inline Symbol successor_h1(const ParamSet& p, const Word& alpha,
                           Instrumentation* counters = nullptr) {
    return successor_h1(p, alpha.symbols(), counters);
}

/// Streams the cycle produced by iterating h1 from `start`: the start window
/// followed by successor outputs, |Sigma_t(n,w)| symbols in total.
class SuccessorStream final : public SymbolStream {
public:
    SuccessorStream(const ParamSet& p, const Word& start, Instrumentation* counters = nullptr);

    std::optional<Symbol> next() override;
    std::uint64_t length() const noexcept override { return length_; }

private:
    ParamSet params_;
    std::uint64_t length_;
    Instrumentation* counters_;
    std::vector<Symbol> window_;
    std::uint64_t emitted_ = 0;
};

/// Start window followed by `steps` successive h1 outputs.
UCycle generate_by_successor(const ParamSet& p, const Word& start, std::uint64_t steps,
                             Instrumentation* counters = nullptr);

/// The full cycle from `start` (defaults to 0^n), |Sigma_t(n,w)| symbols.
UCycle successor_cycle(const ParamSet& p, const std::optional<Word>& start = std::nullopt,
                       Instrumentation* counters = nullptr);

}  // namespace bwdb
