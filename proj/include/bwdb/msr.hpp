// V_t(n,w): the missing-symbol-register successor rule h2, the reverse-colex
// concatenation V'_t(n,w), and a comparator between the two.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

/// Sliding window plus its missing symbol z = w - weight(window).
struct MsrState {
    std::vector<Symbol> window;
    Symbol missing = 0;
};

/// First non-zero (MSR) successor rule. Requires w < t and alpha in
/// Sigma_t(n,w). Performs at most one necklace test.
Symbol successor_h2(const ParamSet& p, std::span<const Symbol> alpha,
                    Instrumentation* counters = nullptr);
inline Symbol successor_h2(const ParamSet& p, const Word& alpha,
                           Instrumentation* counters = nullptr) {
    return successor_h2(p, alpha.symbols(), counters);
}

/// h2 evaluated by trying every x from t-1 down; used to cross-check the
/// single-test shortcut.
Symbol successor_h2_exhaustive(const ParamSet& p, std::span<const Symbol> alpha);

class MsrStream final : public SymbolStream {
public:
    MsrStream(const ParamSet& p, const std::optional<Word>& start = std::nullopt,
              Instrumentation* counters = nullptr);

    std::optional<Symbol> next() override;
    std::uint64_t length() const noexcept override { return length_; }
    const MsrState& state() const noexcept { return state_; }

private:
    ParamSet params_;
    std::uint64_t length_;
    Instrumentation* counters_;
    MsrState state_;
    std::uint64_t emitted_ = 0;
};

/// V_t(n,w) from 0^n (or `start`). Throws std::invalid_argument when w >= t.
UCycle generate_msr(const ParamSet& p, const std::optional<Word>& start = std::nullopt,
                    Instrumentation* counters = nullptr);

/// V'_t(n,w): aperiodic prefixes of the length-(n+1), weight-w necklaces in
/// reverse colex order. Enumerates necklaces by brute force.
UCycle generate_reverse_colex(const ParamSet& p, std::uint64_t cap = kDefaultCap);

struct ConjectureReport {
    bool equal = false;
    std::optional<std::uint64_t> first_divergence;
    std::uint64_t msr_length = 0;
    std::uint64_t reverse_colex_length = 0;
};

/// Compares V and V' symbol by symbol, both anchored at the 0^n window.
ConjectureReport check_conjecture(const ParamSet& p, std::uint64_t cap = kDefaultCap);

}  // namespace bwdb
