#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "bwdb/words.hpp"

namespace bwdb {

enum class Engine {
    concat,         // colex necklace concatenation (RCL traversal)
    successor_h1,   // first non-zero successor rule over the PCR tree
    msr,            // first non-zero successor rule over the MSR tree
    reverse_colex,  // reverse-colex concatenation of fixed-weight necklaces
    generic,        // chain-aware reference successor over a materialized tree
};

std::string_view to_string(Engine e) noexcept;

/// Work counters filled in by the engines when a pointer is supplied.
struct Instrumentation {
    std::uint64_t necklace_tests = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t successor_calls = 0;
    /// Largest number of necklace tests spent inside one successor call.
    std::uint64_t max_tests_per_call = 0;
    std::size_t max_stack_depth = 0;
};

/// A generated cyclic sequence together with the parameters that produced it.
struct UCycle {
    std::vector<Symbol> symbols;
    ParamSet params;
    Engine engine = Engine::concat;

    std::size_t size() const noexcept { return symbols.size(); }
    /// Cyclic window of length params.n starting at `position`.
    Word window(std::size_t position) const;
};

/// Pull-style producer of a finite symbol sequence.
class SymbolStream {
public:
    virtual ~SymbolStream() = default;
    /// Next symbol, or nullopt once the sequence is exhausted.
    virtual std::optional<Symbol> next() = 0;
    /// Total number of symbols the stream will produce.
    virtual std::uint64_t length() const noexcept = 0;
};

/// Drains a stream into a vector.
std::vector<Symbol> drain(SymbolStream& stream);

}  // namespace bwdb
