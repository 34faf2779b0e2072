#pragma once

#include <memory>
#include <optional>

#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

/// True for engines that can start from an arbitrary window.
bool accepts_seed(Engine e) noexcept;

/// Opens a stream for the chosen engine. `seed` is only accepted by
/// successor-rule engines (see accepts_seed); it defaults to 0^n.
std::unique_ptr<SymbolStream> open_stream(Engine engine, const ParamSet& p,
                                          const std::optional<Word>& seed = std::nullopt,
                                          Instrumentation* counters = nullptr);

UCycle generate(Engine engine, const ParamSet& p, const std::optional<Word>& seed = std::nullopt,
                Instrumentation* counters = nullptr);

}  // namespace bwdb
