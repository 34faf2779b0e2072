#include "bwdb/engines.hpp"

#include <stdexcept>

#include "bwdb/cyclejoin.hpp"
#include "bwdb/grandmama.hpp"
#include "bwdb/msr.hpp"

namespace bwdb {

namespace {

class VectorStream final : public SymbolStream {
public:
    explicit VectorStream(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    std::optional<Symbol> next() override {
        if (pos_ == symbols_.size()) return std::nullopt;
        return symbols_[pos_++];
    }
    std::uint64_t length() const noexcept override { return symbols_.size(); }

private:
    std::vector<Symbol> symbols_;
    std::size_t pos_ = 0;
};

// Rotates a materialized cycle so that it starts at `seed`.
std::vector<Symbol> rotate_to(const UCycle& cycle, const Word& seed) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle.window(i) == seed) {
            std::vector<Symbol> out(cycle.symbols.begin() + static_cast<std::ptrdiff_t>(i),
                                    cycle.symbols.end());
            out.insert(out.end(), cycle.symbols.begin(),
                       cycle.symbols.begin() + static_cast<std::ptrdiff_t>(i));
            return out;
        }
    }
    throw std::invalid_argument("seed window " + seed.str() + " does not occur in the cycle");
}

}  // namespace

bool accepts_seed(Engine e) noexcept {
    return e == Engine::successor_h1 || e == Engine::msr || e == Engine::generic;
}

std::unique_ptr<SymbolStream> open_stream(Engine engine, const ParamSet& p,
                                          const std::optional<Word>& seed,
                                          Instrumentation* counters) {
    p.validate();
    if (seed && !accepts_seed(engine)) {
        throw std::invalid_argument("engine " + std::string(to_string(engine)) +
                                    " does not accept a seed window");
    }
    switch (engine) {
        case Engine::concat: return std::make_unique<ConcatStream>(p, counters);
        case Engine::successor_h1:
            return std::make_unique<SuccessorStream>(p, seed ? *seed : Word::zeros(p.n, p.t),
                                                     counters);
        case Engine::msr: return std::make_unique<MsrStream>(p, seed, counters);
        case Engine::reverse_colex:
            return std::make_unique<VectorStream>(generate_reverse_colex(p).symbols);
        case Engine::generic: {
            const UCycle cycle = generate_generic(build_tree(FeedbackKind::pcr, p));
            if (!seed) return std::make_unique<VectorStream>(cycle.symbols);
            if (!p.contains(seed->symbols()) || seed->alphabet() != p.t) {
                throw std::invalid_argument("seed window " + seed->str() +
                                            " is not in Sigma_t(n,w)");
            }
            return std::make_unique<VectorStream>(rotate_to(cycle, *seed));
        }
    }
    throw std::invalid_argument("unknown engine");
}

UCycle generate(Engine engine, const ParamSet& p, const std::optional<Word>& seed,
                Instrumentation* counters) {
    auto stream = open_stream(engine, p, seed, counters);
    return UCycle{drain(*stream), p, engine};
}

}  // namespace bwdb
