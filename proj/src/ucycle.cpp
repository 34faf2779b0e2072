#include "bwdb/ucycle.hpp"

#include <stdexcept>

namespace bwdb {

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::concat: return "grandmama";
        case Engine::successor_h1: return "grandmama-successor";
        case Engine::msr: return "msr";
        case Engine::reverse_colex: return "reverse-colex";
        case Engine::generic: return "generic";
    }
    return "unknown";
}

Word UCycle::window(std::size_t position) const {
    if (symbols.empty()) throw std::out_of_range("window of an empty cycle");
    if (position >= symbols.size()) throw std::out_of_range("window position past cycle end");
    std::vector<Symbol> out(params.n);
    for (std::size_t i = 0; i < params.n; ++i) out[i] = symbols[(position + i) % symbols.size()];
    return Word(std::move(out), params.t);
}

std::vector<Symbol> drain(SymbolStream& stream) {
    std::vector<Symbol> out;
    out.reserve(stream.length());
    while (auto s = stream.next()) out.push_back(*s);
    return out;
}

}  // namespace bwdb
