#include "bwdb/msr.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bwdb {

namespace {

void require_msr_params(const ParamSet& p) {
    p.validate();
    if (p.w >= p.t) {
        throw std::invalid_argument("MSR engine requires w < t (got t=" + std::to_string(p.t) +
                                    ", w=" + std::to_string(p.w) + ")");
    }
}

void require_member(const ParamSet& p, std::span<const Symbol> alpha) {
    if (!p.contains(alpha)) {
        throw std::invalid_argument("successor_h2: " + render(alpha, " ") +
                                    " is not in Sigma_t(n,w)");
    }
}

// 1-based largest index j in 2..n with a_j != 0, or 1.
std::size_t last_nonzero_index(std::span<const Symbol> a) {
    for (std::size_t i = a.size(); i >= 2; --i)
        if (a[i - 1] != 0) return i;
    return 1;
}

// Fills 0^{n-j} x y a_2..a_j.
void fill_candidate(std::vector<Symbol>& beta, std::span<const Symbol> a, std::size_t j,
                    Symbol x, Symbol y) {
    const std::size_t n = a.size();
    beta.assign(n + 1, 0);
    beta[n - j] = x;
    beta[n - j + 1] = y;
    std::copy(a.begin() + 1, a.begin() + static_cast<std::ptrdiff_t>(j),
              beta.begin() + static_cast<std::ptrdiff_t>(n - j + 2));
}

Symbol apply_rule(long x, Symbol z) {
    if (x != -1 && static_cast<long>(z) == x) return 0;
    if (x != -1 && static_cast<long>(z) < x) return z + 1;
    return z;
}

Symbol h2_core(const ParamSet& p, std::span<const Symbol> a, Symbol z,
               Instrumentation* counters) {
    const std::size_t n = a.size();
    const std::size_t j = last_nonzero_index(a);
    const std::size_t run_needed = n - j;

    // smallest symbol that follows a run of n-j zeros inside a_2..a_j
    Symbol x_prime = p.t - 1;
    std::size_t run = 0;
    for (std::size_t i = 1; i < j; ++i) {
        if (run >= run_needed) x_prime = std::min(x_prime, a[i]);
        run = a[i] == 0 ? run + 1 : 0;
    }

    const std::uint64_t budget = static_cast<std::uint64_t>(a[0]) + z;
    long x = static_cast<long>(std::min<std::uint64_t>(x_prime, budget));
    // With no leading zeros in beta, x also has to satisfy x <= y. After that
    // cap a single decrement makes x the strict minimum of beta.
    if (run_needed == 0) x = std::min<long>(x, static_cast<long>(budget / 2));
    std::uint64_t tests = 0;
    if (n == 1) {
        // beta = x y with x <= y is always a necklace
    } else if (x > 0) {
        std::vector<Symbol> beta;
        fill_candidate(beta, a, j, static_cast<Symbol>(x),
                       static_cast<Symbol>(budget - static_cast<std::uint64_t>(x)));
        ++tests;
        const std::size_t period =
            counters ? necklace_period(beta, &counters->comparisons) : necklace_period(beta);
        if (period == 0) --x;
    }
    if (x == 0) x = -1;
    if (counters) {
        counters->necklace_tests += tests;
        ++counters->successor_calls;
        counters->max_tests_per_call = std::max(counters->max_tests_per_call, tests);
    }
    return apply_rule(x, z);
}

}  // namespace

Symbol successor_h2(const ParamSet& p, std::span<const Symbol> alpha, Instrumentation* counters) {
    require_msr_params(p);
    require_member(p, alpha);
    const auto z = static_cast<Symbol>(p.w - weight(alpha));
    return h2_core(p, alpha, z, counters);
}

Symbol successor_h2_exhaustive(const ParamSet& p, std::span<const Symbol> alpha) {
    require_msr_params(p);
    require_member(p, alpha);
    const auto z = static_cast<Symbol>(p.w - weight(alpha));
    const std::size_t j = last_nonzero_index(alpha);
    const std::uint64_t budget = static_cast<std::uint64_t>(alpha[0]) + z;
    long x = -1;
    std::vector<Symbol> beta;
    for (std::uint64_t v = std::min<std::uint64_t>(p.t - 1, budget); v >= 1; --v) {
        fill_candidate(beta, alpha, j, static_cast<Symbol>(v), static_cast<Symbol>(budget - v));
        if (necklace_period(beta) != 0) {
            x = static_cast<long>(v);
            break;
        }
    }
    return apply_rule(x, z);
}

MsrStream::MsrStream(const ParamSet& p, const std::optional<Word>& start,
                     Instrumentation* counters)
    : params_(p), counters_(counters) {
    require_msr_params(p);
    length_ = p.bounded_word_count();
    state_.window = start ? start->vec() : std::vector<Symbol>(p.n, 0);
    if ((start && start->alphabet() != p.t) || !p.contains(state_.window)) {
        throw std::invalid_argument("start window " + render(state_.window, " ") +
                                    " is not in Sigma_t(n,w)");
    }
    state_.missing = static_cast<Symbol>(p.w - weight(state_.window));
}

std::optional<Symbol> MsrStream::next() {
    if (emitted_ >= length_) return std::nullopt;
    if (emitted_ < params_.n) return state_.window[emitted_++];
    const Symbol s = h2_core(params_, state_.window, state_.missing, counters_);
    const Symbol outgoing = state_.window.front();
    std::shift_left(state_.window.begin(), state_.window.end(), 1);
    state_.window.back() = s;
    // z' = w - (weight - outgoing + s)
    state_.missing = state_.missing + outgoing - s;
    ++emitted_;
    assert((emitted_ & 0xfff) != 0 || state_.missing == params_.w - weight(state_.window));
    return s;
}

UCycle generate_msr(const ParamSet& p, const std::optional<Word>& start,
                    Instrumentation* counters) {
    MsrStream stream(p, start, counters);
    UCycle out{{}, p, Engine::msr};
    out.symbols.reserve(stream.length());
    while (auto s = stream.next()) out.symbols.push_back(*s);
    return out;
}

UCycle generate_reverse_colex(const ParamSet& p, std::uint64_t cap) {
    require_msr_params(p);
    auto necklaces = enumerate_fixed_weight_necklaces(p.t, p.n + 1, p.w, cap);
    UCycle out{{}, p, Engine::reverse_colex};
    for (auto it = necklaces.rbegin(); it != necklaces.rend(); ++it) {
        const auto s = it->symbols();
        const std::size_t period = necklace_period(s);
        out.symbols.insert(out.symbols.end(), s.begin(),
                           s.begin() + static_cast<std::ptrdiff_t>(period));
    }
    return out;
}

ConjectureReport check_conjecture(const ParamSet& p, std::uint64_t cap) {
    const UCycle v = generate_msr(p);
    const UCycle v_prime = generate_reverse_colex(p, cap);
    ConjectureReport report;
    report.msr_length = v.size();
    report.reverse_colex_length = v_prime.size();
    const auto [a, b] = std::mismatch(v.symbols.begin(), v.symbols.end(), v_prime.symbols.begin(),
                                      v_prime.symbols.end());
    if (a == v.symbols.end() && b == v_prime.symbols.end()) {
        report.equal = true;
    } else {
        report.first_divergence = static_cast<std::uint64_t>(a - v.symbols.begin());
    }
    return report;
}

}  // namespace bwdb
