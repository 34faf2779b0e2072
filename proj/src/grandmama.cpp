#include "bwdb/grandmama.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwdb {

ConcatStream::ConcatStream(const ParamSet& p, Instrumentation* counters)
    : params_(p), w_eff_(p.effective_w()), length_(p.bounded_word_count()), counters_(counters),
      word_(p.n, 0), capacity_(static_cast<std::size_t>(p.effective_w()) + 1) {
    stack_.reserve(capacity_);
}

std::size_t ConcatStream::test(std::span<const Symbol> w) {
    if (!counters_) return necklace_period(w);
    ++counters_->necklace_tests;
    return necklace_period(w, &counters_->comparisons);
}

void ConcatStream::expand(Frame& f) {
    f.next_child = f.change;
    f.change_child = false;
    if (f.weight == w_eff_) return;

    const std::size_t c = f.change;
    const Symbol t = params_.t;
    ++word_[c];
    if (word_[c] < t && test(word_) == 0) {
        --word_[c];
        return;
    }
    --word_[c];

    // scan left from c-1 until a non-necklace or the front
    std::size_t first = c;
    while (first > 0) {
        word_[first - 1] = 1;
        const bool ok = test(word_) != 0;
        word_[first - 1] = 0;
        if (!ok) break;
        --first;
    }
    f.next_child = first;
    f.change_child = word_[c] + 1 < t;
}

bool ConcatStream::next_necklace() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        stack_.push_back({params_.n - 1, 0, 0, false});
        period_ = 1;
        expand(stack_.back());
        if (counters_) counters_->max_stack_depth = std::max(counters_->max_stack_depth, stack_.size());
        return true;
    }
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        std::size_t child;
        if (top.next_child < top.change) {
            child = top.next_child++;
        } else if (top.change_child) {
            top.change_child = false;
            child = top.change;
        } else {
            const std::size_t change = top.change;
            stack_.pop_back();
            if (!stack_.empty()) --word_[change];
            continue;
        }
        ++word_[child];
        const std::uint64_t weight = top.weight + 1;
        if (stack_.size() == capacity_) throw std::logic_error("RCL stack exceeded its capacity");
        period_ = test(word_);
        stack_.push_back({child, weight, 0, false});
        expand(stack_.back());
        if (counters_) counters_->max_stack_depth = std::max(counters_->max_stack_depth, stack_.size());
        return true;
    }
    done_ = true;
    return false;
}

std::optional<Symbol> ConcatStream::next() {
    if (!started_ || emit_pos_ == period_) {
        if (!next_necklace()) return std::nullopt;
        emit_pos_ = 0;
    }
    return word_[emit_pos_++];
}

UCycle generate_concat(const ParamSet& p, Instrumentation* counters) {
    p.validate();
    ConcatStream stream(p, counters);
    UCycle out{{}, p, Engine::concat};
    out.symbols.reserve(stream.length());
    while (auto s = stream.next()) out.symbols.push_back(*s);
    return out;
}

namespace {

void note_tests(Instrumentation* counters, std::uint64_t tests) {
    if (!counters) return;
    ++counters->successor_calls;
    counters->max_tests_per_call = std::max(counters->max_tests_per_call, tests);
}

}  // namespace

Symbol successor_h1(const ParamSet& p, std::span<const Symbol> alpha, Instrumentation* counters) {
    if (!p.contains(alpha)) {
        throw std::invalid_argument("successor_h1: " + render(alpha, " ") +
                                    " is not in Sigma_t(n,w)");
    }
    const std::size_t n = p.n;
    // j: 1-based largest index in 2..n with a_j != 0, else 1
    std::size_t j = 1;
    for (std::size_t i = n; i >= 2; --i) {
        if (alpha[i - 1] != 0) {
            j = i;
            break;
        }
    }
    const std::uint64_t rest = weight(alpha.subspan(1));
    std::uint64_t tests = 0;
    long x = -1;
    if (rest < p.w && p.t > 1) {
        const std::uint64_t x_max = std::min<std::uint64_t>(p.t - 1, p.w - rest);
        // candidate 0^{n-j} x a_2..a_j
        std::vector<Symbol> cand(n, 0);
        std::copy(alpha.begin() + 1, alpha.begin() + static_cast<std::ptrdiff_t>(j),
                  cand.begin() + static_cast<std::ptrdiff_t>(n - j + 1));
        for (std::uint64_t v = x_max; v >= 1; --v) {
            cand[n - j] = static_cast<Symbol>(v);
            ++tests;
            const std::size_t period =
                counters ? necklace_period(cand, &counters->comparisons) : necklace_period(cand);
            if (period != 0) {
                x = static_cast<long>(v);
                break;
            }
        }
    }
    if (counters) counters->necklace_tests += tests;
    note_tests(counters, tests);

    const long a1 = alpha[0];
    if (x != -1 && a1 == x) return 0;
    if (x != -1 && a1 < x) return static_cast<Symbol>(a1 + 1);
    return alpha[0];
}

SuccessorStream::SuccessorStream(const ParamSet& p, const Word& start, Instrumentation* counters)
    : params_(p), length_(p.bounded_word_count()), counters_(counters), window_(start.vec()) {
    if (start.alphabet() != p.t || !p.contains(start.symbols())) {
        throw std::invalid_argument("start window " + start.str() + " is not in Sigma_t(n,w)");
    }
}

std::optional<Symbol> SuccessorStream::next() {
    if (emitted_ >= length_) return std::nullopt;
    if (emitted_ < params_.n) return window_[emitted_++];
    const Symbol s = successor_h1(params_, window_, counters_);
    std::shift_left(window_.begin(), window_.end(), 1);
    window_.back() = s;
    ++emitted_;
    return s;
}

UCycle generate_by_successor(const ParamSet& p, const Word& start, std::uint64_t steps,
                             Instrumentation* counters) {
    p.validate();
    if (start.alphabet() != p.t || !p.contains(start.symbols())) {
        throw std::invalid_argument("start window " + start.str() + " is not in Sigma_t(n,w)");
    }
    UCycle out{start.vec(), p, Engine::successor_h1};
    out.symbols.reserve(p.n + steps);
    std::vector<Symbol> window = start.vec();
    for (std::uint64_t i = 0; i < steps; ++i) {
        const Symbol s = successor_h1(p, window, counters);
        std::shift_left(window.begin(), window.end(), 1);
        window.back() = s;
        out.symbols.push_back(s);
    }
    return out;
}

UCycle successor_cycle(const ParamSet& p, const std::optional<Word>& start,
                       Instrumentation* counters) {
    p.validate();
    SuccessorStream stream(p, start ? *start : Word::zeros(p.n, p.t), counters);
    UCycle out{{}, p, Engine::successor_h1};
    out.symbols.reserve(stream.length());
    while (auto s = stream.next()) out.symbols.push_back(*s);
    return out;
}

}  // namespace bwdb
