#include "bwdb/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bwdb {

Word::Word(std::vector<Symbol> symbols, Symbol alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    if (alphabet_ == 0) throw std::invalid_argument("word alphabet must be at least 1");
    if (symbols_.empty()) throw std::invalid_argument("word must have length at least 1");
    for (Symbol s : symbols_) {
        if (s >= alphabet_) {
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " outside alphabet of size " + std::to_string(alphabet_));
        }
    }
}

Word Word::parse(std::string_view digits, Symbol alphabet) {
    std::vector<Symbol> out;
    out.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-digit in word literal");
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(out), alphabet);
}

Word Word::zeros(std::size_t length, Symbol alphabet) {
    return Word(std::vector<Symbol>(length, 0), alphabet);
}

std::string Word::str() const { return render(symbols_, alphabet_ <= 10 ? "" : "."); }

void ParamSet::validate() const {
    if (t < 1) throw std::invalid_argument("alphabet size t must be >= 1");
    if (n < 1) throw std::invalid_argument("word length n must be >= 1");
}

std::uint64_t ParamSet::effective_w() const noexcept {
    const std::uint64_t max_weight = static_cast<std::uint64_t>(n) * (t - 1);
    return std::min(w, max_weight);
}

std::uint64_t ParamSet::bounded_word_count() const {
    validate();
    const auto dist = weight_distribution(t, n, effective_w());
    std::uint64_t total = 0;
    for (auto c : dist) {
        if (c > std::numeric_limits<std::uint64_t>::max() - total) {
            throw std::overflow_error("|Sigma_t(n,w)| does not fit in 64 bits");
        }
        total += c;
    }
    return total;
}

bool ParamSet::contains(std::span<const Symbol> word) const noexcept {
    if (word.size() != n) return false;
    for (Symbol s : word)
        if (s >= t) return false;
    return weight(word) <= w;
}

std::uint64_t weight(std::span<const Symbol> word) noexcept {
    std::uint64_t sum = 0;
    for (Symbol s : word) sum += s;
    return sum;
}

bool colex_less(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size()) throw std::invalid_argument("colex_less: length mismatch");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool colex_less(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) throw std::invalid_argument("colex_less: alphabet mismatch");
    return colex_less(a.symbols(), b.symbols());
}

std::size_t necklace_period(std::span<const Symbol> a, std::uint64_t* comparisons) noexcept {
    const std::size_t len = a.size();
    if (len == 0) return 0;
    std::size_t p = 1;
    std::uint64_t compared = 0;
    std::size_t result = 0;
    bool prenecklace = true;
    for (std::size_t i = 1; i < len; ++i) {
        ++compared;
        if (a[i] < a[i - p]) {
            prenecklace = false;
            break;
        }
        if (a[i] > a[i - p]) p = i + 1;
    }
    if (prenecklace && len % p == 0) result = p;
    if (comparisons) *comparisons += compared;
    return result;
}

NecklaceInfo necklace_info(std::span<const Symbol> word) {
    const std::size_t p = necklace_period(word);
    if (p == 0) return {};
    return {true, p};
}

std::vector<std::uint64_t> weight_distribution(Symbol t, std::size_t n, std::uint64_t max_weight) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(max_weight + 1, 0);
    dist[0] = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<std::uint64_t> next(max_weight + 1, 0);
        for (std::uint64_t s = 0; s <= max_weight; ++s) {
            if (dist[s] == 0) continue;
            for (std::uint64_t x = 0; x < t && s + x <= max_weight; ++x) {
                if (dist[s] > kMax - next[s + x]) {
                    throw std::overflow_error("word count does not fit in 64 bits");
                }
                next[s + x] += dist[s];
            }
        }
        dist = std::move(next);
    }
    return dist;
}

void for_each_word_in_weight_range(Symbol t, std::size_t n, std::uint64_t min_w,
                                   std::uint64_t max_w,
                                   const std::function<void(std::span<const Symbol>)>& fn) {
    if (n == 0 || t == 0) return;
    std::vector<Symbol> word(n, 0);
    const std::uint64_t per_pos = t - 1;
    auto recurse = [&](auto&& self, std::size_t pos, std::uint64_t used) -> void {
        if (pos == n) {
            if (used >= min_w) fn(word);
            return;
        }
        const std::uint64_t room_after = per_pos * (n - pos - 1);
        for (Symbol x = 0; x < t && used + x <= max_w; ++x) {
            if (used + x + room_after < min_w) continue;
            word[pos] = x;
            self(self, pos + 1, used + x);
        }
        word[pos] = 0;
    };
    recurse(recurse, 0, 0);
}

namespace {

std::vector<Word> collect_necklaces(Symbol t, std::size_t n, std::uint64_t min_w,
                                    std::uint64_t max_w) {
    std::vector<Word> out;
    for_each_word_in_weight_range(t, n, min_w, max_w, [&](std::span<const Symbol> w) {
        if (necklace_period(w) != 0) out.emplace_back(std::vector<Symbol>(w.begin(), w.end()), t);
    });
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return colex_less(a.symbols(), b.symbols()); });
    return out;
}

}  // namespace

std::vector<Word> enumerate_bounded_necklaces(const ParamSet& p, std::uint64_t cap) {
    p.validate();
    if (p.bounded_word_count() > cap) {
        throw std::length_error("necklace enumeration exceeds cap of " + std::to_string(cap) +
                                " words");
    }
    return collect_necklaces(p.t, p.n, 0, p.effective_w());
}

std::vector<Word> enumerate_fixed_weight_necklaces(Symbol t, std::size_t n, std::uint64_t w,
                                                   std::uint64_t cap) {
    ParamSet{t, n, w}.validate();
    if (w > static_cast<std::uint64_t>(n) * (t - 1)) return {};
    const auto dist = weight_distribution(t, n, w);
    if (dist[w] > cap) {
        throw std::length_error("necklace enumeration exceeds cap of " + std::to_string(cap) +
                                " words");
    }
    return collect_necklaces(t, n, w, w);
}

std::string render(std::span<const Symbol> symbols, std::string_view sep) {
    std::string out;
    bool first = true;
    for (Symbol s : symbols) {
        if (!first) out += sep;
        first = false;
        out += std::to_string(s);
    }
    return out;
}

std::size_t WordHash::operator()(std::span<const Symbol> s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Symbol x : s) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t WordHash::operator()(const Word& w) const noexcept { return (*this)(w.symbols()); }

}  // namespace bwdb
