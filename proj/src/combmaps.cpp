#include "bwdb/combmaps.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "bwdb/engines.hpp"

namespace bwdb {

std::string_view to_string(ObjectKind k) noexcept {
    return k == ObjectKind::subset ? "subset" : "multiset";
}

std::string_view to_string(Scheme s) noexcept {
    switch (s) {
        case Scheme::subset_difference: return "subset_difference";
        case Scheme::multiset_frequency: return "multiset_shorthand_frequency";
        case Scheme::multiset_difference: return "multiset_difference";
    }
    return "unknown";
}

CombObject CombObject::subset(unsigned n, std::vector<unsigned> elements) {
    CombObject o{ObjectKind::subset, n, static_cast<unsigned>(elements.size()), std::move(elements)};
    o.validate();
    return o;
}

CombObject CombObject::multiset(unsigned n, std::vector<unsigned> elements) {
    CombObject o{ObjectKind::multiset, n, static_cast<unsigned>(elements.size()),
                 std::move(elements)};
    o.validate();
    return o;
}

void CombObject::validate() const {
    if (elements.size() != k) throw std::invalid_argument("element count differs from k");
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (kind == ObjectKind::subset && k > n) throw std::invalid_argument("subset needs k <= n");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const unsigned e = elements[i];
        if (e < 1 || e > n) {
            throw std::invalid_argument("element " + std::to_string(e) + " outside [1.." +
                                        std::to_string(n) + "]");
        }
        if (i == 0) continue;
        const bool ordered = kind == ObjectKind::subset ? elements[i - 1] < e : elements[i - 1] <= e;
        if (!ordered) throw std::invalid_argument("elements must be sorted (and distinct for subsets)");
    }
}

namespace {

std::vector<unsigned> gaps(const std::vector<unsigned>& sorted, unsigned first) {
    std::vector<unsigned> out{first};
    for (std::size_t i = 1; i < sorted.size(); ++i) out.push_back(sorted[i] - sorted[i - 1]);
    return out;
}

std::vector<unsigned> partial_sums(std::span<const Symbol> word) {
    std::vector<unsigned> out;
    std::uint64_t sum = 0;
    for (Symbol s : word) {
        sum += s;
        if (sum > std::numeric_limits<unsigned>::max()) throw std::invalid_argument("partial sum overflow");
        out.push_back(static_cast<unsigned>(sum));
    }
    return out;
}

Word to_word(const std::vector<unsigned>& v, Symbol alphabet) {
    return Word(std::vector<Symbol>(v.begin(), v.end()), alphabet);
}

}  // namespace

Word subset_to_diff(const CombObject& s) {
    if (s.kind != ObjectKind::subset) throw std::invalid_argument("expected a subset");
    s.validate();
    return to_word(gaps(s.elements, s.elements.front()), s.n - s.k + 2);
}

CombObject diff_to_subset(const Word& word, unsigned n) {
    for (Symbol x : word.symbols())
        if (x == 0) throw std::invalid_argument("difference symbols of a subset must be positive");
    auto elements = partial_sums(word.symbols());
    if (elements.back() > n) {
        throw std::invalid_argument("difference string " + word.str() + " sums past n=" +
                                    std::to_string(n));
    }
    return CombObject::subset(n, std::move(elements));
}

Word multiset_to_freq(const CombObject& m) {
    if (m.kind != ObjectKind::multiset) throw std::invalid_argument("expected a multiset");
    m.validate();
    if (m.n < 2) throw std::invalid_argument("shorthand frequency needs n >= 2");
    std::vector<unsigned> freq(m.n, 0);
    for (unsigned e : m.elements) ++freq[e - 1];
    freq.pop_back();
    return to_word(freq, m.k + 1);
}

CombObject freq_to_multiset(const Word& word, unsigned k) {
    const std::uint64_t total = weight(word);
    if (total > k) {
        throw std::invalid_argument("frequency string " + word.str() + " has weight above k=" +
                                    std::to_string(k));
    }
    const auto n = static_cast<unsigned>(word.size() + 1);
    std::vector<unsigned> elements;
    for (std::size_t i = 0; i < word.size(); ++i)
        elements.insert(elements.end(), word[i], static_cast<unsigned>(i + 1));
    elements.insert(elements.end(), k - total, n);
    return CombObject::multiset(n, std::move(elements));
}

Word multiset_to_diff(const CombObject& m) {
    if (m.kind != ObjectKind::multiset) throw std::invalid_argument("expected a multiset");
    m.validate();
    return to_word(gaps(m.elements, m.elements.front() - 1), m.n);
}

CombObject diff_to_multiset(const Word& word, unsigned n) {
    if (n < 1) throw std::invalid_argument("ground set needs n >= 1");
    auto elements = partial_sums(word.symbols());
    if (elements.back() > n - 1) {
        throw std::invalid_argument("difference string " + word.str() + " sums past n-1=" +
                                    std::to_string(n - 1));
    }
    for (auto& e : elements) ++e;
    return CombObject::multiset(n, std::move(elements));
}

ParamSet underlying_params(Scheme scheme, unsigned n, unsigned k) {
    switch (scheme) {
        case Scheme::subset_difference: return {n - k + 1, k, static_cast<std::uint64_t>(n - k)};
        case Scheme::multiset_frequency: return {k + 1, n - 1, k};
        case Scheme::multiset_difference: return {n, k, static_cast<std::uint64_t>(n - 1)};
    }
    throw std::invalid_argument("unknown scheme");
}

Word CombCycle::window(std::size_t position) const {
    if (position >= symbols.size()) throw std::out_of_range("window position past cycle end");
    const std::size_t len = window_length();
    std::vector<Symbol> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = symbols[(position + i) % symbols.size()];
    const Symbol alphabet = base.params.t + (scheme == Scheme::subset_difference ? 1 : 0);
    return Word(std::move(out), alphabet);
}

CombCycle wrap_cycle(Scheme scheme, unsigned n, unsigned k, UCycle base) {
    if (!(base.params == underlying_params(scheme, n, k))) {
        throw std::invalid_argument("base cycle parameters do not match the representation");
    }
    CombCycle out{scheme, n, k, std::move(base), {}};
    out.symbols = out.base.symbols;
    if (scheme == Scheme::subset_difference) {
        for (auto& s : out.symbols) ++s;
    }
    return out;
}

namespace {

void check_multiset_bounds(unsigned n, unsigned k, unsigned min_n, MultisetBounds bounds) {
    if (bounds.allow_small) {
        if (k < 1 || n < min_n) {
            throw std::invalid_argument("multiset cycle needs k >= 1 and n >= " +
                                        std::to_string(min_n));
        }
        return;
    }
    if (n < 2 || k < 2) {
        throw std::invalid_argument("multiset cycle needs n >= 2 and k >= 2 (got n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
}

}  // namespace

ParamSet scheme_params(Scheme scheme, unsigned n, unsigned k, MultisetBounds bounds) {
    switch (scheme) {
        case Scheme::subset_difference:
            if (k < 1 || k > n) {
                throw std::invalid_argument("subset cycle needs 1 <= k <= n (got n=" +
                                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
            }
            break;
        case Scheme::multiset_frequency: check_multiset_bounds(n, k, 2, bounds); break;
        case Scheme::multiset_difference: check_multiset_bounds(n, k, 1, bounds); break;
    }
    return underlying_params(scheme, n, k);
}

CombCycle ucycle_objects(Scheme scheme, unsigned n, unsigned k, Engine engine,
                         const std::optional<Word>& seed, MultisetBounds bounds) {
    const ParamSet p = scheme_params(scheme, n, k, bounds);
    std::optional<Word> base_seed;
    if (seed) {
        if (scheme != Scheme::subset_difference) {
            base_seed = Word(seed->vec(), p.t);
        } else {
            std::vector<Symbol> shifted = seed->vec();
            for (auto& s : shifted) {
                if (s == 0) throw std::invalid_argument("subset seed symbols must be positive");
                --s;
            }
            base_seed = Word(std::move(shifted), p.t);
        }
    }
    return wrap_cycle(scheme, n, k, generate(engine, p, base_seed));
}

CombCycle ucycle_subsets(unsigned n, unsigned k, Engine engine) {
    return ucycle_objects(Scheme::subset_difference, n, k, engine);
}

CombCycle ucycle_multisets_freq(unsigned n, unsigned k, Engine engine, MultisetBounds bounds) {
    return ucycle_objects(Scheme::multiset_frequency, n, k, engine, std::nullopt, bounds);
}

CombCycle ucycle_multisets_diff(unsigned n, unsigned k, Engine engine, MultisetBounds bounds) {
    return ucycle_objects(Scheme::multiset_difference, n, k, engine, std::nullopt, bounds);
}

CombObject decode_window(const CombCycle& cycle, std::size_t position) {
    const Word w = cycle.window(position);
    switch (cycle.scheme) {
        case Scheme::subset_difference: return diff_to_subset(w, cycle.n);
        case Scheme::multiset_frequency: return freq_to_multiset(w, cycle.k);
        case Scheme::multiset_difference: return diff_to_multiset(w, cycle.n);
    }
    throw std::invalid_argument("unknown scheme");
}

std::vector<Word> fixed_weight_expand(const UCycle& cycle) {
    const ParamSet& p = cycle.params;
    if (p.w > p.t) {
        throw std::invalid_argument("fixed-weight expansion needs w <= t (got t=" +
                                    std::to_string(p.t) + ", w=" + std::to_string(p.w) + ")");
    }
    std::vector<Symbol> seq = cycle.symbols;
    if (p.w == p.t) {
        const Word zeros = Word::zeros(p.n, p.t);
        std::size_t at = seq.size();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (cycle.window(i) == zeros) {
                at = i;
                break;
            }
        }
        if (at == seq.size()) throw std::invalid_argument("cycle has no 0^n window");
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::vector<Word> out;
    out.reserve(seq.size());
    std::vector<Symbol> word(p.n + 1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint64_t wt = 0;
        for (std::size_t j = 0; j < p.n; ++j) {
            word[j] = seq[(i + j) % seq.size()];
            wt += word[j];
        }
        if (wt > p.w || p.w - wt >= p.t) {
            throw std::invalid_argument("window at " + std::to_string(i) +
                                        " has no missing symbol in the alphabet");
        }
        word[p.n] = static_cast<Symbol>(p.w - wt);
        out.emplace_back(word, p.t);
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace bwdb
