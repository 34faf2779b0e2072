// Digit-string primitives shared by every sequence engine.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bwdb {

using Symbol = std::uint32_t;

/// Default ceiling on anything enumerated by brute force (trees, universes).
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Immutable fixed-length string over the alphabet {0, ..., alphabet-1}.
class Word {
public:
    Word(std::vector<Symbol> symbols, Symbol alphabet);
    Word(std::initializer_list<Symbol> symbols, Symbol alphabet)
        : Word(std::vector<Symbol>(symbols), alphabet) {}

    /// Parses a digit string such as "0213"; only valid for alphabets up to 10.
    static Word parse(std::string_view digits, Symbol alphabet);
    static Word zeros(std::size_t length, Symbol alphabet);

    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol alphabet() const noexcept { return alphabet_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }

    /// Digits when every symbol is below 10, otherwise '.'-separated integers.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
    Symbol alphabet_;
};

/// Alphabet size t, word length n and weight bound w.
struct ParamSet {
    Symbol t = 1;
    std::size_t n = 1;
    std::uint64_t w = 0;

    /// Throws std::invalid_argument unless t >= 1 and n >= 1.
    void validate() const;
    /// Largest reachable weight, min(w, n(t-1)).
    std::uint64_t effective_w() const noexcept;
    bool clamped() const noexcept { return effective_w() != w; }
    /// |Sigma_t(n,w)|; throws std::overflow_error past 2^64-1.
    std::uint64_t bounded_word_count() const;
    /// True iff the word has length n, alphabet t and weight <= w.
    bool contains(std::span<const Symbol> word) const noexcept;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

struct NecklaceInfo {
    bool is_necklace = false;
    /// Length of the aperiodic prefix; set only for necklaces.
    std::optional<std::size_t> aperiodic_prefix_len;
};

std::uint64_t weight(std::span<const Symbol> word) noexcept;
inline std::uint64_t weight(const Word& word) noexcept { return weight(word.symbols()); }

/// Strict colex order: lexicographic comparison of the reversed strings.
bool colex_less(std::span<const Symbol> a, std::span<const Symbol> b);
bool colex_less(const Word& a, const Word& b);

/// Single-pass necklace test. Returns the aperiodic prefix length for a
/// necklace and 0 otherwise. When `comparisons` is non-null it is increased
/// by the number of symbol comparisons performed.
std::size_t necklace_period(std::span<const Symbol> word,
                            std::uint64_t* comparisons = nullptr) noexcept;

NecklaceInfo necklace_info(std::span<const Symbol> word);
inline NecklaceInfo necklace_info(const Word& word) { return necklace_info(word.symbols()); }

/// Number of length-n words over {0..t-1} with weight exactly s, for s = 0..max_weight.
std::vector<std::uint64_t> weight_distribution(Symbol t, std::size_t n, std::uint64_t max_weight);

/// Calls `fn` for each length-n word over {0..t-1} with weight in [min_w, max_w],
/// in lexicographic order. The span is only valid during the call.
void for_each_word_in_weight_range(Symbol t, std::size_t n, std::uint64_t min_w,
                                   std::uint64_t max_w,
                                   const std::function<void(std::span<const Symbol>)>& fn);

/// Necklaces in N_t(n,w) sorted by colex_less. Brute-force filter; throws
/// std::length_error when |Sigma_t(n,w)| exceeds `cap`.
std::vector<Word> enumerate_bounded_necklaces(const ParamSet& p, std::uint64_t cap = kDefaultCap);

/// Necklaces of length n over {0..t-1} with weight exactly w, colex sorted.
std::vector<Word> enumerate_fixed_weight_necklaces(Symbol t, std::size_t n, std::uint64_t w,
                                                   std::uint64_t cap = kDefaultCap);

/// Renders symbols as digits (compact) or joined by `sep`.
std::string render(std::span<const Symbol> symbols, std::string_view sep = "");

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
    std::size_t operator()(std::span<const Symbol> s) const noexcept;
};

}  // namespace bwdb
