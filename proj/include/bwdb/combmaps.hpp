// String representations of k-subsets and k-multisets of [n] and the
// universal cycles built on them.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

enum class ObjectKind { subset, multiset };

/// A k-subset or k-multiset of {1..n}, elements sorted ascending.
struct CombObject {
    ObjectKind kind = ObjectKind::subset;
    unsigned n = 0;
    unsigned k = 0;
    std::vector<unsigned> elements;

    static CombObject subset(unsigned n, std::vector<unsigned> elements);
    static CombObject multiset(unsigned n, std::vector<unsigned> elements);

    /// Throws std::invalid_argument if the elements do not form a valid object.
    void validate() const;

    friend bool operator==(const CombObject&, const CombObject&) = default;
};

enum class Scheme { subset_difference, multiset_frequency, multiset_difference };

std::string_view to_string(ObjectKind k) noexcept;
std::string_view to_string(Scheme s) noexcept;

// Subsets: first symbol is the smallest element, then successive gaps.
Word subset_to_diff(const CombObject& s);
CombObject diff_to_subset(const Word& word, unsigned n);

// Multisets: first n-1 entries of the frequency map.
Word multiset_to_freq(const CombObject& m);
CombObject freq_to_multiset(const Word& word, unsigned k);

// Multisets: gaps over the ground set {0..n-1}.
Word multiset_to_diff(const CombObject& m);
CombObject diff_to_multiset(const Word& word, unsigned n);

/// Bounded-weight parameters (t, length, w) whose words are the scheme's
/// representatives (after the x -> x-1 shift for subsets).
ParamSet underlying_params(Scheme scheme, unsigned n, unsigned k);

/// A universal cycle over representation strings.
struct CombCycle {
    Scheme scheme = Scheme::subset_difference;
    unsigned n = 0;
    unsigned k = 0;
    /// Bounded-weight cycle before any symbol shift.
    UCycle base;
    /// Representation symbols (base shifted by +1 for subsets).
    std::vector<Symbol> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    std::size_t window_length() const noexcept { return base.params.n; }
    /// Cyclic window of representation symbols.
    Word window(std::size_t position) const;
};

/// Relaxes the n, k >= 2 requirement on multiset cycles to k >= 1.
struct MultisetBounds {
    bool allow_small = false;
};

/// Checks the object bounds and returns the underlying bounded-weight parameters.
ParamSet scheme_params(Scheme scheme, unsigned n, unsigned k, MultisetBounds bounds = {});

/// Builds the cycle for any scheme. `seed` is a start window in representation
/// symbols and is only accepted by successor-rule engines.
CombCycle ucycle_objects(Scheme scheme, unsigned n, unsigned k, Engine engine,
                         const std::optional<Word>& seed = std::nullopt,
                         MultisetBounds bounds = {});

CombCycle ucycle_subsets(unsigned n, unsigned k, Engine engine);
CombCycle ucycle_multisets_freq(unsigned n, unsigned k, Engine engine, MultisetBounds bounds = {});
CombCycle ucycle_multisets_diff(unsigned n, unsigned k, Engine engine, MultisetBounds bounds = {});

/// Wraps an already generated base cycle; its parameters must match the scheme.
CombCycle wrap_cycle(Scheme scheme, unsigned n, unsigned k, UCycle base);

/// Decodes the cyclic window at `position` into its subset or multiset.
CombObject decode_window(const CombCycle& cycle, std::size_t position);

/// Appends the missing symbol w - weight to every cyclic window of U or V,
/// giving length-(n+1) words of weight exactly w. For w == t the 0^n window
/// is first shortened to 0^(n-1). Throws std::invalid_argument when w > t.
std::vector<Word> fixed_weight_expand(const UCycle& cycle);

/// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace bwdb
