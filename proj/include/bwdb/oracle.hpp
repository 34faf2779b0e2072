// Brute-force verifiers. Nothing here calls the sequence engines.

#pragma once

#include <cstdint>
#include <vector>

#include "bwdb/combmaps.hpp"
#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

enum class UniverseKind { bounded_words, fixed_weight_words, subsets, multisets };

/// Describes a finite universe. Word universes use (t, length, w); object
/// universes use (n, k).
struct Universe {
    UniverseKind kind = UniverseKind::bounded_words;
    unsigned t = 0;
    unsigned length = 0;
    std::uint64_t w = 0;
    unsigned n = 0;
    unsigned k = 0;

    static Universe bounded_words(unsigned t, unsigned length, std::uint64_t w);
    static Universe fixed_weight_words(unsigned t, unsigned length, std::uint64_t w);
    static Universe subsets(unsigned n, unsigned k);
    static Universe multisets(unsigned n, unsigned k);

    /// Closed-form member count.
    std::uint64_t count() const;
};

/// A universe member: a word's symbols or an object's sorted elements.
using Member = std::vector<std::uint32_t>;

struct VerifyOptions {
    std::uint64_t cap = kDefaultCap;
    /// Maximum entries kept in `missing`/`duplicated`; 0 keeps all.
    std::size_t list_limit = 20;
};

struct VerifyReport {
    bool ok = false;
    std::uint64_t expected_count = 0;
    std::uint64_t seen_count = 0;
    std::uint64_t missing_total = 0;
    std::uint64_t duplicated_total = 0;
    /// Members absent from the cycle (truncated).
    std::vector<Member> missing;
    /// Members seen more than once, or windows outside the universe (truncated).
    std::vector<Member> duplicated;
    std::uint64_t foreign_total = 0;
    std::vector<Member> foreign;
};

/// All members in a canonical order; throws std::length_error over `cap`.
std::vector<Member> enumerate_universe(const Universe& u, std::uint64_t cap = kDefaultCap);

/// Checks that `observed` is exactly the universe, as a multiset.
VerifyReport compare_to_universe(const std::vector<Member>& observed, const Universe& u,
                                 const VerifyOptions& opts = {});

/// Slides a cyclic window of length `window` over `cycle`.
VerifyReport verify_universal_cycle(std::span<const Symbol> cycle, std::size_t window,
                                    const Universe& u, const VerifyOptions& opts = {});

/// Windows of a bounded-weight cycle (bounded_words) or its fixed-weight
/// expansion (fixed_weight_words, length n+1).
VerifyReport verify_universal_cycle(const UCycle& cycle, const Universe& u,
                                    const VerifyOptions& opts = {});

/// Decodes every window of a subset/multiset cycle and compares the objects
/// with the enumerated universe.
VerifyReport verify_comb_cycle(const CombCycle& cycle, const VerifyOptions& opts = {});

}  // namespace bwdb
