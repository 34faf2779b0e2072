#include "bwdb/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bwdb {

namespace {

struct MemberHash {
    std::size_t operator()(const Member& m) const noexcept { return WordHash{}(m); }
};

// Counts length-L words over {0..t-1} by exact weight, up to max_w.
std::vector<unsigned __int128> weight_counts(unsigned t, unsigned length, std::uint64_t max_w) {
    std::vector<unsigned __int128> dist(max_w + 1, 0);
    dist[0] = 1;
    for (unsigned i = 0; i < length; ++i) {
        std::vector<unsigned __int128> next(max_w + 1, 0);
        for (std::uint64_t s = 0; s <= max_w; ++s)
            for (std::uint64_t x = 0; x < t && s + x <= max_w; ++x) next[s + x] += dist[s];
        dist.swap(next);
    }
    return dist;
}

std::uint64_t narrow(unsigned __int128 v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("universe too large");
    return static_cast<std::uint64_t>(v);
}

unsigned __int128 choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void words_by_weight(unsigned t, unsigned length, std::uint64_t lo, std::uint64_t hi,
                     std::vector<Member>& out) {
    Member cur(length, 0);
    auto rec = [&](auto&& self, unsigned pos, std::uint64_t used) -> void {
        if (pos == length) {
            if (used >= lo) out.push_back(cur);
            return;
        }
        for (unsigned x = 0; x < t && used + x <= hi; ++x) {
            cur[pos] = x;
            self(self, pos + 1, used + x);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 0);
}

void sorted_selections(unsigned n, unsigned k, bool repeat, std::vector<Member>& out) {
    Member cur;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = next; e <= n; ++e) {
            cur.push_back(e);
            self(self, repeat ? e : e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

void keep(std::vector<Member>& list, const Member& m, std::size_t limit) {
    if (limit == 0 || list.size() < limit) list.push_back(m);
}

}  // namespace

Universe Universe::bounded_words(unsigned t, unsigned length, std::uint64_t w) {
    return {UniverseKind::bounded_words, t, length, w, 0, 0};
}
Universe Universe::fixed_weight_words(unsigned t, unsigned length, std::uint64_t w) {
    return {UniverseKind::fixed_weight_words, t, length, w, 0, 0};
}
Universe Universe::subsets(unsigned n, unsigned k) { return {UniverseKind::subsets, 0, 0, 0, n, k}; }
Universe Universe::multisets(unsigned n, unsigned k) {
    return {UniverseKind::multisets, 0, 0, 0, n, k};
}

std::uint64_t Universe::count() const {
    switch (kind) {
        case UniverseKind::bounded_words: {
            const std::uint64_t top = std::min<std::uint64_t>(w, std::uint64_t{length} * (t ? t - 1 : 0));
            unsigned __int128 total = 0;
            for (auto c : weight_counts(t, length, top)) total += c;
            return narrow(total);
        }
        case UniverseKind::fixed_weight_words:
            if (w > std::uint64_t{length} * (t ? t - 1 : 0)) return 0;
            return narrow(weight_counts(t, length, w)[w]);
        case UniverseKind::subsets: return narrow(choose(n, k));
        case UniverseKind::multisets: return n == 0 ? 0 : narrow(choose(n + k - 1, k));
    }
    return 0;
}

std::vector<Member> enumerate_universe(const Universe& u, std::uint64_t cap) {
    const std::uint64_t expected = u.count();
    if (expected > cap) {
        throw std::length_error("universe of " + std::to_string(expected) +
                                " members exceeds cap of " + std::to_string(cap));
    }
    std::vector<Member> out;
    out.reserve(expected);
    switch (u.kind) {
        case UniverseKind::bounded_words: words_by_weight(u.t, u.length, 0, u.w, out); break;
        case UniverseKind::fixed_weight_words: words_by_weight(u.t, u.length, u.w, u.w, out); break;
        case UniverseKind::subsets: sorted_selections(u.n, u.k, false, out); break;
        case UniverseKind::multisets: sorted_selections(u.n, u.k, true, out); break;
    }
    return out;
}

VerifyReport compare_to_universe(const std::vector<Member>& observed, const Universe& u,
                                 const VerifyOptions& opts) {
    if (observed.size() > opts.cap) {
        throw std::length_error("observed sequence exceeds cap of " + std::to_string(opts.cap));
    }
    VerifyReport report;
    report.expected_count = u.count();
    report.seen_count = observed.size();

    std::unordered_map<Member, std::uint64_t, MemberHash> seen;
    seen.reserve(observed.size());
    for (const auto& m : observed) ++seen[m];

    for (const auto& m : enumerate_universe(u, opts.cap)) {
        auto it = seen.find(m);
        if (it == seen.end()) {
            ++report.missing_total;
            keep(report.missing, m, opts.list_limit);
            continue;
        }
        if (it->second > 1) {
            ++report.duplicated_total;
            keep(report.duplicated, m, opts.list_limit);
        }
        seen.erase(it);
    }
    for (const auto& [m, c] : seen) {
        (void)c;
        ++report.foreign_total;
        keep(report.foreign, m, opts.list_limit);
    }
    report.ok = report.missing_total == 0 && report.duplicated_total == 0 &&
                report.foreign_total == 0 && report.seen_count == report.expected_count;
    return report;
}

VerifyReport verify_universal_cycle(std::span<const Symbol> cycle, std::size_t window,
                                    const Universe& u, const VerifyOptions& opts) {
    if (cycle.size() > opts.cap) {
        throw std::length_error("cycle exceeds cap of " + std::to_string(opts.cap));
    }
    std::vector<Member> observed;
    observed.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Member m(window);
        for (std::size_t j = 0; j < window; ++j) m[j] = cycle[(i + j) % cycle.size()];
        observed.push_back(std::move(m));
    }
    return compare_to_universe(observed, u, opts);
}

VerifyReport verify_universal_cycle(const UCycle& cycle, const Universe& u,
                                    const VerifyOptions& opts) {
    if (u.kind == UniverseKind::bounded_words) {
        return verify_universal_cycle(cycle.symbols, cycle.params.n, u, opts);
    }
    if (u.kind == UniverseKind::fixed_weight_words) {
        if (cycle.size() > opts.cap) {
            throw std::length_error("cycle exceeds cap of " + std::to_string(opts.cap));
        }
        std::vector<Member> observed;
        for (const auto& w : fixed_weight_expand(cycle)) observed.push_back(w.vec());
        return compare_to_universe(observed, u, opts);
    }
    throw std::invalid_argument("object universes need verify_comb_cycle");
}

VerifyReport verify_comb_cycle(const CombCycle& cycle, const VerifyOptions& opts) {
    if (cycle.size() > opts.cap) {
        throw std::length_error("cycle exceeds cap of " + std::to_string(opts.cap));
    }
    const Universe u = cycle.scheme == Scheme::subset_difference
                           ? Universe::subsets(cycle.n, cycle.k)
                           : Universe::multisets(cycle.n, cycle.k);
    std::vector<Member> observed;
    observed.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        try {
            observed.push_back(decode_window(cycle, i).elements);
        } catch (const std::invalid_argument&) {
            // undecodable window; the leading 0 keeps it apart from every real member
            Member raw{0};
            const auto w = cycle.window(i).vec();
            raw.insert(raw.end(), w.begin(), w.end());
            observed.push_back(std::move(raw));
        }
    }
    return compare_to_universe(observed, u, opts);
}

}  // namespace bwdb
