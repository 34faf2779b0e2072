// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails. Pass a criterion number to run only that one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bwdb/combmaps.hpp"
#include "bwdb/cyclejoin.hpp"
#include "bwdb/engines.hpp"
#include "bwdb/grandmama.hpp"
#include "bwdb/msr.hpp"
#include "bwdb/oracle.hpp"
#include "support/goldens.hpp"

using namespace bwdb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Parameter grid: 2 <= t <= 6, 1 <= n <= 6, 0 <= w <= n(t-1), t^n <= 10^6.
void for_each_cell(const std::function<void(const ParamSet&)>& f) {
    for (Symbol t = 2; t <= 6; ++t)
        for (std::size_t n = 1; n <= 6; ++n) {
            std::uint64_t size = 1;
            for (std::size_t i = 0; i < n; ++i) size *= t;
            if (size > 1'000'000) continue;
            for (std::uint64_t w = 0; w <= n * (t - 1); ++w) f(ParamSet{t, n, w});
        }
}

std::string cell(const ParamSet& p) {
    return "(t=" + std::to_string(p.t) + ",n=" + std::to_string(p.n) + ",w=" + std::to_string(p.w) + ")";
}

std::string digits(const std::vector<Symbol>& s) { return render(s); }

// Keeps the first few failure notes.
struct Notes {
    std::uint64_t count = 0;
    std::string text;
    void add(const std::string& s) {
        if (count++ < 5) text += (text.empty() ? "" : "; ") + s;
    }
    std::string summary(const std::string& ok) const {
        if (count == 0) return ok;
        return std::to_string(count) + " failure(s): " + text;
    }
};

Outcome golden_sequences() {
    const auto start = Clock::now();
    struct Case {
        const char* name;
        std::string got;
        const char* want;
    };
    std::vector<Case> cases{
        {"U_5(3,4)", digits(generate_concat({5, 3, 4}).symbols), golden::U_5_3_4},
        {"V_5(3,4)", digits(generate_msr({5, 3, 4}).symbols), golden::V_5_3_4},
        {"U_4(3,3)", digits(generate_concat({4, 3, 3}).symbols), golden::U_4_3_3},
        {"V_4(3,3)", digits(generate_msr({4, 3, 3}).symbols), golden::V_4_3_3},
        {"S_1", digits(ucycle_subsets(6, 3, Engine::concat).symbols), golden::S1_6_3},
        {"S_2", digits(ucycle_subsets(6, 3, Engine::msr).symbols), golden::S2_6_3},
        {"U_4(4,3)", digits(generate_concat({4, 4, 3}).symbols), golden::U_4_4_3},
        {"V_4(4,3)", digits(generate_msr({4, 4, 3}).symbols), golden::V_4_4_3},
        {"S_3(5)", digits(ucycle_subsets(5, 3, Engine::concat).symbols), golden::S_5_3},
    };
    Outcome out;
    Notes notes;
    for (const auto& c : cases)
        if (c.got != c.want) notes.add(std::string(c.name) + " got " + c.got + " expected " + c.want);
    const double secs = seconds_since(start);
    out.pass = notes.count == 0 && secs < 1.0;
    std::ostringstream os;
    os << notes.summary(std::to_string(cases.size()) + "/" + std::to_string(cases.size()) + " exact") << ", "
       << secs << " s";
    out.detail = os.str();
    return out;
}

Outcome engine_equivalence() {
    Notes notes;
    std::uint64_t cells = 0;
    for_each_cell([&](const ParamSet& p) {
        ++cells;
        const auto concat = generate_concat(p).symbols;
        const std::uint64_t len = p.bounded_word_count();
        const std::uint64_t steps = len >= p.n ? len - p.n : 0;
        auto succ = generate_by_successor(p, Word::zeros(p.n, p.t), steps).symbols;
        if (len < p.n) succ.resize(len);
        const auto generic = generate_generic(build_tree(FeedbackKind::pcr, p)).symbols;
        if (concat != succ) notes.add("successor differs at " + cell(p));
        if (concat != generic) notes.add("generic differs at " + cell(p));
    });
    return {notes.count == 0, notes.summary(std::to_string(cells) + " cells identical")};
}

Outcome universality() {
    Notes notes;
    std::uint64_t checks = 0;
    for_each_cell([&](const ParamSet& p) {
        const auto u = Universe::bounded_words(p.t, static_cast<unsigned>(p.n), p.w);
        std::vector<Engine> engines{Engine::concat, Engine::successor_h1, Engine::generic};
        if (p.w < p.t) {
            engines.push_back(Engine::msr);
            engines.push_back(Engine::reverse_colex);
        }
        for (Engine e : engines) {
            ++checks;
            const auto r = verify_universal_cycle(generate(e, p), u);
            if (!r.ok) {
                notes.add(std::string(to_string(e)) + " " + cell(p) + " missing=" +
                          std::to_string(r.missing_total) + " dup=" + std::to_string(r.duplicated_total));
            }
        }
    });
    return {notes.count == 0, notes.summary(std::to_string(checks) + " engine outputs verified")};
}

Outcome cardinalities() {
    Notes notes;
    std::uint64_t cycles = 0;
    for (Engine e : {Engine::concat, Engine::msr}) {
        for (unsigned n = 1; n <= 10; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                ++cycles;
                const auto c = ucycle_subsets(n, k, e);
                const auto r = verify_comb_cycle(c);
                if (c.size() != binomial(n, k) || !r.ok)
                    notes.add("subsets n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        for (unsigned n = 2; n <= 7; ++n)
            for (unsigned k = 2; k <= 7; ++k) {
                for (const auto& c : {ucycle_multisets_freq(n, k, e), ucycle_multisets_diff(n, k, e)}) {
                    ++cycles;
                    const auto r = verify_comb_cycle(c);
                    if (c.size() != binomial(n + k - 1, k) || !r.ok)
                        notes.add(std::string(to_string(c.scheme)) + " n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
                }
            }
    }
    return {notes.count == 0, notes.summary(std::to_string(cycles) + " object cycles exact")};
}

Outcome fixed_weight() {
    Notes notes;
    std::uint64_t checks = 0, substitutions = 0;
    for_each_cell([&](const ParamSet& p) {
        if (p.w > p.t) return;
        const auto u = Universe::fixed_weight_words(p.t, static_cast<unsigned>(p.n + 1), p.w);
        std::vector<UCycle> cycles{generate_concat(p)};
        if (p.w < p.t) cycles.push_back(generate_msr(p));
        if (p.w == p.t) ++substitutions;
        for (const auto& c : cycles) {
            ++checks;
            if (!verify_universal_cycle(c, u).ok) notes.add(std::string(to_string(c.engine)) + " " + cell(p));
        }
    });
    return {notes.count == 0, notes.summary(std::to_string(checks) + " expansions exact (" +
                                            std::to_string(substitutions) + " with w = t)")};
}

Outcome one_test_bound() {
    Instrumentation total;
    std::uint64_t cells = 0;
    for_each_cell([&](const ParamSet& p) {
        if (p.w >= p.t) return;
        ++cells;
        Instrumentation ins;
        generate_msr(p, std::nullopt, &ins);
        // every window of the cycle, not just those reached from 0^n
        total.successor_calls += ins.successor_calls;
        total.necklace_tests += ins.necklace_tests;
        total.max_tests_per_call = std::max(total.max_tests_per_call, ins.max_tests_per_call);
    });
    std::ostringstream os;
    os << total.successor_calls << " calls over " << cells << " cells, max " << total.max_tests_per_call
       << " test(s) per call";
    return {total.max_tests_per_call <= 1, os.str()};
}

Outcome amortized_cost() {
    double worst = 0;
    std::string worst_cell;
    for_each_cell([&](const ParamSet& p) {
        Instrumentation ins;
        const auto c = generate_concat(p, &ins);
        const double ratio = static_cast<double>(ins.comparisons) / static_cast<double>(c.size());
        if (ratio > worst) {
            worst = ratio;
            worst_cell = cell(p);
        }
    });
    const ParamSet big{4, 12, 19};
    const auto start = Clock::now();
    std::uint64_t checksum = 0;
    const std::uint64_t produced = generate_concat(big, [&](Symbol s) { checksum += s; });
    const double secs = seconds_since(start);
    std::ostringstream os;
    os << "max comparisons/symbol " << worst << " at " << worst_cell << "; " << produced << " symbols for "
       << cell(big) << " in " << secs << " s" << (secs > 10 ? " (above the 10 s soft bound)" : "");
    const bool pass = worst <= 16.0 && produced >= 10'000'000 && produced == big.bounded_word_count() &&
                      secs <= 60.0 && checksum > 0;
    return {pass, os.str()};
}

Outcome structural_lemmas() {
    Notes notes;
    std::uint64_t trees = 0;
    for_each_cell([&](const ParamSet& p) {
        const auto pcr = build_tree(FeedbackKind::pcr, p);
        ++trees;
        if (!check_chain_property(pcr)) notes.add("pcr chain " + cell(p));
        if (!check_periodic_leaves(pcr)) notes.add("pcr periodic leaves " + cell(p));
        if (p.w < p.t) {
            ++trees;
            if (!check_chain_property(build_tree(FeedbackKind::msr, p))) notes.add("msr chain " + cell(p));
        }
    });
    return {notes.count == 0, notes.summary(std::to_string(trees) + " trees satisfy both properties")};
}

Outcome conjecture_sweep() {
    std::uint64_t cells = 0, equal = 0;
    std::string divergent;
    for (Symbol t = 2; t <= 6; ++t)
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::uint64_t w = 0; w < t; ++w) {
                const ParamSet p{t, n, w};
                const auto r = check_conjecture(p);
                ++cells;
                if (r.equal) {
                    ++equal;
                } else if (divergent.size() < 200) {
                    divergent += " " + cell(p) + "@" + std::to_string(r.first_divergence.value_or(0));
                }
            }
    std::string detail = std::to_string(equal) + "/" + std::to_string(cells) + " cells equal";
    if (!divergent.empty()) detail += "; divergences reported:" + divergent;
    return {true, detail};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const std::vector<Criterion> all{
        {1, "golden sequences", golden_sequences},
        {2, "engine equivalence", engine_equivalence},
        {3, "universality sweep", universality},
        {4, "object cardinalities", cardinalities},
        {5, "fixed-weight shorthand", fixed_weight},
        {6, "one necklace test per h2 call", one_test_bound},
        {7, "amortized cost and throughput", amortized_cost},
        {8, "structural lemmas", structural_lemmas},
        {9, "conjecture sweep (report only)", conjecture_sweep},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %d: %s | %s | %.2f s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
