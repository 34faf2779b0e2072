// Command-line front end. Everything goes through the C interface in bwdb.h.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bwdb/bwdb.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Carries a C status out of nested helpers to main.
struct ApiError : std::runtime_error {
    bwdb_status status;
    ApiError(bwdb_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(bwdb_status s) {
    if (s != BWDB_OK) throw ApiError(s, bwdb_last_error());
}

struct Owned {
    char* p = nullptr;
    ~Owned() { bwdb_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct ParamFlags {
    std::optional<unsigned> t, n;
    std::optional<std::uint64_t> w;
    std::vector<unsigned> subsets, multisets_freq, multisets_diff;
    std::string engine = "grandmama";
    std::string seed_window;
    bool allow_small = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f, bool with_engine = true) {
    cmd->add_option("--t", f.t, "alphabet size");
    cmd->add_option("--n", f.n, "window length");
    cmd->add_option("--w", f.w, "weight bound");
    auto* s = cmd->add_option("--subsets", f.subsets, "k-subsets of [n]: N K")->expected(2);
    auto* mf = cmd->add_option("--multisets-freq", f.multisets_freq,
                               "k-multisets of [n], shorthand frequency: N K")
                   ->expected(2);
    auto* md = cmd->add_option("--multisets-diff", f.multisets_diff,
                               "k-multisets of [n], difference representation: N K")
                   ->expected(2);
    s->excludes(mf)->excludes(md);
    mf->excludes(md);
    if (with_engine) {
        cmd->add_option("--engine", f.engine, "grandmama | grandmama-successor | msr | reverse-colex | generic")
            ->check(CLI::IsMember({"grandmama", "grandmama-successor", "msr", "reverse-colex",
                                   "generic"}));
    }
    cmd->add_option("--seed-window", f.seed_window,
                    "start window for successor-rule engines, e.g. 012 or 1,10,2");
    cmd->add_flag("--allow-small", f.allow_small, "permit k = 1 multiset cycles");
}

std::vector<std::uint32_t> parse_window(const std::string& text) {
    std::vector<std::uint32_t> out;
    const bool separated = text.find_first_of(",. ") != std::string::npos;
    if (!separated) {
        for (char c : text) {
            if (c < '0' || c > '9') throw ApiError(BWDB_INVALID_ARGUMENT, "bad seed window: " + text);
            out.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        return out;
    }
    std::string spaced = text;
    for (auto& ch : spaced) {
        if (ch == ',' || ch == '.') ch = ' ';
    }
    std::istringstream in(spaced);
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos) {
            throw ApiError(BWDB_INVALID_ARGUMENT, "bad seed window: " + text);
        }
        out.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    }
    return out;
}

struct BuiltRequest {
    bwdb_request req{};
    std::vector<std::uint32_t> seed;
};

bwdb_engine engine_of(const std::string& name) {
    if (name == "grandmama") return BWDB_ENGINE_GRANDMAMA;
    if (name == "grandmama-successor") return BWDB_ENGINE_GRANDMAMA_SUCCESSOR;
    if (name == "msr") return BWDB_ENGINE_MSR;
    if (name == "reverse-colex") return BWDB_ENGINE_REVERSE_COLEX;
    if (name == "generic") return BWDB_ENGINE_GENERIC;
    throw ApiError(BWDB_INVALID_ARGUMENT, "unknown engine " + name);
}

void build(const ParamFlags& f, BuiltRequest& out) {
    bwdb_request_init(&out.req);
    out.req.engine = engine_of(f.engine);
    out.req.allow_small = f.allow_small ? 1 : 0;
    auto objects = [&](const std::vector<unsigned>& v, bwdb_source src) {
        out.req.source = src;
        out.req.ground_n = v[0];
        out.req.k = v[1];
    };
    if (!f.subsets.empty()) {
        objects(f.subsets, BWDB_SOURCE_SUBSETS);
    } else if (!f.multisets_freq.empty()) {
        objects(f.multisets_freq, BWDB_SOURCE_MULTISETS_FREQ);
    } else if (!f.multisets_diff.empty()) {
        objects(f.multisets_diff, BWDB_SOURCE_MULTISETS_DIFF);
    } else {
        if (!f.t || !f.n || !f.w) {
            throw ApiError(BWDB_INVALID_ARGUMENT,
                           "need --t, --n and --w, or one of --subsets/--multisets-freq/"
                           "--multisets-diff");
        }
        out.req.source = BWDB_SOURCE_WORDS;
        out.req.t = *f.t;
        out.req.n = *f.n;
        out.req.w = *f.w;
    }
    if (out.req.source != BWDB_SOURCE_WORDS && (f.t || f.n || f.w)) {
        throw ApiError(BWDB_INVALID_ARGUMENT, "--t/--n/--w cannot be combined with an object source");
    }
    if (!f.seed_window.empty()) {
        out.seed = parse_window(f.seed_window);
        out.req.seed = out.seed.data();
        out.req.seed_len = out.seed.size();
    }
}

void note_clamp(const bwdb_generator* gen) {
    std::uint32_t t = 0, n = 0;
    std::uint64_t w = 0, we = 0;
    bwdb_generator_params(gen, &t, &n, &w, &we);
    if (w != we) std::cerr << "bwdb: note: w=" << w << " clamped to n(t-1)=" << we << "\n";
}

// ---- generate --------------------------------------------------------------

struct GenerateOpts {
    ParamFlags params;
    std::string format = "delimited";
    std::uint64_t limit = 0;
};

int run_generate(const GenerateOpts& o) {
    BuiltRequest b;
    build(o.params, b);
    bwdb_generator* raw = nullptr;
    check(bwdb_generator_open(&b.req, &raw));
    std::unique_ptr<bwdb_generator, decltype(&bwdb_generator_close)> gen(raw, &bwdb_generator_close);
    note_clamp(gen.get());

    const std::uint32_t alphabet = bwdb_generator_alphabet(gen.get());
    if (o.format == "compact" && alphabet > 10) {
        throw ApiError(BWDB_INVALID_ARGUMENT,
                       "compact format needs every symbol below 10 (alphabet is " +
                           std::to_string(alphabet) + ")");
    }
    const std::uint64_t length = bwdb_generator_length(gen.get());
    const std::uint64_t total = o.limit ? std::min(o.limit, length) : length;

    std::string out;
    out.reserve(1 << 16);
    auto flush = [&] {
        std::fwrite(out.data(), 1, out.size(), stdout);
        out.clear();
    };
    if (o.format == "json") {
        std::uint32_t t = 0, n = 0;
        std::uint64_t w = 0, we = 0;
        bwdb_generator_params(gen.get(), &t, &n, &w, &we);
        out += "{\"engine\":\"" + std::string(bwdb_generator_engine(gen.get())) + "\",";
        out += "\"params\":{\"t\":" + std::to_string(t) + ",\"n\":" + std::to_string(n) +
               ",\"w\":" + std::to_string(w) + ",\"w_effective\":" + std::to_string(we) + "},";
        out += "\"alphabet\":" + std::to_string(alphabet) + ",";
        out += "\"length\":" + std::to_string(length) + ",";
        out += "\"emitted\":" + std::to_string(total) + ",\"symbols\":[";
    }

    std::vector<std::uint32_t> buf(4096);
    std::uint64_t emitted = 0;
    while (emitted < total) {
        const std::size_t want = static_cast<std::size_t>(std::min<std::uint64_t>(buf.size(), total - emitted));
        std::size_t got = 0;
        check(bwdb_generator_read(gen.get(), buf.data(), want, &got));
        if (got == 0) break;
        for (std::size_t i = 0; i < got; ++i) {
            if (o.format == "compact") {
                out.push_back(static_cast<char>('0' + buf[i]));
            } else {
                if (emitted + i > 0) out.push_back(o.format == "json" ? ',' : ' ');
                out += std::to_string(buf[i]);
            }
        }
        emitted += got;
        if (out.size() > (1 << 16)) flush();
    }
    out += o.format == "json" ? "]}\n" : "\n";
    flush();
    std::fflush(stdout);
    return kExitOk;
}

// ---- verify / decode -------------------------------------------------------

struct VerifyOpts {
    ParamFlags params;
    std::string against;
    std::uint64_t cap = 1'000'000;
    std::size_t list_limit = 20;
};

bwdb_against against_of(const std::string& s) {
    if (s == "words") return BWDB_AGAINST_WORDS;
    if (s == "fixed-weight") return BWDB_AGAINST_FIXED_WEIGHT;
    if (s == "subsets") return BWDB_AGAINST_SUBSETS;
    if (s == "multisets-freq") return BWDB_AGAINST_MULTISETS_FREQ;
    if (s == "multisets-diff") return BWDB_AGAINST_MULTISETS_DIFF;
    throw ApiError(BWDB_INVALID_ARGUMENT, "unknown verification target " + s);
}

int run_verify(const VerifyOpts& o) {
    BuiltRequest b;
    build(o.params, b);
    int ok = 0;
    Owned json;
    check(bwdb_verify(&b.req, against_of(o.against), o.cap, o.list_limit, &ok, &json.p));
    std::cout << json.str() << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

struct DecodeOpts {
    ParamFlags params;
    std::uint64_t position = 0;
};

int run_decode(const DecodeOpts& o) {
    BuiltRequest b;
    build(o.params, b);
    Owned json;
    check(bwdb_decode(&b.req, o.position, &json.p));
    std::cout << json.str() << "\n";
    return kExitOk;
}

// ---- tree ------------------------------------------------------------------

struct TreeOpts {
    std::string kind = "pcr";
    std::string format = "json";
    unsigned t = 0, n = 0;
    std::uint64_t w = 0;
    std::uint64_t cap = 1'000'000;
};

int run_tree(const TreeOpts& o) {
    Owned out;
    check(bwdb_tree_export(o.kind == "pcr" ? BWDB_TREE_PCR : BWDB_TREE_MSR, o.t, o.n, o.w,
                           o.format == "dot" ? BWDB_TREE_DOT : BWDB_TREE_JSON, o.cap, &out.p));
    std::cout << out.str();
    if (o.format == "json") std::cout << "\n";
    return kExitOk;
}

// ---- sweeps ----------------------------------------------------------------

struct GridOpts {
    std::optional<unsigned> t, n;
    std::optional<std::uint64_t> w;
    unsigned max_t = 6;
    unsigned max_n = 6;
    std::uint64_t max_tn = 1'000'000;
};

bool within(unsigned t, unsigned n, std::uint64_t cap) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < n; ++i) {
        p *= t;
        if (p > cap) return false;
    }
    return true;
}

int run_conjecture(const GridOpts& o) {
    if (o.t || o.n || o.w) {
        if (!o.t || !o.n || !o.w) throw ApiError(BWDB_INVALID_ARGUMENT, "single cell needs --t, --n and --w");
        int equal = 0;
        Owned json;
        check(bwdb_conjecture_check(*o.t, *o.n, *o.w, &equal, &json.p));
        std::cout << json.str() << "\n";
        return kExitOk;
    }
    std::uint64_t cells = 0, divergent = 0;
    for (unsigned t = 2; t <= o.max_t; ++t) {
        for (unsigned n = 1; n <= o.max_n; ++n) {
            if (!within(t, n, o.max_tn)) continue;
            for (std::uint64_t w = 0; w < t; ++w) {
                int equal = 0;
                Owned json;
                check(bwdb_conjecture_check(t, n, w, &equal, &json.p));
                ++cells;
                if (!equal) {
                    ++divergent;
                    std::cout << json.str() << "\n";
                }
            }
        }
    }
    std::cout << "{\"cells\":" << cells << ",\"divergent\":" << divergent << "}\n";
    return kExitOk;
}

int run_sweep(const GridOpts& o) {
    std::uint64_t cells = 0, failures = 0;
    auto report = [&](const char* what, unsigned t, unsigned n, std::uint64_t w, const std::string& extra) {
        ++failures;
        std::cout << "{\"failure\":\"" << what << "\",\"t\":" << t << ",\"n\":" << n
                  << ",\"w\":" << w << (extra.empty() ? "" : ",\"report\":" + extra) << "}\n";
    };
    for (unsigned t = 2; t <= o.max_t; ++t) {
        for (unsigned n = 1; n <= o.max_n; ++n) {
            if (!within(t, n, o.max_tn)) continue;
            for (std::uint64_t w = 0; w <= std::uint64_t{n} * (t - 1); ++w) {
                ++cells;
                bwdb_request base;
                bwdb_request_init(&base);
                base.t = t;
                base.n = n;
                base.w = w;
                std::vector<bwdb_engine> engines{BWDB_ENGINE_GRANDMAMA, BWDB_ENGINE_GRANDMAMA_SUCCESSOR};
                if (w < t) engines.push_back(BWDB_ENGINE_MSR);
                for (auto e : engines) {
                    bwdb_request r = base;
                    r.engine = e;
                    int ok = 0;
                    Owned json;
                    check(bwdb_verify(&r, BWDB_AGAINST_WORDS, o.max_tn, 5, &ok, &json.p));
                    if (!ok) report("universality", t, n, w, json.str());
                    if (e == BWDB_ENGINE_MSR) {
                        Owned fw;
                        check(bwdb_verify(&r, BWDB_AGAINST_FIXED_WEIGHT, o.max_tn, 5, &ok, &fw.p));
                        if (!ok) report("fixed-weight", t, n, w, fw.str());
                    }
                }
                bwdb_request a = base, b = base;
                b.engine = BWDB_ENGINE_GRANDMAMA_SUCCESSOR;
                int equal = 0;
                std::uint64_t at = 0;
                check(bwdb_compare(&a, &b, &equal, &at));
                if (!equal) report("engine-equivalence", t, n, w, std::to_string(at));
            }
        }
    }
    std::cout << "{\"cells\":" << cells << ",\"failures\":" << failures << "}\n";
    return failures ? kExitVerifyFailed : kExitOk;
}

void add_grid_flags(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--max-t", g.max_t, "largest alphabet in the sweep");
    cmd->add_option("--max-n", g.max_n, "largest window length in the sweep");
    cmd->add_option("--max-tn", g.max_tn, "skip cells with t^n above this bound");
}

std::string one_line(std::string s) {
    for (auto& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-weight de Bruijn sequences and universal cycles for subsets and multisets"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* g = app.add_subcommand("generate", "stream a universal cycle");
    add_param_flags(g, gen.params);
    g->add_option("--format", gen.format, "compact | delimited | json")
        ->check(CLI::IsMember({"compact", "delimited", "json"}));
    g->add_option("--limit", gen.limit, "stop after this many symbols (0 = whole cycle)");

    VerifyOpts ver;
    auto* v = app.add_subcommand("verify", "check a cycle with the brute-force oracle");
    add_param_flags(v, ver.params);
    v->add_option("--against", ver.against, "words | fixed-weight | subsets | multisets-freq | multisets-diff")
        ->required()
        ->check(CLI::IsMember({"words", "fixed-weight", "subsets", "multisets-freq", "multisets-diff"}));
    v->add_option("--cap", ver.cap, "largest cycle the oracle will materialize");
    v->add_option("--list-limit", ver.list_limit, "entries kept per report list (0 = all)");
    bool full = false;
    v->add_flag("--full", full, "report complete missing/duplicated lists");

    DecodeOpts dec;
    auto* d = app.add_subcommand("decode", "show the window (and object) at a position");
    add_param_flags(d, dec.params);
    d->add_option("--position", dec.position, "0-based window start")->required();

    TreeOpts tree;
    auto* tr = app.add_subcommand("tree", "export a cycle-joining tree");
    tr->add_option("--kind", tree.kind, "pcr | msr")->check(CLI::IsMember({"pcr", "msr"}));
    tr->add_option("--format", tree.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    tr->add_option("--t", tree.t)->required();
    tr->add_option("--n", tree.n)->required();
    tr->add_option("--w", tree.w)->required();
    tr->add_option("--cap", tree.cap, "largest tree to build");

    GridOpts conj;
    auto* c = app.add_subcommand("conjecture", "compare V with the reverse-colex construction");
    c->add_option("--t", conj.t);
    c->add_option("--n", conj.n);
    c->add_option("--w", conj.w);
    add_grid_flags(c, conj);

    GridOpts sweep;
    auto* s = app.add_subcommand("sweep", "verify every engine over a parameter grid");
    add_grid_flags(s, sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "bwdb: error: usage: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    try {
        if (*g) return run_generate(gen);
        if (*v) {
            if (full) ver.list_limit = 0;
            return run_verify(ver);
        }
        if (*d) return run_decode(dec);
        if (*tr) return run_tree(tree);
        if (*c) return run_conjecture(conj);
        if (*s) return run_sweep(sweep);
    } catch (const ApiError& e) {
        std::cerr << "bwdb: error: " << bwdb_status_name(e.status) << ": " << one_line(e.what()) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "bwdb: error: internal_error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
