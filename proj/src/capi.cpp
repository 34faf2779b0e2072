#include "bwdb/bwdb.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "bwdb/combmaps.hpp"
#include "bwdb/cyclejoin.hpp"
#include "bwdb/engines.hpp"
#include "bwdb/export.hpp"
#include "bwdb/msr.hpp"
#include "bwdb/oracle.hpp"
#include "json.hpp"

struct bwdb_generator {
    std::unique_ptr<bwdb::SymbolStream> stream;
    bwdb::ParamSet params;
    bwdb::Engine engine = bwdb::Engine::concat;
    bwdb::Symbol shift = 0;
    std::string engine_name;
};

namespace {

thread_local std::string g_last_error;

bwdb_status fail(bwdb_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <class F>
bwdb_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(BWDB_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BWDB_INVALID_ARGUMENT, e.what());
    } catch (const std::length_error& e) {
        return fail(BWDB_CAPACITY_EXCEEDED, e.what());
    } catch (const std::overflow_error& e) {
        return fail(BWDB_CAPACITY_EXCEEDED, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BWDB_CAPACITY_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(BWDB_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(BWDB_INTERNAL_ERROR, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bwdb::Engine map_engine(bwdb_engine e, bool seeded) {
    switch (e) {
        case BWDB_ENGINE_GRANDMAMA:
            return seeded ? bwdb::Engine::successor_h1 : bwdb::Engine::concat;
        case BWDB_ENGINE_GRANDMAMA_SUCCESSOR: return bwdb::Engine::successor_h1;
        case BWDB_ENGINE_MSR: return bwdb::Engine::msr;
        case BWDB_ENGINE_REVERSE_COLEX: return bwdb::Engine::reverse_colex;
        case BWDB_ENGINE_GENERIC: return bwdb::Engine::generic;
    }
    throw std::invalid_argument("unknown engine");
}

std::optional<bwdb::Scheme> scheme_of(bwdb_source s) {
    switch (s) {
        case BWDB_SOURCE_WORDS: return std::nullopt;
        case BWDB_SOURCE_SUBSETS: return bwdb::Scheme::subset_difference;
        case BWDB_SOURCE_MULTISETS_FREQ: return bwdb::Scheme::multiset_frequency;
        case BWDB_SOURCE_MULTISETS_DIFF: return bwdb::Scheme::multiset_difference;
    }
    throw std::invalid_argument("unknown source");
}

// Request resolved into underlying parameters, engine and a base-symbol seed.
struct Resolved {
    std::optional<bwdb::Scheme> scheme;
    bwdb::ParamSet params;
    bwdb::Engine engine = bwdb::Engine::concat;
    std::optional<bwdb::Word> seed;
    bwdb::Symbol shift = 0;
};

Resolved resolve(const bwdb_request* req) {
    if (!req) throw std::invalid_argument("request is null");
    Resolved r;
    r.scheme = scheme_of(req->source);
    const bool seeded = req->seed != nullptr && req->seed_len > 0;
    r.engine = map_engine(req->engine, seeded);
    if (r.scheme) {
        r.params = bwdb::scheme_params(*r.scheme, req->ground_n, req->k,
                                       bwdb::MultisetBounds{req->allow_small != 0});
        if (*r.scheme == bwdb::Scheme::subset_difference) r.shift = 1;
    } else {
        if (req->t < 1) throw std::invalid_argument("t must be at least 1");
        if (req->n < 1) throw std::invalid_argument("n must be at least 1");
        r.params = bwdb::ParamSet{req->t, req->n, req->w};
    }
    r.params.validate();
    if (seeded) {
        if (req->seed_len != r.params.n) {
            throw std::invalid_argument("seed window has length " + std::to_string(req->seed_len) +
                                        ", expected " + std::to_string(r.params.n));
        }
        std::vector<bwdb::Symbol> base(req->seed, req->seed + req->seed_len);
        for (auto& s : base) {
            if (s < r.shift) throw std::invalid_argument("seed symbol below the output alphabet");
            s -= r.shift;
            if (s >= r.params.t) throw std::invalid_argument("seed symbol outside the alphabet");
        }
        r.seed = bwdb::Word(std::move(base), r.params.t);
        if (!r.params.contains(r.seed->symbols())) {
            throw std::invalid_argument("seed window exceeds the weight bound");
        }
    }
    return r;
}

bwdb::UCycle materialize(const Resolved& r, std::uint64_t cap) {
    const std::uint64_t len = r.params.bounded_word_count();
    if (len > cap) {
        throw std::length_error("cycle of " + std::to_string(len) + " symbols exceeds cap of " +
                                std::to_string(cap));
    }
    return bwdb::generate(r.engine, r.params, r.seed);
}

}  // namespace

extern "C" {

void bwdb_request_init(bwdb_request* req) {
    if (req) *req = bwdb_request{};
}

const char* bwdb_last_error(void) { return g_last_error.c_str(); }

const char* bwdb_status_name(bwdb_status status) {
    switch (status) {
        case BWDB_OK: return "ok";
        case BWDB_INVALID_ARGUMENT: return "invalid_argument";
        case BWDB_CAPACITY_EXCEEDED: return "capacity_exceeded";
        case BWDB_INTERNAL_ERROR: return "internal_error";
    }
    return "unknown";
}

void bwdb_free(char* p) { std::free(p); }

bwdb_status bwdb_generator_open(const bwdb_request* req, bwdb_generator** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("output handle pointer is null");
        *out = nullptr;
        const Resolved r = resolve(req);
        auto gen = std::make_unique<bwdb_generator>();
        gen->stream = bwdb::open_stream(r.engine, r.params, r.seed);
        gen->params = r.params;
        gen->engine = r.engine;
        gen->shift = r.shift;
        gen->engine_name = std::string(bwdb::to_string(r.engine));
        *out = gen.release();
        return BWDB_OK;
    });
}

bwdb_status bwdb_generator_read(bwdb_generator* gen, uint32_t* buf, size_t cap, size_t* written) {
    return guarded([&] {
        if (!gen || !written || (!buf && cap > 0)) {
            throw std::invalid_argument("null generator, buffer or count pointer");
        }
        size_t i = 0;
        for (; i < cap; ++i) {
            const auto s = gen->stream->next();
            if (!s) break;
            buf[i] = *s + gen->shift;
        }
        *written = i;
        return BWDB_OK;
    });
}

uint64_t bwdb_generator_length(const bwdb_generator* gen) { return gen ? gen->stream->length() : 0; }

uint32_t bwdb_generator_alphabet(const bwdb_generator* gen) {
    return gen ? gen->params.t + gen->shift : 0;
}

void bwdb_generator_params(const bwdb_generator* gen, uint32_t* t, uint32_t* n, uint64_t* w,
                           uint64_t* w_effective) {
    if (!gen) return;
    if (t) *t = gen->params.t;
    if (n) *n = static_cast<uint32_t>(gen->params.n);
    if (w) *w = gen->params.w;
    if (w_effective) *w_effective = gen->params.effective_w();
}

const char* bwdb_generator_engine(const bwdb_generator* gen) {
    return gen ? gen->engine_name.c_str() : "";
}

void bwdb_generator_close(bwdb_generator* gen) { delete gen; }

bwdb_status bwdb_verify(const bwdb_request* req, bwdb_against against, uint64_t cap,
                        size_t list_limit, int* ok, char** report_json) {
    return guarded([&] {
        if (!ok) throw std::invalid_argument("ok pointer is null");
        *ok = 0;
        if (report_json) *report_json = nullptr;
        const Resolved r = resolve(req);
        const bwdb::VerifyOptions opts{cap, list_limit};
        bwdb::UCycle base = materialize(r, cap);
        bwdb::VerifyReport report;
        switch (against) {
            case BWDB_AGAINST_WORDS:
                report = bwdb::verify_universal_cycle(
                    base, bwdb::Universe::bounded_words(r.params.t, r.params.n, r.params.w), opts);
                break;
            case BWDB_AGAINST_FIXED_WEIGHT:
                report = bwdb::verify_universal_cycle(
                    base,
                    bwdb::Universe::fixed_weight_words(r.params.t, r.params.n + 1, r.params.w),
                    opts);
                break;
            case BWDB_AGAINST_SUBSETS:
            case BWDB_AGAINST_MULTISETS_FREQ:
            case BWDB_AGAINST_MULTISETS_DIFF: {
                const bwdb::Scheme want = against == BWDB_AGAINST_SUBSETS
                                              ? bwdb::Scheme::subset_difference
                                          : against == BWDB_AGAINST_MULTISETS_FREQ
                                              ? bwdb::Scheme::multiset_frequency
                                              : bwdb::Scheme::multiset_difference;
                if (r.scheme != want) {
                    throw std::invalid_argument("object verification needs the matching " +
                                                std::string(bwdb::to_string(want)) + " source");
                }
                const auto cycle = bwdb::wrap_cycle(want, req->ground_n, req->k, std::move(base));
                report = bwdb::verify_comb_cycle(cycle, opts);
                break;
            }
            default: throw std::invalid_argument("unknown verification target");
        }
        *ok = report.ok ? 1 : 0;
        if (report_json) *report_json = dup_string(bwdb::report_to_json(report, -1));
        return BWDB_OK;
    });
}

bwdb_status bwdb_decode(const bwdb_request* req, uint64_t position, char** json) {
    return guarded([&] {
        if (!json) throw std::invalid_argument("json pointer is null");
        *json = nullptr;
        const Resolved r = resolve(req);
        bwdb::UCycle base = materialize(r, bwdb::kDefaultCap);
        if (position >= base.size()) {
            throw std::out_of_range("position " + std::to_string(position) +
                                    " is past the cycle length " + std::to_string(base.size()));
        }
        nlohmann::ordered_json out;
        out["position"] = position;
        out["cycle_length"] = base.size();
        if (!r.scheme) {
            const auto w = base.window(position);
            out["window"] = w.vec();
            out["weight"] = bwdb::weight(w);
        } else {
            const auto cycle = bwdb::wrap_cycle(*r.scheme, req->ground_n, req->k, std::move(base));
            const auto obj = bwdb::decode_window(cycle, position);
            out["window"] = cycle.window(position).vec();
            out["scheme"] = bwdb::to_string(*r.scheme);
            out["object"] = nlohmann::ordered_json::parse(bwdb::object_to_json(obj));
        }
        *json = dup_string(out.dump());
        return BWDB_OK;
    });
}

bwdb_status bwdb_compare(const bwdb_request* a, const bwdb_request* b, int* equal,
                         uint64_t* first_divergence) {
    return guarded([&] {
        if (!equal) throw std::invalid_argument("equal pointer is null");
        const Resolved ra = resolve(a);
        const Resolved rb = resolve(b);
        auto sa = bwdb::open_stream(ra.engine, ra.params, ra.seed);
        auto sb = bwdb::open_stream(rb.engine, rb.params, rb.seed);
        std::uint64_t pos = 0;
        for (;; ++pos) {
            auto x = sa->next();
            auto y = sb->next();
            if (x) *x += ra.shift;
            if (y) *y += rb.shift;
            if (!x && !y) {
                *equal = 1;
                if (first_divergence) *first_divergence = std::numeric_limits<uint64_t>::max();
                return BWDB_OK;
            }
            if (x != y) break;
        }
        *equal = 0;
        if (first_divergence) *first_divergence = pos;
        return BWDB_OK;
    });
}

bwdb_status bwdb_tree_export(bwdb_tree_kind kind, uint32_t t, uint32_t n, uint64_t w,
                             bwdb_tree_format format, uint64_t cap, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("output pointer is null");
        *out = nullptr;
        const bwdb::ParamSet p{t, n, w};
        p.validate();
        bwdb::FeedbackKind fk;
        switch (kind) {
            case BWDB_TREE_PCR: fk = bwdb::FeedbackKind::pcr; break;
            case BWDB_TREE_MSR: fk = bwdb::FeedbackKind::msr; break;
            default: throw std::invalid_argument("unknown tree kind");
        }
        const auto tree = bwdb::build_tree(fk, p, cap);
        switch (format) {
            case BWDB_TREE_JSON: *out = dup_string(bwdb::tree_to_json(tree)); break;
            case BWDB_TREE_DOT: *out = dup_string(bwdb::tree_to_dot(tree)); break;
            default: throw std::invalid_argument("unknown tree format");
        }
        return BWDB_OK;
    });
}

bwdb_status bwdb_conjecture_check(uint32_t t, uint32_t n, uint64_t w, int* equal, char** json) {
    return guarded([&] {
        if (!equal) throw std::invalid_argument("equal pointer is null");
        if (json) *json = nullptr;
        const bwdb::ParamSet p{t, n, w};
        p.validate();
        const auto report = bwdb::check_conjecture(p);
        *equal = report.equal ? 1 : 0;
        if (json) *json = dup_string(bwdb::conjecture_to_json(p, report));
        return BWDB_OK;
    });
}

}  // extern "C"
