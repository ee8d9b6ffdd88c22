#include "kcanon.h"

#include <cstring>
#include <memory>
#include <sstream>

#include "kcanon/canonical.hpp"
#include "kcanon/gamma.hpp"
#include "kcanon/json_io.hpp"
#include "kcanon/orbits.hpp"
#include "kcanon/verify.hpp"

using namespace kcanon;

struct kcanon_ctx {
    std::unique_ptr<RootSystem> rs;
    std::unique_ptr<Straightener> str;
    std::unique_ptr<CanonicalBasis> cb;
    std::unique_ptr<GammaMap> gamma;
    std::string label;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int classify(const std::exception& e) {
    if (dynamic_cast<const UnsupportedTypeError*>(&e))
        return KCANON_ERR_UNSUPPORTED;
    if (dynamic_cast<const DominanceViolation*>(&e))
        return KCANON_ERR_DOMINANCE;
    if (dynamic_cast<const NotAPartitionOfN*>(&e) || dynamic_cast<const ParseError*>(&e))
        return KCANON_ERR_BAD_ARGUMENT;
    return KCANON_ERR_INTERNAL;
}

template <typename Fn>
int guarded(kcanon_ctx* ctx, Fn&& fn) {
    if (!ctx)
        return KCANON_ERR_BAD_ARGUMENT;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return classify(e);
    } catch (...) {
        ctx->last_error = "unknown error";
        return KCANON_ERR_INTERNAL;
    }
}

int parse_weight(const kcanon_ctx* ctx, const int64_t* weight, size_t len, Weight& out,
                 std::string& err) {
    if (weight == nullptr || static_cast<int>(len) != ctx->rs->rank()) {
        err = "expected " + std::to_string(ctx->rs->rank()) + " weight coordinates, got " +
              std::to_string(len);
        return KCANON_ERR_BAD_ARGUMENT;
    }
    out = Weight(std::vector<std::int64_t>(weight, weight + len));
    return KCANON_OK;
}

enum class Format { Json, Tsv };

int parse_format(const char* format, Format& out, std::string& err) {
    const std::string f = format ? format : "";
    if (f == "json")
        out = Format::Json;
    else if (f == "tsv")
        out = Format::Tsv;
    else {
        err = "format must be 'json' or 'tsv', got '" + f + "'";
        return KCANON_ERR_BAD_ARGUMENT;
    }
    return KCANON_OK;
}

// Weights in descending linear extension, the top coordinate first.
std::string canonical_tsv(const RootSystem& rs, const CanonicalElement& ce) {
    std::vector<std::pair<Weight, LaurentPoly>> rows(ce.aj_coords.begin(), ce.aj_coords.end());
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        const auto ma = rs.measure(a.first), mb = rs.measure(b.first);
        if (ma != mb)
            return ma > mb;
        return b.first < a.first;
    });
    std::ostringstream os;
    for (const auto& [w, c] : rows)
        os << "AJ[" << w.str() << "]\t" << c.str() << "\n";
    return os.str();
}

std::string kclass_tsv(const KClass& x) {
    std::ostringstream os;
    for (const auto& [w, c] : x.coords())
        os << "e[" << w.str() << "]\t" << c.str() << "\n";
    return os.str();
}

std::string gamma_tsv(const RootSystem& rs, const GradedCharacter& gc) {
    std::vector<std::pair<Weight, LaurentPoly>> rows(gc.mults.begin(), gc.mults.end());
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        const auto ma = rs.measure(a.first), mb = rs.measure(b.first);
        if (ma != mb)
            return ma < mb;
        return a.first < b.first;
    });
    std::ostringstream os;
    for (const auto& [w, c] : rows)
        os << "V[" << w.str() << "]\t" << c.str() << "\n";
    return os.str();
}

std::string labels_str(const std::vector<std::int64_t>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

} // namespace

extern "C" {

const char* kcanon_version(void) { return "1.0.0"; }

const char* kcanon_strerror(int status) {
    switch (status) {
    case KCANON_OK: return "ok";
    case KCANON_ERR_UNSUPPORTED: return "unsupported root system or missing table";
    case KCANON_ERR_DOMINANCE: return "weight fails a dominance precondition";
    case KCANON_ERR_BAD_ARGUMENT: return "malformed argument";
    case KCANON_ERR_INTERNAL: return "internal invariant violated";
    default: return "unknown status";
    }
}

int kcanon_ctx_new(const char* system, kcanon_ctx** out, char** err_msg) {
    if (out == nullptr)
        return KCANON_ERR_BAD_ARGUMENT;
    *out = nullptr;
    try {
        auto ctx = std::make_unique<kcanon_ctx>();
        ctx->rs = std::make_unique<RootSystem>(RootSystem::build(system ? system : ""));
        ctx->str = std::make_unique<Straightener>(*ctx->rs);
        ctx->cb = std::make_unique<CanonicalBasis>(*ctx->str);
        ctx->gamma = std::make_unique<GammaMap>(*ctx->rs);
        ctx->label = ctx->rs->label();
        *out = ctx.release();
        return KCANON_OK;
    } catch (const std::exception& e) {
        if (err_msg)
            *err_msg = dup_string(e.what());
        return classify(e);
    }
}

void kcanon_ctx_free(kcanon_ctx* ctx) { delete ctx; }

int kcanon_ctx_rank(const kcanon_ctx* ctx) { return ctx ? ctx->rs->rank() : 0; }

const char* kcanon_ctx_system(const kcanon_ctx* ctx) { return ctx ? ctx->label.c_str() : ""; }

const char* kcanon_last_error(const kcanon_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

int kcanon_canonical(kcanon_ctx* ctx, const int64_t* weight, size_t len, const char* format,
                     char** out) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        Weight lambda;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        rc = parse_weight(ctx, weight, len, lambda, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        const CanonicalElement ce = ctx->cb->canonical_element(lambda);
        if (fmt == Format::Tsv) {
            *out = dup_string(canonical_tsv(*ctx->rs, ce));
        } else {
            json j;
            j["lambda"] = ce.lambda.coords;
            j["aj"] = coords_to_json("AJ", ce.aj_coords);
            j["e"] = kclass_to_json(ce.e_coords);
            *out = dup_string(j.dump() + "\n");
        }
        return KCANON_OK;
    });
}

int kcanon_straighten(kcanon_ctx* ctx, const int64_t* weight, size_t len, const char* format,
                      char** out) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        Weight lambda;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        rc = parse_weight(ctx, weight, len, lambda, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        const KClass x = ctx->str->straighten(lambda);
        *out = dup_string(fmt == Format::Tsv ? kclass_tsv(x) : kclass_to_json(x).dump() + "\n");
        return KCANON_OK;
    });
}

int kcanon_gamma(kcanon_ctx* ctx, const int64_t* weight, size_t len, int64_t cutoff,
                 const char* format, char** out) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        Weight lambda;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        rc = parse_weight(ctx, weight, len, lambda, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        if (cutoff < 0)
            cutoff = 4 * ctx->rs->measure(lambda);
        const KClass c = ctx->cb->canonical_element(lambda).e_coords;
        const GradedCharacter gc = ctx->gamma->gamma_map(c, cutoff);
        *out = dup_string(fmt == Format::Tsv ? gamma_tsv(*ctx->rs, gc)
                                             : graded_character_to_json(gc).dump() + "\n");
        return KCANON_OK;
    });
}

int kcanon_bmatrix(kcanon_ctx* ctx, int64_t bound, int threads, const char* format, char** out) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        if (bound < 0) {
            ctx->last_error = "bound must be nonnegative";
            return KCANON_ERR_BAD_ARGUMENT;
        }
        const BMatrix m =
            ctx->cb->b_matrix(ctx->rs->dominant_weights_up_to(bound), threads < 1 ? 1 : threads);
        *out = dup_string(fmt == Format::Tsv ? bmatrix_to_tsv(m) : bmatrix_to_json(m).dump() + "\n");
        return KCANON_OK;
    });
}

int kcanon_mcgovern(kcanon_ctx* ctx, const char* format, char** out) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        std::ostringstream tsv;
        json arr = json::array();
        for (const auto& orbit : orbit_table(*ctx->rs)) {
            const KClass m = mcgovern_class(*ctx->str, orbit);
            const auto hit = ctx->cb->is_canonical(m);
            if (fmt == Format::Tsv) {
                tsv << orbit.name << "\t" << labels_str(orbit.dynkin_labels) << "\t"
                    << orbit.a_value << "\t" << (hit ? hit->second.str() : "-") << "\t" << m.str()
                    << "\n";
            } else {
                json o;
                o["orbit"] = orbit.name;
                o["labels"] = orbit.dynkin_labels;
                o["a"] = orbit.a_value;
                o["codim"] = orbit.codim;
                if (hit) {
                    o["sign"] = hit->first;
                    o["lambda"] = hit->second.coords;
                }
                o["class"] = kclass_to_json(m);
                arr.push_back(std::move(o));
            }
        }
        *out = dup_string(fmt == Format::Tsv ? tsv.str() : arr.dump() + "\n");
        return KCANON_OK;
    });
}

int kcanon_verify(kcanon_ctx* ctx, int64_t bound, const char* format, char** out, int* n_failed) {
    return guarded(ctx, [&]() -> int {
        Format fmt;
        int rc = parse_format(format, fmt, ctx->last_error);
        if (rc != KCANON_OK)
            return rc;
        const auto reports = verify_all(*ctx->cb, bound);
        std::ostringstream os;
        int failed = 0;
        for (const auto& r : reports) {
            if (!r.pass)
                ++failed;
            os << (fmt == Format::Tsv ? report_to_tsv(r) : report_to_json(r).dump()) << "\n";
        }
        if (n_failed)
            *n_failed = failed;
        *out = dup_string(os.str());
        return KCANON_OK;
    });
}

void kcanon_string_free(char* s) { std::free(s); }

} // extern "C"
