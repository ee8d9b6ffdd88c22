#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "kcanon.h"

namespace {

struct Ctx {
    kcanon_ctx* p = nullptr;
    explicit Ctx(const char* system) {
        char* err = nullptr;
        REQUIRE(kcanon_ctx_new(system, &p, &err) == KCANON_OK);
        REQUIRE(p != nullptr);
    }
    ~Ctx() { kcanon_ctx_free(p); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    kcanon_string_free(s);
    return out;
}

} // namespace

TEST_CASE("context lifecycle and metadata") {
    Ctx ctx("g2");
    CHECK(kcanon_ctx_rank(ctx.p) == 2);
    CHECK(std::string(kcanon_ctx_system(ctx.p)) == "G2");
    CHECK(std::string(kcanon_version()) == "1.0.0");

    kcanon_ctx* bad = nullptr;
    char* err = nullptr;
    CHECK(kcanon_ctx_new("E8", &bad, &err) == KCANON_ERR_UNSUPPORTED);
    CHECK(bad == nullptr);
    REQUIRE(err != nullptr);
    CHECK(std::string(err).find("E8") != std::string::npos);
    kcanon_string_free(err);

    CHECK(std::string(kcanon_strerror(KCANON_OK)) == "ok");
    CHECK(std::string(kcanon_strerror(KCANON_ERR_DOMINANCE)).find("dominance") !=
          std::string::npos);
}

TEST_CASE("canonical over the C interface") {
    Ctx ctx("A1");
    const int64_t w2[] = {2};
    char* out = nullptr;
    REQUIRE(kcanon_canonical(ctx.p, w2, 1, "tsv", &out) == KCANON_OK);
    CHECK(take(out) == "AJ[2]\t1\nAJ[0]\tv^-1\n");

    out = nullptr;
    REQUIRE(kcanon_canonical(ctx.p, w2, 1, "json", &out) == KCANON_OK);
    const std::string js = take(out);
    CHECK(js.find("\"lambda\":[2]") != std::string::npos);
    CHECK(js.find("\"basis\":\"AJ\"") != std::string::npos);
    CHECK(js.find("\"basis\":\"e\"") != std::string::npos);
    CHECK(js.back() == '\n');

    const int64_t neg[] = {-1};
    CHECK(kcanon_canonical(ctx.p, neg, 1, "tsv", &out) == KCANON_ERR_DOMINANCE);
    CHECK(std::string(kcanon_last_error(ctx.p)).find("not dominant") != std::string::npos);

    CHECK(kcanon_canonical(ctx.p, w2, 2, "tsv", &out) == KCANON_ERR_BAD_ARGUMENT);
    CHECK(kcanon_canonical(ctx.p, w2, 1, "xml", &out) == KCANON_ERR_BAD_ARGUMENT);
    CHECK(kcanon_canonical(nullptr, w2, 1, "tsv", &out) == KCANON_ERR_BAD_ARGUMENT);
}

TEST_CASE("straighten accepts arbitrary weights") {
    Ctx ctx("A1");
    const int64_t w[] = {-2};
    char* out = nullptr;
    REQUIRE(kcanon_straighten(ctx.p, w, 1, "tsv", &out) == KCANON_OK);
    CHECK(take(out) == "e[0]\tv^2 - 1\ne[2]\tv^2\n");
}

TEST_CASE("gamma with explicit and default cutoffs") {
    Ctx ctx("A2");
    const int64_t w[] = {3, 0};
    char* out = nullptr;
    REQUIRE(kcanon_gamma(ctx.p, w, 2, 12, "tsv", &out) == KCANON_OK);
    const std::string tsv = take(out);
    CHECK(tsv.find("V[0,0]\tv^-2\n") == 0);
    CHECK(tsv.find("V[0,3]\t-v^2\n") != std::string::npos);

    // default cutoff = 4 * <lambda, 2 rho^vee>
    out = nullptr;
    REQUIRE(kcanon_gamma(ctx.p, w, 2, -1, "json", &out) == KCANON_OK);
    const std::string js = take(out);
    CHECK(js.find("\"cutoff\":24") != std::string::npos);
}

TEST_CASE("bmatrix is thread-count independent") {
    Ctx ctx("A2");
    char* out1 = nullptr;
    char* out4 = nullptr;
    REQUIRE(kcanon_bmatrix(ctx.p, 12, 1, "tsv", &out1) == KCANON_OK);
    REQUIRE(kcanon_bmatrix(ctx.p, 12, 4, "tsv", &out4) == KCANON_OK);
    CHECK(take(out1) == take(out4));

    char* out = nullptr;
    CHECK(kcanon_bmatrix(ctx.p, -3, 1, "tsv", &out) == KCANON_ERR_BAD_ARGUMENT);
}

TEST_CASE("mcgovern table") {
    Ctx ctx("G2");
    char* out = nullptr;
    REQUIRE(kcanon_mcgovern(ctx.p, "tsv", &out) == KCANON_OK);
    const std::string tsv = take(out);
    CHECK(tsv.find("subregular\t2,0\t1\t0,1\t") != std::string::npos);
    CHECK(tsv.find("regular\t2,2\t0\t0,0\t") != std::string::npos);

    Ctx b3("B3");
    CHECK(kcanon_mcgovern(b3.p, "tsv", &out) == KCANON_ERR_UNSUPPORTED);
}

TEST_CASE("verify reports pass counts") {
    Ctx ctx("C2");
    char* out = nullptr;
    int failed = -1;
    REQUIRE(kcanon_verify(ctx.p, 14, "json", &out, &failed) == KCANON_OK);
    const std::string js = take(out);
    CHECK(failed == 0);
    CHECK(js.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(js.find("\"status\":\"fail\"") == std::string::npos);
    // one JSON object per line
    CHECK(js.find("{\"check\":") == 0);
}
