#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcanon/json_io.hpp"

using namespace kcanon;

namespace {

LaurentPoly v_pow(int c, std::int64_t k) { return LaurentPoly::monomial(c, k); }

} // namespace

TEST_CASE("laurent JSON form") {
    const LaurentPoly p = v_pow(1, -1) - v_pow(1, 1); // v^-1 - v
    CHECK(laurent_to_json(p).dump() == R"({"-1":1,"1":-1})");
    CHECK(laurent_to_json(LaurentPoly()).dump() == "{}");
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
    CHECK(laurent_from_json(json::parse(R"({"-1":1,"1":-1})")) == p);

    // huge coefficients round-trip through decimal strings
    const Int big = Int("123456789012345678901234567890");
    const LaurentPoly q = LaurentPoly::monomial(big, 3) + v_pow(1, 0);
    const json j = laurent_to_json(q);
    CHECK(j["3"].is_string());
    CHECK(j["0"].is_number_integer());
    CHECK(laurent_from_json(j) == q);

    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"x":1})")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"1":0})")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"1":1.5})")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(json::parse("[]")), ParseError);
}

TEST_CASE("keys are ascending by exponent") {
    LaurentPoly p;
    p.set_coeff(5, 1);
    p.set_coeff(-3, 2);
    p.set_coeff(0, -7);
    const json j = laurent_to_json(p);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"-3", "0", "5"});
}

TEST_CASE("KClass JSON round trip") {
    const RootSystem rs = RootSystem::build("A2");
    const Straightener str(rs);
    KClass x(rs);
    x.add_term(Weight{3, 0}, v_pow(1, 2));
    x.add_term(Weight{1, 1}, -(LaurentPoly::one() + v_pow(1, 2)));
    x.add_term(Weight{0, 0}, v_pow(1, -2));

    const json j = kclass_to_json(x);
    CHECK(j["basis"] == "e");
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["weight"] == json::array({0, 0})); // lexicographic order
    CHECK(kclass_from_json(rs, str, j) == x);

    // AJ-basis input converts through the diagonal rescaling
    json aj = coords_to_json("AJ", str.to_aj_coords(x));
    CHECK(kclass_from_json(rs, str, aj) == x);

    CHECK_THROWS_AS(kclass_from_json(rs, str, json::parse(R"({"basis":"Q","terms":[]})")),
                    ParseError);
    CHECK_THROWS_AS(kclass_from_json(rs, str, json::parse(R"({"terms":[]})")), ParseError);
    CHECK_THROWS_AS(
        kclass_from_json(rs, str,
                         json::parse(R"({"basis":"e","terms":[{"weight":[1],"coeff":{"0":1}}]})")),
        ParseError);
}

TEST_CASE("graded character JSON mirrors the class shape") {
    const RootSystem rs = RootSystem::build("A1");
    GradedCharacter gc;
    gc.rs = &rs;
    gc.cutoff = 4;
    gc.mults.emplace(Weight{0}, LaurentPoly::one());
    gc.mults.emplace(Weight{2}, v_pow(1, 2));
    const json j = graded_character_to_json(gc);
    CHECK(j["basis"] == "V");
    CHECK(j["cutoff"] == 4);
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("b-matrix TSV layout") {
    const RootSystem rs = RootSystem::build("A1");
    const Straightener str(rs);
    const CanonicalBasis cb(str);
    const auto m = cb.b_matrix({Weight{0}, Weight{1}, Weight{2}});
    CHECK(bmatrix_to_tsv(m) ==
          "mu\\lambda\t0\t1\t2\n"
          "0\t1\t0\tv^-1\n"
          "1\t0\t1\t0\n"
          "2\t0\t0\t1\n");
    const json j = bmatrix_to_json(m);
    CHECK(j["columns"].size() == 3);
    CHECK(j["entries"].size() == 4);
}

TEST_CASE("verification report serialization") {
    VerificationReport r;
    r.check = "mcgovern";
    r.system = "G2";
    r.pass = true;
    r.lambda = Weight{0, 1};
    r.detail = "orbit subregular";
    CHECK(report_to_json(r).dump() ==
          R"({"check":"mcgovern","system":"G2","status":"pass","lambda":[0,1],"detail":"orbit subregular"})");
    CHECK(report_to_tsv(r) == "mcgovern\tG2\tpass\t0,1\torbit subregular");
    r.pass = false;
    r.lambda.reset();
    CHECK(report_to_json(r)["status"] == "fail");
    CHECK(report_to_tsv(r) == "mcgovern\tG2\tfail\t-\torbit subregular");
}
