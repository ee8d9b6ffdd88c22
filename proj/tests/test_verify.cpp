#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcanon/verify.hpp"

using namespace kcanon;

namespace {

LaurentPoly v_pow(int c, std::int64_t k) { return LaurentPoly::monomial(c, k); }

struct Fixture {
    RootSystem rs;
    Straightener str;
    CanonicalBasis cb;
    explicit Fixture(const char* label)
        : rs(RootSystem::build(label)), str(rs), cb(str) {}
};

const OrbitDatum& orbit_named(const std::vector<OrbitDatum>& orbits, const std::string& name) {
    for (const auto& o : orbits)
        if (o.name == name)
            return o;
    throw std::runtime_error("no orbit " + name);
}

} // namespace

TEST_CASE("mcgovern classes: worked examples") {
    Fixture a2("A2");
    const auto orbits = orbit_table(a2.rs);

    KClass subreg_expected(a2.rs);
    subreg_expected.add_term(Weight{0, 0}, v_pow(1, -1));
    subreg_expected.add_term(Weight{1, 1}, v_pow(-1, 3));
    CHECK(mcgovern_class(a2.str, orbit_named(orbits, "[2,1]")) == subreg_expected);

    // regular orbit: empty product, a = 0
    CHECK(mcgovern_class(a2.str, orbit_named(orbits, "[3]")) == a2.str.e_class(Weight{0, 0}));

    Fixture b2("B2");
    KClass b2_expected(b2.rs);
    b2_expected.add_term(Weight{0, 0}, v_pow(1, -1));
    b2_expected.add_term(Weight{1, 0}, v_pow(-1, 3)); // the short dominant root
    CHECK(mcgovern_class(b2.str, orbit_named(orbit_table(b2.rs), "subregular")) == b2_expected);
}

TEST_CASE("mcgovern rejects half-integer scaling") {
    Fixture a1("A1");
    OrbitDatum doctored;
    doctored.name = "doctored";
    doctored.dynkin_labels = {1}; // puts the single root in grade 1
    doctored.codim = 1;
    CHECK_THROWS_AS(mcgovern_class(a1.str, doctored), NonIntegralExponent);
}

TEST_CASE("verify_mcgovern passes everywhere with the expected lambdas") {
    Fixture a2("A2");
    auto reports = verify_mcgovern(a2.cb);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports)
        CHECK(r.pass);
    // zero orbit lands at 2 rho, subregular at theta
    bool saw_zero = false, saw_subreg = false;
    for (const auto& r : reports) {
        if (r.detail.find("[1,1,1]") != std::string::npos) {
            CHECK(*r.lambda == Weight{2, 2});
            saw_zero = true;
        }
        if (r.detail.find("[2,1]") != std::string::npos) {
            CHECK(*r.lambda == Weight{1, 1});
            saw_subreg = true;
        }
    }
    CHECK(saw_zero);
    CHECK(saw_subreg);

    Fixture g2("G2");
    for (const auto& r : verify_mcgovern(g2.cb)) {
        CHECK(r.pass);
        if (r.detail.find("subregular") != std::string::npos)
            CHECK(*r.lambda == Weight{0, 1}); // the short dominant root
    }

    Fixture b2("B2");
    bool saw_regular = false;
    for (const auto& r : verify_mcgovern(b2.cb)) {
        CHECK(r.pass);
        if (r.detail.find("orbit regular") != std::string::npos) {
            CHECK(*r.lambda == Weight{0, 0}); // empty product, C(0) = e^0
            saw_regular = true;
        }
    }
    CHECK(saw_regular);
}

TEST_CASE("the zero orbit class is the lowest-cell product at 2 rho") {
    Fixture a2("A2");
    const auto orbits = orbit_table(a2.rs);
    const KClass m = mcgovern_class(a2.str, orbit_named(orbits, "[1,1,1]"));
    CHECK(m == lowest_cell_class(a2.str, 2 * a2.rs.rho()));
    CHECK(m == a2.cb.canonical_element(Weight{2, 2}).e_coords);
}

TEST_CASE("lowest cell formula") {
    Fixture a1("A1");
    // lambda = 2: v^-1 e^0 (e^0 - v^2 e^2) = v^-1 e^0 - v e^2 = C(2)
    KClass expected(a1.rs);
    expected.add_term(Weight{0}, v_pow(1, -1));
    expected.add_term(Weight{2}, v_pow(-1, 1));
    CHECK(lowest_cell_class(a1.str, Weight{2}) == expected);
    CHECK(lowest_cell_class(a1.str, Weight{2}) == a1.cb.canonical_element(Weight{2}).e_coords);
    CHECK_THROWS_AS(lowest_cell_class(a1.str, Weight{1}), DominanceViolation);

    for (const auto& r : verify_lowest_cell(a1.cb, 12))
        CHECK(r.pass);

    Fixture b2("B2");
    auto reports = verify_lowest_cell(b2.cb, 18);
    bool saw_two_rho = false;
    for (const auto& r : reports) {
        CHECK(r.pass);
        if (*r.lambda == 2 * b2.rs.rho())
            saw_two_rho = true;
    }
    CHECK(saw_two_rho);
}

TEST_CASE("very dominant weights") {
    const RootSystem a1 = RootSystem::build("A1");
    CHECK(is_very_dominant(a1, Weight{3}));
    CHECK(is_very_dominant(a1, Weight{0}));
    const RootSystem a2 = RootSystem::build("A2");
    CHECK_FALSE(is_very_dominant(a2, Weight{0, 0})); // 0 + alpha_1 is not dominant
    CHECK(is_very_dominant(a2, Weight{2, 2}));
    CHECK_FALSE(is_very_dominant(a2, Weight{0, 2}));
}

TEST_CASE("graham class and the minimal-weight checks") {
    Fixture a1("A1");
    KClass expected1(a1.rs);
    expected1.add_term(Weight{0}, LaurentPoly::one());
    expected1.add_term(Weight{1}, v_pow(1, 1));
    CHECK(graham_class(a1.str) == expected1);

    Fixture a2("A2");
    KClass expected2(a2.rs);
    expected2.add_term(Weight{0, 0}, LaurentPoly::one());
    expected2.add_term(Weight{1, 0}, v_pow(1, 2));
    expected2.add_term(Weight{0, 1}, v_pow(1, 2));
    CHECK(graham_class(a2.str) == expected2);

    Fixture g2("G2");
    CHECK(graham_class(g2.str) == g2.str.e_class(Weight{0, 0}));

    for (const char* label : {"A1", "A2", "B2", "G2"})
        for (Fixture f(label); const auto& r : verify_graham(f.cb))
            CHECK(r.pass);
}

TEST_CASE("subregular formulas") {
    for (const char* label : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
        Fixture f(label);
        const auto reports = verify_subregular(f.cb);
        for (const auto& r : reports)
            CHECK(r.pass);
        const bool expect_long = std::string(label) == "B2" || std::string(label) == "C2";
        CHECK(reports.size() == (expect_long ? 2u : 1u));
    }
    // the B2 nontrivial-bundle class lands at the long dominant root
    Fixture b2("B2");
    const auto reports = verify_subregular(b2.cb);
    CHECK(*reports[1].lambda == Weight{0, 2});
}

TEST_CASE("G2 subregular suite") {
    Fixture g2("G2");
    const auto reports = verify_g2(g2.cb);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports)
        CHECK(r.pass);
    CHECK_THROWS_AS(verify_g2(Fixture("A2").cb), UnsupportedTypeError);
}

TEST_CASE("SL_n lambda rule") {
    CHECK(sln_lambda_rule(3, Partition({2, 1})) == Weight{1, 1});
    CHECK(sln_lambda_rule(3, Partition({3})) == Weight{0, 0});
    CHECK(sln_lambda_rule(3, Partition({1, 1, 1})) == Weight{2, 2});
    CHECK(sln_lambda_rule(4, Partition({4})) == Weight{0, 0, 0});
    CHECK(sln_lambda_rule(4, Partition({1, 1, 1, 1})) == Weight{2, 2, 2});
    CHECK_THROWS_AS(sln_lambda_rule(4, Partition({2, 1})), NotAPartitionOfN);

    for (const char* label : {"A1", "A2", "A3"})
        for (Fixture f(label); const auto& r : verify_sln_rule(f.cb))
            CHECK(r.pass);
    CHECK_THROWS_AS(verify_sln_rule(Fixture("B2").cb), UnsupportedTypeError);
}

TEST_CASE("reports carry witnesses and verify_all aggregates") {
    Fixture b2("B2");
    const auto reports = verify_all(b2.cb, 16);
    CHECK(reports.size() > 8);
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.system == "B2");
        CHECK(!r.check.empty());
        CHECK(!r.detail.empty());
    }
}
