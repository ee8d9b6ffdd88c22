#include "kcanon/verify.hpp"

#include <sstream>

namespace kcanon {

namespace {

VerificationReport report(std::string check, const RootSystem& rs, bool pass,
                          std::optional<Weight> lambda, std::string detail) {
    VerificationReport r;
    r.check = std::move(check);
    r.system = rs.label();
    r.pass = pass;
    r.lambda = std::move(lambda);
    r.detail = std::move(detail);
    return r;
}

GroupRingElement koszul_factor(const RootSystem& rs, const PositiveRoot& alpha) {
    GroupRingElement f(rs);
    f.add_term(rs.zero(), LaurentPoly::one());
    f.add_term(alpha.fw, LaurentPoly::monomial(-1, 2));
    return f;
}

} // namespace

KClass mcgovern_class(const Straightener& str, const OrbitDatum& orbit) {
    const RootSystem& rs = str.rs();
    std::size_t g0 = 0, g1 = 0;
    const auto roots = graded_low_roots(rs, orbit.dynkin_labels, &g0, &g1);
    if (g1 % 2 != 0)
        throw NonIntegralExponent("orbit " + orbit.name + ": v^{-a(O)} needs a half-integer power");
    const std::int64_t a = static_cast<std::int64_t>(g0) + static_cast<std::int64_t>(g1) / 2;

    std::vector<GroupRingElement> factors;
    for (const auto& alpha : roots)
        factors.push_back(koszul_factor(rs, alpha));
    const GroupRingElement prod =
        group_ring_product(rs, factors).scaled(LaurentPoly::monomial(1, -a));
    return str.pushforward(prod);
}

std::vector<VerificationReport> verify_mcgovern(const CanonicalBasis& cb) {
    const RootSystem& rs = cb.rs();
    std::vector<VerificationReport> out;
    for (const auto& orbit : orbit_table(rs)) {
        const KClass m = mcgovern_class(cb.straightener(), orbit);
        const bool selfdual = cb.straightener().bar(m) == m;
        const auto hit = cb.is_canonical(m);
        std::ostringstream detail;
        detail << "orbit " << orbit.name << ", a=" << orbit.a_value;
        bool pass = selfdual && hit && hit->first == +1;
        std::optional<Weight> lambda;
        if (hit) {
            lambda = hit->second;
            detail << ", lambda_O=" << hit->second.str();
            if (hit->first != +1)
                detail << " with sign " << hit->first;
        } else {
            detail << ", not a canonical element";
        }
        if (!selfdual)
            detail << ", not selfdual";
        out.push_back(report("mcgovern", rs, pass, lambda, detail.str()));
    }
    return out;
}

KClass lowest_cell_class(const Straightener& str, const Weight& lambda) {
    const RootSystem& rs = str.rs();
    const Weight base = lambda - 2 * rs.rho();
    if (!rs.is_dominant(base))
        throw DominanceViolation("lowest_cell_class: " + lambda.str() + " - 2rho is not dominant");
    std::vector<GroupRingElement> factors;
    GroupRingElement lead(rs);
    lead.add_term(base, LaurentPoly::one());
    factors.push_back(lead);
    for (const auto& alpha : rs.positive_roots())
        factors.push_back(koszul_factor(rs, alpha));
    const GroupRingElement prod = group_ring_product(rs, factors)
                                      .scaled(LaurentPoly::monomial(1, -static_cast<std::int64_t>(rs.nu())));
    return str.pushforward(prod);
}

bool is_very_dominant(const RootSystem& rs, const Weight& lambda) {
    const auto& roots = rs.positive_roots();
    if (roots.size() > 12)
        throw Error("is_very_dominant: refusing 2^" + std::to_string(roots.size()) + " subsets");
    const std::size_t n = roots.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Weight w = lambda;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i))
                w = w + roots[i].fw;
        if (!rs.is_dominant(w))
            return false;
    }
    return true;
}

std::vector<VerificationReport> verify_lowest_cell(const CanonicalBasis& cb, std::int64_t bound) {
    const RootSystem& rs = cb.rs();
    const Weight two_rho = 2 * rs.rho();
    std::vector<Weight> sweep;
    for (const auto& mu : rs.dominant_weights_up_to(bound - rs.measure(two_rho)))
        sweep.push_back(two_rho + mu);
    if (sweep.empty() || sweep.front() != two_rho)
        sweep.insert(sweep.begin(), two_rho); // the most interesting case always runs

    std::vector<VerificationReport> out;
    for (const auto& lambda : sweep) {
        const KClass lhs = lowest_cell_class(cb.straightener(), lambda);
        const KClass rhs = cb.canonical_element(lambda).e_coords;
        const bool pass = lhs == rhs;
        std::ostringstream detail;
        detail << (is_very_dominant(rs, lambda) ? "very dominant" : "not very dominant");
        if (!pass)
            detail << "; product != C(" << lambda.str() << ")";
        out.push_back(report("lowest-cell", rs, pass, lambda, detail.str()));
    }
    return out;
}

KClass graham_class(const Straightener& str) {
    const RootSystem& rs = str.rs();
    KClass g(rs);
    for (const auto& lambda : rs.minimal_weights()) {
        const std::int64_t k = static_cast<std::int64_t>(rs.nu()) - rs.nu_lambda(lambda);
        g.add_term(lambda, LaurentPoly::monomial(1, k));
    }
    return g;
}

std::vector<VerificationReport> verify_graham(const CanonicalBasis& cb) {
    const RootSystem& rs = cb.rs();
    std::vector<VerificationReport> out;
    KClass recomposed(rs);
    for (const auto& lambda : rs.minimal_weights()) {
        const KClass c = cb.canonical_element(lambda).e_coords;
        const bool pass = c == cb.straightener().aj_class(lambda);
        out.push_back(report("graham-minimal", rs, pass, lambda,
                             pass ? "C = AJ" : "C(" + lambda.str() + ") != AJ(" + lambda.str() + ")"));
        const std::int64_t k = static_cast<std::int64_t>(rs.nu()) - rs.nu_lambda(lambda);
        recomposed += c.scaled(LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, 0));
    }
    const bool sum_ok = recomposed == graham_class(cb.straightener());
    out.push_back(report("graham-sum", rs, sum_ok, std::nullopt,
                         sum_ok ? "closed form matches sum of (-1)^{nu-nu_lambda} C(lambda)"
                                : "closed form mismatch"));
    return out;
}

std::vector<VerificationReport> verify_subregular(const CanonicalBasis& cb) {
    const RootSystem& rs = cb.rs();
    const Straightener& str = cb.straightener();
    std::vector<VerificationReport> out;

    const int is = rs.short_simple_index();
    GroupRingElement g(rs);
    g.add_term(rs.zero(), LaurentPoly::monomial(1, -1));
    g.add_term(rs.simple_root(is), LaurentPoly::monomial(-1, 1));
    const Weight lambda_o = rs.short_dominant_root();
    const bool pass_o = str.pushforward(g) == cb.canonical_element(lambda_o).e_coords;
    out.push_back(report("subregular", rs, pass_o, lambda_o,
                         pass_o ? "v^-1 e^0 - v e^{alpha_short} = C(short dominant root)"
                                : "trivial-bundle class mismatch"));

    if (!rs.simply_laced() && rs.rank() == 2 && rs.type() != 'G') {
        const int il = *rs.long_simple_index();
        GroupRingElement h(rs);
        h.add_term(rs.simple_root(is), LaurentPoly::monomial(1, 1));
        h.add_term(rs.simple_root(il), LaurentPoly::monomial(-1, 1));
        const Weight lambda_v = *rs.long_dominant_root();
        const auto hit = cb.is_canonical(str.pushforward(h));
        const bool pass_v = hit && hit->first == +1 && hit->second == lambda_v;
        out.push_back(report("subregular-long", rs, pass_v, lambda_v,
                             pass_v ? "v(e^{alpha_short} - e^{alpha_long}) = C(long dominant root)"
                                    : "nontrivial-bundle class mismatch"));
    }
    return out;
}

std::vector<VerificationReport> verify_g2(const CanonicalBasis& cb) {
    const RootSystem& rs = cb.rs();
    if (rs.type() != 'G')
        throw UnsupportedTypeError("verify_g2 requires G2");
    std::vector<VerificationReport> out;

    const Weight w1{1, 0}, w2{0, 1}, two_w2{0, 2}, zero{0, 0};
    auto mono = [](int c, std::int64_t k) { return LaurentPoly::monomial(c, k); };

    // v^-1 (e^0 - v^6 e^{w2})
    KClass exp_w2(rs);
    exp_w2.add_term(zero, mono(1, -1));
    exp_w2.add_term(w2, mono(-1, 5));
    // v^-1 (v^2 e^{w2} - v^6 e^{w1})
    KClass exp_w1(rs);
    exp_w1.add_term(w2, mono(1, 1));
    exp_w1.add_term(w1, mono(-1, 5));
    // v^-1 (v^4 e^{w1} - v^6 e^{2w2})
    KClass exp_2w2(rs);
    exp_2w2.add_term(w1, mono(1, 3));
    exp_2w2.add_term(two_w2, mono(-1, 5));

    const CanonicalElement ce_w2 = cb.canonical_element(w2);
    const CanonicalElement ce_w1 = cb.canonical_element(w1);
    const CanonicalElement ce_2w2 = cb.canonical_element(two_w2);
    const KClass& c_w2 = ce_w2.e_coords;
    const KClass& c_w1 = ce_w1.e_coords;
    const KClass& c_2w2 = ce_2w2.e_coords;

    using AJ = std::map<Weight, LaurentPoly>;
    const bool aj_w2 = ce_w2.aj_coords == AJ{{w2, LaurentPoly::one()}, {zero, mono(1, -1)}};
    const bool aj_w1 = ce_w1.aj_coords == AJ{{w1, LaurentPoly::one()}, {w2, mono(-1, -4)}};
    const bool aj_2w2 = ce_2w2.aj_coords == AJ{{two_w2, LaurentPoly::one()}, {w1, mono(-1, -2)}};

    out.push_back(report("g2-subregular", rs, aj_w2 && c_w2 == exp_w2, w2,
                         "C(w2) = AJ(w2) + v^-1 AJ(0) = v^-1(e^0 - v^6 e^{w2})"));
    out.push_back(report("g2-subregular", rs, aj_w1 && c_w1 == exp_w1, w1,
                         "C(w1) = AJ(w1) - v^-4 AJ(w2) = v^-1(v^2 e^{w2} - v^6 e^{w1})"));
    out.push_back(report("g2-subregular", rs, aj_2w2 && c_2w2 == exp_2w2, two_w2,
                         "C(2w2) = AJ(2w2) - v^-2 AJ(w1) = v^-1(v^4 e^{w1} - v^6 e^{2w2})"));

    // universal cover of the subregular orbit:
    // C(w2) + 2C(w1) + C(2w2) = v^-1(e^0 + 2v^2 e^{w2} + v^4 e^{w1}
    //                                 - v^6 e^{w2} - 2v^6 e^{w1} - v^6 e^{2w2})
    KClass expected_sum(rs);
    expected_sum.add_term(zero, mono(1, -1));
    expected_sum.add_term(w2, mono(2, 1) + mono(-1, 5));
    expected_sum.add_term(w1, mono(1, 3) + mono(-2, 5));
    expected_sum.add_term(two_w2, mono(-1, 5));
    const KClass sum = c_w2 + c_w1.scaled(mono(2, 0)) + c_2w2;
    out.push_back(report("g2-cover-sum", rs, sum == expected_sum, std::nullopt,
                         "C(w2) + 2C(w1) + C(2w2) matches the displayed expansion"));
    return out;
}

Weight sln_lambda_rule(std::int64_t n, const Partition& p) {
    return Weight(partition_to_weighted_dynkin(dual_partition(p), n));
}

std::vector<VerificationReport> verify_sln_rule(const CanonicalBasis& cb) {
    const RootSystem& rs = cb.rs();
    if (rs.type() != 'A')
        throw UnsupportedTypeError("verify_sln_rule requires type A");
    const std::int64_t n = rs.rank() + 1;
    std::vector<VerificationReport> out;
    for (const auto& orbit : orbit_table(rs)) {
        const Weight expected = sln_lambda_rule(n, orbit.jordan_type);
        const auto hit = cb.is_canonical(mcgovern_class(cb.straightener(), orbit));
        const bool pass = hit && hit->first == +1 && hit->second == expected;
        std::ostringstream detail;
        detail << "p=" << orbit.jordan_type.str() << ", p'=" << dual_partition(orbit.jordan_type).str();
        if (!pass && hit)
            detail << ", got lambda=" << hit->second.str();
        out.push_back(report("sln-rule", rs, pass, expected, detail.str()));
    }
    return out;
}

std::vector<VerificationReport> verify_all(const CanonicalBasis& cb, std::int64_t bound) {
    const RootSystem& rs = cb.rs();
    std::vector<VerificationReport> out;
    const bool has_orbits =
        rs.type() == 'A' ? rs.rank() <= 3 : (rs.rank() == 2);
    if (has_orbits) {
        for (auto& r : verify_mcgovern(cb))
            out.push_back(std::move(r));
        if (rs.type() == 'A')
            for (auto& r : verify_sln_rule(cb))
                out.push_back(std::move(r));
    }
    for (auto& r : verify_subregular(cb))
        out.push_back(std::move(r));
    for (auto& r : verify_graham(cb))
        out.push_back(std::move(r));
    if (rs.type() == 'G')
        for (auto& r : verify_g2(cb))
            out.push_back(std::move(r));
    for (auto& r : verify_lowest_cell(cb, bound))
        out.push_back(std::move(r));
    return out;
}

} // namespace kcanon
