#ifndef KCANON_VERIFY_HPP
#define KCANON_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcanon/canonical.hpp"
#include "kcanon/orbits.hpp"

namespace kcanon {

struct VerificationReport {
    std::string check;
    std::string system;
    bool pass = false;
    std::optional<Weight> lambda;
    std::string detail;
};

// v^{-a(O)} * product over the grade-0 and grade-1 positive roots of
// (e^0 - v^2 e^alpha), pushed forward to the K-group.
KClass mcgovern_class(const Straightener& str, const OrbitDatum& orbit);

// Per bundled orbit: the class is selfdual and equals C(lambda_O) on the nose.
std::vector<VerificationReport> verify_mcgovern(const CanonicalBasis& cb);

// v^{-nu} e^{lambda-2rho} * product over all positive roots of (e^0 - v^2 e^alpha).
// Requires lambda - 2rho dominant.
KClass lowest_cell_class(const Straightener& str, const Weight& lambda);

// lambda + any subset sum of positive roots stays dominant. Refuses |R+| > 12.
bool is_very_dominant(const RootSystem& rs, const Weight& lambda);

// Compares the Koszul product with the canonical element for every lambda
// with lambda - 2rho dominant and measure <= bound; lambda = 2rho always runs.
std::vector<VerificationReport> verify_lowest_cell(const CanonicalBasis& cb, std::int64_t bound);

// sum over minimal weights of v^{nu - nu_lambda} e^lambda.
KClass graham_class(const Straightener& str);

// C(lambda) = AJ(lambda) at every minimal weight, and the closed-form sum
// recomposes from the canonical elements.
std::vector<VerificationReport> verify_graham(const CanonicalBasis& cb);

// pushforward(v^{-1} e^0 - v e^{alpha_short-simple}) = C(short dominant root);
// for B2/C2 additionally pushforward(v(e^{alpha_short} - e^{alpha_long})) is
// +C(long dominant root).
std::vector<VerificationReport> verify_subregular(const CanonicalBasis& cb);

// The three subregular canonical elements of G2 and their sum identity.
std::vector<VerificationReport> verify_g2(const CanonicalBasis& cb);

// Dual-partition rule: the weighted Dynkin diagram of the orbit with the dual
// Jordan type, read as a weight for SL_n.
Weight sln_lambda_rule(std::int64_t n, const Partition& p);

// For every partition of n: the orbit class is canonical at the rule's weight.
std::vector<VerificationReport> verify_sln_rule(const CanonicalBasis& cb);

// Every verifier applicable to the system, in a fixed order.
std::vector<VerificationReport> verify_all(const CanonicalBasis& cb, std::int64_t bound);

} // namespace kcanon

#endif
