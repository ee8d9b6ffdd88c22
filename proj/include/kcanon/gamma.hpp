#ifndef KCANON_GAMMA_HPP
#define KCANON_GAMMA_HPP

#include <map>
#include <mutex>

#include "kcanon/kclass.hpp"

namespace kcanon {

// Truncated graded character: multiplicities of the irreducibles V_mu with
// <mu, 2 rho^vee> <= cutoff. Mirrors KClass but keyed by representation labels.
struct GradedCharacter {
    const RootSystem* rs = nullptr;
    std::int64_t cutoff = 0;
    std::map<Weight, LaurentPoly> mults;

    LaurentPoly coeff(const Weight& mu) const {
        auto it = mults.find(mu);
        return it == mults.end() ? LaurentPoly() : it->second;
    }
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
        return a.mults == b.mults;
    }
};

// Global-sections expansion of K-classes into graded multiplicities, realized
// by the alternating Weyl-group sum over the q-graded vector partition
// function with q = v^2.
class GammaMap {
public:
    explicit GammaMap(const RootSystem& rs) : rs_(rs) {}
    GammaMap(const GammaMap&) = delete;

    const RootSystem& rs() const { return rs_; }

    // sum_w (-1)^{l(w)} P_q(w(lambda+rho) - (mu+rho)): the q-analog of the
    // multiplicity of the weight mu in V_lambda. Zero unless mu <= lambda.
    LaurentPoly kostka_q(const Weight& mu, const Weight& lambda) const;

    // Coefficient of V_mu is sum_lambda c_lambda * kostka_q(lambda, mu) over
    // the e-basis coordinates of x, for all mu with measure <= cutoff.
    GradedCharacter gamma_map(const KClass& x, std::int64_t cutoff) const;

private:
    LaurentPoly q_partition_cached(const Weight& beta) const;

    const RootSystem& rs_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, LaurentPoly> part_cache_;
    mutable std::map<std::pair<Weight, Weight>, LaurentPoly> kostka_cache_;
};

} // namespace kcanon

#endif
