#include "kcanon/gamma.hpp"

namespace kcanon {

LaurentPoly GammaMap::q_partition_cached(const Weight& beta) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = part_cache_.find(beta);
        if (it != part_cache_.end())
            return it->second;
    }
    LaurentPoly p = rs_.q_partition(beta);
    std::lock_guard<std::mutex> lock(mutex_);
    part_cache_.emplace(beta, p);
    return p;
}

LaurentPoly GammaMap::kostka_q(const Weight& mu, const Weight& lambda) const {
    if (!rs_.is_dominant(mu))
        throw DominanceViolation("kostka_q: weight " + mu.str() + " is not dominant");
    if (!rs_.is_dominant(lambda))
        throw DominanceViolation("kostka_q: weight " + lambda.str() + " is not dominant");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = kostka_cache_.find({mu, lambda});
        if (it != kostka_cache_.end())
            return it->second;
    }
    LaurentPoly acc;
    if (rs_.dominance_leq(mu, lambda)) {
        const Weight target = mu + rs_.rho();
        for (const auto& w : rs_.weyl_elements()) {
            const LaurentPoly p = q_partition_cached(rs_.apply(w, lambda + rs_.rho()) - target);
            if (p.is_zero())
                continue;
            if (w.length % 2 == 0)
                acc += p;
            else
                acc -= p;
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    kostka_cache_.emplace(std::make_pair(mu, lambda), acc);
    return acc;
}

GradedCharacter GammaMap::gamma_map(const KClass& x, std::int64_t cutoff) const {
    if (cutoff < 0)
        throw Error("gamma_map: cutoff must be nonnegative");
    if (x.root_system() && x.root_system() != &rs_)
        throw MixedRootSystems("gamma_map: class over a different root system");
    GradedCharacter gc;
    gc.rs = &rs_;
    gc.cutoff = cutoff;
    for (const auto& mu : rs_.dominant_weights_up_to(cutoff)) {
        LaurentPoly coeff;
        for (const auto& [lam, c] : x.coords()) {
            if (!rs_.dominance_leq(lam, mu))
                continue;
            coeff += c * kostka_q(lam, mu);
        }
        if (!coeff.is_zero())
            gc.mults.emplace(mu, std::move(coeff));
    }
    return gc;
}

} // namespace kcanon
