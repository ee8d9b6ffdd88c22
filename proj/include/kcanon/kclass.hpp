#ifndef KCANON_KCLASS_HPP
#define KCANON_KCLASS_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kcanon/laurent.hpp"
#include "kcanon/root_system.hpp"
#include "kcanon/weight.hpp"

namespace kcanon {

// Element of the equivariant K-group in the dominant e-basis: a finite
// Laurent-polynomial combination of e^mu over dominant mu. No zero
// coefficients are stored; equality is structural.
class KClass {
public:
    KClass() = default;
    explicit KClass(const RootSystem& rs) : rs_(&rs) {}

    const RootSystem* root_system() const { return rs_; }
    const std::map<Weight, LaurentPoly>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    LaurentPoly coeff(const Weight& mu) const;

    // Adds c * e^mu; mu must be dominant.
    void add_term(const Weight& mu, const LaurentPoly& c);

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    KClass scaled(const LaurentPoly& c) const;
    KClass operator-() const;

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

    std::string str() const;

private:
    const RootSystem* rs_ = nullptr;
    std::map<Weight, LaurentPoly> coords_;
};

// Formal group-ring element: weights need not be dominant, multiplication is
// e^lambda * e^mu = e^{lambda+mu}. Products are formed here first and only
// then interpreted in the K-group via Straightener::pushforward.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(const RootSystem& rs) : rs_(&rs) {}

    static GroupRingElement unit(const RootSystem& rs);

    const RootSystem* root_system() const { return rs_; }
    const std::map<Weight, LaurentPoly>& terms() const { return terms_; }

    void add_term(const Weight& w, const LaurentPoly& c);

    GroupRingElement& operator+=(const GroupRingElement& o);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement scaled(const LaurentPoly& c) const;

private:
    const RootSystem* rs_ = nullptr;
    std::map<Weight, LaurentPoly> terms_;
};

// Product of a list of factors over one root system; empty product is e^0.
GroupRingElement group_ring_product(const RootSystem& rs,
                                    const std::vector<GroupRingElement>& factors);

// Picks the index of the simple root to rewrite at, given the weight and the
// indices with negative pairing (nonempty).
using RewriteStrategy = std::function<int(const Weight&, const std::vector<int>&)>;

// Expansion engine for e^lambda at arbitrary lambda, with the memoized
// straightening recursion, the bar involution, AJ rescaling and pushforward.
// Thread-safe: the memo table accepts idempotent re-inserts.
class Straightener {
public:
    explicit Straightener(const RootSystem& rs) : rs_(rs) {}
    Straightener(const Straightener&) = delete;

    const RootSystem& rs() const { return rs_; }

    // e^lambda in the dominant e-basis; identity on dominant lambda.
    // Deterministic: always rewrites at the smallest index with negative
    // pairing. Memoized.
    KClass straighten(const Weight& lambda) const;

    // Same expansion under a caller-chosen rewrite strategy; memoized only
    // within the call (the strategy must be a function of the weight).
    KClass straighten_with_strategy(const Weight& lambda, const RewriteStrategy& pick) const;

    KClass e_class(const Weight& lambda) const;     // e^lambda, lambda dominant
    KClass aj_class(const Weight& lambda) const;    // (-v)^{nu - nu_lambda} e^lambda

    std::map<Weight, LaurentPoly> to_aj_coords(const KClass& x) const;
    KClass from_aj_coords(const std::map<Weight, LaurentPoly>& aj) const;

    // sum of bar(c_mu) e^{w0 mu}, straightened. An involution.
    KClass bar(const KClass& x) const;

    KClass pushforward(const GroupRingElement& g) const;

private:
    KClass straighten_rec(const Weight& lambda, int depth, int bound) const;

    const RootSystem& rs_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, KClass> memo_;
};

} // namespace kcanon

#endif
