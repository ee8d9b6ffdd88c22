#include "kcanon/kclass.hpp"

#include <sstream>

namespace kcanon {

LaurentPoly KClass::coeff(const Weight& mu) const {
    auto it = coords_.find(mu);
    return it == coords_.end() ? LaurentPoly() : it->second;
}

void KClass::add_term(const Weight& mu, const LaurentPoly& c) {
    if (c.is_zero())
        return;
    if (rs_ && !rs_->is_dominant(mu))
        throw DominanceViolation("KClass term at non-dominant weight " + mu.str());
    auto it = coords_.find(mu);
    if (it == coords_.end()) {
        coords_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            coords_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& o) {
    if (rs_ == nullptr)
        rs_ = o.rs_;
    else if (o.rs_ && o.rs_ != rs_)
        throw MixedRootSystems("KClass addition across root systems");
    for (const auto& [w, c] : o.coords_)
        add_term(w, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    if (rs_ == nullptr)
        rs_ = o.rs_;
    else if (o.rs_ && o.rs_ != rs_)
        throw MixedRootSystems("KClass subtraction across root systems");
    for (const auto& [w, c] : o.coords_)
        add_term(w, -c);
    return *this;
}

KClass KClass::scaled(const LaurentPoly& c) const {
    KClass r;
    r.rs_ = rs_;
    if (c.is_zero())
        return r;
    for (const auto& [w, cc] : coords_)
        r.coords_.emplace(w, cc * c);
    return r;
}

KClass KClass::operator-() const {
    KClass r;
    r.rs_ = rs_;
    for (const auto& [w, c] : coords_)
        r.coords_.emplace(w, -c);
    return r;
}

std::string KClass::str() const {
    if (coords_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coords_) {
        if (!first)
            os << " + ";
        os << "(" << c.str() << ")*e[" << w.str() << "]";
        first = false;
    }
    return os.str();
}

GroupRingElement GroupRingElement::unit(const RootSystem& rs) {
    GroupRingElement g(rs);
    g.add_term(rs.zero(), LaurentPoly::one());
    return g;
}

void GroupRingElement::add_term(const Weight& w, const LaurentPoly& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    if (rs_ == nullptr)
        rs_ = o.rs_;
    else if (o.rs_ && o.rs_ != rs_)
        throw MixedRootSystems("group-ring addition across root systems");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.rs_ && b.rs_ && a.rs_ != b.rs_)
        throw MixedRootSystems("group-ring product across root systems");
    GroupRingElement r;
    r.rs_ = a.rs_ ? a.rs_ : b.rs_;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa + wb, ca * cb);
    return r;
}

GroupRingElement GroupRingElement::scaled(const LaurentPoly& c) const {
    GroupRingElement r;
    r.rs_ = rs_;
    if (c.is_zero())
        return r;
    for (const auto& [w, cc] : terms_)
        r.add_term(w, cc * c);
    return r;
}

GroupRingElement group_ring_product(const RootSystem& rs,
                                    const std::vector<GroupRingElement>& factors) {
    GroupRingElement acc = GroupRingElement::unit(rs);
    for (const auto& f : factors) {
        if (f.root_system() && f.root_system() != &rs)
            throw MixedRootSystems("group_ring_product: factor over a different root system");
        acc = acc * f;
    }
    return acc;
}

KClass Straightener::e_class(const Weight& lambda) const {
    if (!rs_.is_dominant(lambda))
        throw DominanceViolation("e_class: weight " + lambda.str() + " is not dominant");
    KClass x(rs_);
    x.add_term(lambda, LaurentPoly::one());
    return x;
}

KClass Straightener::aj_class(const Weight& lambda) const {
    if (!rs_.is_dominant(lambda))
        throw DominanceViolation("aj_class: weight " + lambda.str() + " is not dominant");
    const std::int64_t k = static_cast<std::int64_t>(rs_.nu()) - rs_.nu_lambda(lambda);
    KClass x(rs_);
    x.add_term(lambda, LaurentPoly::minus_v_pow(k));
    return x;
}

std::map<Weight, LaurentPoly> Straightener::to_aj_coords(const KClass& x) const {
    if (x.root_system() && x.root_system() != &rs_)
        throw MixedRootSystems("to_aj_coords: class over a different root system");
    std::map<Weight, LaurentPoly> aj;
    for (const auto& [mu, c] : x.coords()) {
        const std::int64_t k = static_cast<std::int64_t>(rs_.nu()) - rs_.nu_lambda(mu);
        aj.emplace(mu, c * LaurentPoly::minus_v_pow(-k));
    }
    return aj;
}

KClass Straightener::from_aj_coords(const std::map<Weight, LaurentPoly>& aj) const {
    KClass x(rs_);
    for (const auto& [mu, c] : aj) {
        const std::int64_t k = static_cast<std::int64_t>(rs_.nu()) - rs_.nu_lambda(mu);
        x.add_term(mu, c * LaurentPoly::minus_v_pow(k));
    }
    return x;
}

KClass Straightener::straighten(const Weight& lambda) const {
    const Weight dom = rs_.dominant_representative(lambda);
    const int bound = static_cast<int>(4 * (rs_.measure(dom) + static_cast<std::int64_t>(rs_.nu()) + 1));
    return straighten_rec(lambda, 0, bound);
}

KClass Straightener::straighten_rec(const Weight& lambda, int depth, int bound) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(lambda);
        if (it != memo_.end())
            return it->second;
    }
    if (depth > bound)
        throw NonTermination("straighten: recursion depth bound " + std::to_string(bound) +
                             " exceeded at weight " + lambda.str());

    int idx = -1;
    for (int i = 0; i < rs_.rank(); ++i)
        if (lambda[static_cast<std::size_t>(i)] < 0) {
            idx = i;
            break;
        }

    KClass result(rs_);
    if (idx < 0) {
        result.add_term(lambda, LaurentPoly::one());
    } else {
        const std::int64_t m = rs_.measure(lambda);
        const std::int64_t pairing = lambda[static_cast<std::size_t>(idx)];
        const Weight& alpha = rs_.simple_root(idx);
        const Weight si = rs_.reflect(idx, lambda);
        auto check = [&](const Weight& child) {
            if (rs_.measure(child) < m + 2)
                throw NonTermination("straighten: measure failed to increase at " + lambda.str());
        };
        const LaurentPoly v2 = LaurentPoly::monomial(1, 2);
        if (pairing == -1) {
            check(si);
            result = straighten_rec(si, depth + 1, bound).scaled(v2);
        } else {
            const Weight c1 = si - alpha;
            const Weight c3 = lambda + alpha;
            check(c1);
            check(si);
            check(c3);
            result = -straighten_rec(c1, depth + 1, bound);
            result += straighten_rec(si, depth + 1, bound).scaled(v2);
            result += straighten_rec(c3, depth + 1, bound).scaled(v2);
        }
    }

    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(lambda, result);
    return result;
}

KClass Straightener::straighten_with_strategy(const Weight& lambda,
                                              const RewriteStrategy& pick) const {
    const Weight dom = rs_.dominant_representative(lambda);
    const int bound = static_cast<int>(4 * (rs_.measure(dom) + static_cast<std::int64_t>(rs_.nu()) + 1));
    std::map<Weight, KClass> local;
    const LaurentPoly v2 = LaurentPoly::monomial(1, 2);

    std::function<KClass(const Weight&, int)> rec = [&](const Weight& w, int depth) -> KClass {
        auto it = local.find(w);
        if (it != local.end())
            return it->second;
        if (depth > bound)
            throw NonTermination("straighten_with_strategy: depth bound exceeded at " + w.str());
        std::vector<int> negatives;
        for (int i = 0; i < rs_.rank(); ++i)
            if (w[static_cast<std::size_t>(i)] < 0)
                negatives.push_back(i);
        KClass result(rs_);
        if (negatives.empty()) {
            result.add_term(w, LaurentPoly::one());
        } else {
            const int idx = pick(w, negatives);
            const std::int64_t pairing = w[static_cast<std::size_t>(idx)];
            const Weight& alpha = rs_.simple_root(idx);
            const Weight si = rs_.reflect(idx, w);
            if (pairing == -1) {
                result = rec(si, depth + 1).scaled(v2);
            } else {
                result = -rec(si - alpha, depth + 1);
                result += rec(si, depth + 1).scaled(v2);
                result += rec(w + alpha, depth + 1).scaled(v2);
            }
        }
        local.emplace(w, result);
        return result;
    };
    return rec(lambda, 0);
}

KClass Straightener::bar(const KClass& x) const {
    if (x.root_system() && x.root_system() != &rs_)
        throw MixedRootSystems("bar: class over a different root system");
    KClass r(rs_);
    for (const auto& [mu, c] : x.coords())
        r += straighten(rs_.w0_action(mu)).scaled(c.bar());
    return r;
}

KClass Straightener::pushforward(const GroupRingElement& g) const {
    if (g.root_system() && g.root_system() != &rs_)
        throw MixedRootSystems("pushforward: element over a different root system");
    KClass r(rs_);
    for (const auto& [w, c] : g.terms())
        r += straighten(w).scaled(c);
    return r;
}

} // namespace kcanon
