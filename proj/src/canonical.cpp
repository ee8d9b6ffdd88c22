#include "kcanon/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace kcanon {

std::map<Weight, LaurentPoly> CanonicalBasis::r_matrix_column(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = r_cache_.find(lambda);
        if (it != r_cache_.end())
            return it->second;
    }
    const RootSystem& rs = str_.rs();
    if (!rs.is_dominant(lambda))
        throw DominanceViolation("r_matrix_column: weight " + lambda.str() + " is not dominant");

    const KClass barred = str_.bar(str_.aj_class(lambda));
    std::map<Weight, LaurentPoly> col = str_.to_aj_coords(barred);

    auto diag = col.find(lambda);
    if (diag == col.end() || diag->second != LaurentPoly::one())
        throw TriangularityViolation("bar(AJ(" + lambda.str() + ")) has no unit diagonal");
    for (const auto& [mu, c] : col)
        if (!rs.dominance_leq(mu, lambda))
            throw TriangularityViolation("bar(AJ(" + lambda.str() + ")) supported at " + mu.str() +
                                         " outside the dominance ideal");

    std::lock_guard<std::mutex> lock(mutex_);
    r_cache_.emplace(lambda, col);
    return col;
}

CanonicalElement CanonicalBasis::canonical_element(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(lambda);
        if (it != cache_.end())
            return it->second;
    }
    const RootSystem& rs = str_.rs();
    if (!rs.is_dominant(lambda))
        throw DominanceViolation("canonical_element: weight " + lambda.str() + " is not dominant");

    const std::vector<Weight> below = rs.dominant_weights_below(lambda);

    // r-matrix columns for every weight in the ideal, keyed by column.
    std::map<Weight, std::map<Weight, LaurentPoly>> r;
    for (const auto& nu : below)
        r.emplace(nu, r_matrix_column(nu));

    // b_{mu} - bar(b_{mu}) = sum_{mu < nu <= lambda} r_{mu,nu} bar(b_{nu}),
    // solved downwards through the linear extension.
    std::map<Weight, LaurentPoly> b;
    b.emplace(lambda, LaurentPoly::one());
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
        const Weight& mu = *it;
        if (mu == lambda)
            continue;
        LaurentPoly rhs;
        for (const auto& [nu, bnu] : b) {
            const auto& col = r.at(nu);
            auto entry = col.find(mu);
            if (entry != col.end() && nu != mu)
                rhs += entry->second * bnu.bar();
        }
        LaurentPoly bmu = solve_antiinvariant(rhs);
        if (!bmu.is_zero()) {
            if (!bmu.is_strictly_negative())
                throw TriangularityViolation("b_{" + mu.str() + "," + lambda.str() +
                                             "} not in v^-1 Z[v^-1]: " + bmu.str());
            b.emplace(mu, std::move(bmu));
        }
    }

    CanonicalElement ce;
    ce.lambda = lambda;
    ce.aj_coords = b;
    ce.e_coords = str_.from_aj_coords(b);
    if (str_.bar(ce.e_coords) != ce.e_coords)
        throw Error("canonical_element: C(" + lambda.str() + ") is not bar-invariant");

    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(lambda, ce);
    return ce;
}

BMatrix CanonicalBasis::b_matrix(std::vector<Weight> weights, int threads) const {
    const RootSystem& rs = str_.rs();
    for (const auto& w : weights)
        if (!rs.is_dominant(w))
            throw DominanceViolation("b_matrix: weight " + w.str() + " is not dominant");

    std::sort(weights.begin(), weights.end(), [&](const Weight& a, const Weight& b) {
        const auto ma = rs.measure(a), mb = rs.measure(b);
        if (ma != mb)
            return ma < mb;
        return a < b;
    });
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

    std::vector<CanonicalElement> cols(weights.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < weights.size(); ++i)
            cols[i] = canonical_element(weights[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex err_mutex;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= weights.size())
                        return;
                    try {
                        cols[i] = canonical_element(weights[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool)
            th.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    // A square view of the b-matrix over the requested index set; b-columns
    // over a downward-closed set (the usual sweep) lose nothing.
    BMatrix m;
    m.columns = weights;
    m.rows = weights;
    const std::set<Weight> index(weights.begin(), weights.end());
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (const auto& [mu, c] : cols[i].aj_coords)
            if (index.count(mu))
                m.entries.emplace(std::make_pair(mu, weights[i]), c);
    return m;
}

std::optional<std::pair<int, Weight>> CanonicalBasis::is_canonical(const KClass& x) const {
    for (int sign : {+1, -1}) {
        const KClass y = sign == 1 ? x : -x;
        const auto aj = str_.to_aj_coords(y);
        const Weight* top = nullptr;
        bool shaped = true;
        for (const auto& [mu, c] : aj) {
            if (c.is_strictly_negative())
                continue;
            if (top != nullptr || c != LaurentPoly::one()) {
                shaped = false;
                break;
            }
            top = &mu;
        }
        if (!shaped || top == nullptr)
            continue;
        const Weight lambda = *top;
        if (canonical_element(lambda).e_coords == y)
            return std::make_pair(sign, lambda);
    }
    return std::nullopt;
}

} // namespace kcanon
