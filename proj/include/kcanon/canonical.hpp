#ifndef KCANON_CANONICAL_HPP
#define KCANON_CANONICAL_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "kcanon/kclass.hpp"

namespace kcanon {

// The selfdual basis element attached to a dominant weight: aj_coords is the
// column of b-polynomials (diagonal 1, off-diagonal in v^{-1}Z[v^{-1}]) and
// e_coords its expansion in the dominant e-basis, fixed by the bar involution.
struct CanonicalElement {
    Weight lambda;
    std::map<Weight, LaurentPoly> aj_coords;
    KClass e_coords;
};

struct BMatrix {
    std::vector<Weight> columns;  // fixed linear extension order
    std::vector<Weight> rows;     // union of column supports, same order
    std::map<std::pair<Weight, Weight>, LaurentPoly> entries; // (row, column) -> b
};

class CanonicalBasis {
public:
    explicit CanonicalBasis(const Straightener& str) : str_(str) {}
    CanonicalBasis(const CanonicalBasis&) = delete;

    const Straightener& straightener() const { return str_; }
    const RootSystem& rs() const { return str_.rs(); }

    // Coordinates of bar(AJ(lambda)) in the AJ basis. Asserts the diagonal
    // coefficient is 1 and the support lies below lambda in dominance order.
    std::map<Weight, LaurentPoly> r_matrix_column(const Weight& lambda) const;

    // The triangular selfdualization recursion. All internal consistency
    // checks (anti-invariance of every right-hand side, triangularity,
    // bar-invariance of the result) are hard errors.
    CanonicalElement canonical_element(const Weight& lambda) const;

    // Assembles columns for the given dominant weights; threads > 1 computes
    // columns concurrently (output is identical by construction).
    BMatrix b_matrix(std::vector<Weight> weights, int threads = 1) const;

    // If x (or -x) equals some C(lambda), returns (sign, lambda).
    std::optional<std::pair<int, Weight>> is_canonical(const KClass& x) const;

private:
    const Straightener& str_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, CanonicalElement> cache_;
    mutable std::map<Weight, std::map<Weight, LaurentPoly>> r_cache_;
};

} // namespace kcanon

#endif
