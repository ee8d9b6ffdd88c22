#ifndef KCANON_ROOT_SYSTEM_HPP
#define KCANON_ROOT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcanon/errors.hpp"
#include "kcanon/laurent.hpp"
#include "kcanon/weight.hpp"

namespace kcanon {

// A positive root, carried in both coordinate systems.
struct PositiveRoot {
    Weight fw;                          // fundamental-weight coordinates
    std::vector<std::int64_t> root;     // coordinates over the simple roots
    std::int64_t d;                     // half squared length, normalized so short roots have d = 1
    std::vector<std::int64_t> coroot;   // coordinates of alpha^vee over the simple coroots
    bool is_long = false;
};

struct WeylElement {
    std::vector<int> word;              // reduced word in simple reflections (0-based)
    int length = 0;
    // Action on fundamental-weight coordinates, row-major rank x rank.
    std::vector<std::int64_t> matrix;
};

// Immutable root datum for the supported types A1-A4, B2, B3, C2, C3, G2.
//
// Conventions, fixed once for the whole library:
//   cartan[i][j] = <alpha_j, alpha_i^vee>, so simple root alpha_j is column j.
//   B2: alpha_1 long, alpha_2 short   (cartan rows (2,-1),(-2,2))
//   C2: alpha_1 short, alpha_2 long   (transpose of B2)
//   G2: alpha_1 long, alpha_2 short, so omega_1 is the adjoint (14-dim)
//       fundamental weight and omega_2 the 7-dim one.
//   B3: alpha_3 short; C3: alpha_3 long.
class RootSystem {
public:
    static RootSystem build(char type_letter, int rank);
    static RootSystem build(const std::string& label);   // "G2", "a3", ... case-insensitive

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

    std::int64_t cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i) * rank_ + j]; }
    const Weight& simple_root(int i) const { return simple_roots_[i]; }
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
    std::size_t nu() const { return positive_roots_.size(); }
    const Weight& rho() const { return rho_; }

    const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
    std::size_t weyl_order() const { return weyl_.size(); }
    const WeylElement& w0() const { return weyl_[w0_index_]; }

    Weight apply(const WeylElement& w, const Weight& lambda) const;
    // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
    Weight reflect(int i, const Weight& lambda) const;
    Weight w0_action(const Weight& lambda) const;
    // Dominant representative of the Weyl orbit of lambda.
    Weight dominant_representative(Weight lambda) const;

    bool is_dominant(const Weight& lambda) const;
    // Exact coordinates of lambda over the simple roots, if in the root lattice.
    std::optional<std::vector<std::int64_t>> root_coords(const Weight& lambda) const;
    // mu <= lambda in dominance order (lambda - mu a nonnegative integer root combination).
    bool dominance_leq(const Weight& mu, const Weight& lambda) const;

    // <lambda, alpha^vee> for positive root alpha, exact.
    std::int64_t coroot_pairing(const Weight& lambda, const PositiveRoot& alpha) const;
    // <lambda, 2 rho^vee>; the straightening/termination measure.
    std::int64_t measure(const Weight& lambda) const;

    // Number of positive roots orthogonal to dominant lambda (length of the
    // longest element of the stabilizer). Throws DominanceViolation otherwise.
    std::int64_t nu_lambda(const Weight& lambda) const;

    // All dominant mu <= lambda, ascending in the fixed linear extension
    // (measure, then lexicographic). Includes lambda. Requires lambda dominant.
    std::vector<Weight> dominant_weights_below(const Weight& lambda) const;

    // All dominant weights with measure <= bound, same ordering.
    std::vector<Weight> dominant_weights_up_to(std::int64_t bound) const;

    // Dominance-least dominant weight of each root-lattice coset; contains 0.
    std::vector<Weight> minimal_weights() const;

    // Index of the fundamental group X/Q.
    std::int64_t fundamental_group_order() const { return cartan_det_; }

    Weight zero() const { return Weight(std::vector<std::int64_t>(rank_, 0)); }

    // Unique short (resp. long) dominant root. For simply-laced types every
    // root counts as short and there is no long dominant root.
    Weight short_dominant_root() const;
    std::optional<Weight> long_dominant_root() const;
    // Smallest index of a short (resp. long) simple root.
    int short_simple_index() const;
    std::optional<int> long_simple_index() const;
    bool simply_laced() const;

    // The q-graded vector partition function over the positive roots,
    // returned as a polynomial in v with q = v^2. Zero if beta is not a
    // nonnegative integer combination of positive roots.
    LaurentPoly q_partition(const Weight& beta) const;

private:
    RootSystem() = default;
    void generate_positive_roots();
    void enumerate_weyl();
    void validate() const;

    char type_ = 0;
    int rank_ = 0;
    std::vector<std::int64_t> cartan_;        // row-major
    std::vector<std::int64_t> cartan_adj_;    // adjugate of the Cartan matrix, row-major
    std::int64_t cartan_det_ = 0;
    std::vector<std::int64_t> sym_d_;          // d_i with d_i*a_ij = d_j*a_ji, short = 1
    std::vector<Weight> simple_roots_;
    std::vector<PositiveRoot> positive_roots_;
    Weight rho_;
    std::vector<WeylElement> weyl_;
    std::size_t w0_index_ = 0;
    std::vector<std::int64_t> two_rho_check_;  // 2 rho^vee over the simple coweights: pairing via dot
};

} // namespace kcanon

#endif
