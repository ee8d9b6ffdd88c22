#ifndef KCANON_ORBITS_HPP
#define KCANON_ORBITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kcanon/root_system.hpp"

namespace kcanon {

// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<std::int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::int64_t> p);
    Partition(std::initializer_list<std::int64_t> p) : Partition(std::vector<std::int64_t>(p)) {}

    std::int64_t sum() const;
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

Partition dual_partition(const Partition& p);
std::vector<Partition> partitions_of(std::int64_t n);

// Weighted Dynkin labels of the sl_n nilpotent orbit with Jordan type p:
// concatenate the strings (p_j-1, p_j-3, ..., 1-p_j), sort descending into h,
// labels a_i = h_i - h_{i+1}. Throws NotAPartitionOfN unless p partitions n.
std::vector<std::int64_t> partition_to_weighted_dynkin(const Partition& p, std::int64_t n);

struct OrbitDatum {
    std::string name;
    std::vector<std::int64_t> dynkin_labels; // over the simple roots, values in {0,1,2}
    std::int64_t a_value = 0;                // a(O), integral for every bundled orbit
    std::int64_t codim = 0;                  // codim of O in the nilpotent cone
    Partition jordan_type;                   // type A only; empty otherwise

    bool has_partition() const { return !jordan_type.parts.empty(); }
};

// Grading of the positive roots induced by the labels: the grade of a root is
// the label-weighted sum of its root coordinates. Returns the roots of grade 0
// and 1 concatenated (the index set of the orbit product formula).
std::vector<PositiveRoot> graded_low_roots(const RootSystem& rs,
                                           const std::vector<std::int64_t>& labels,
                                           std::size_t* n_grade0 = nullptr,
                                           std::size_t* n_grade1 = nullptr);

// Bundled nilpotent-orbit data for A1, A2, A3, B2, C2, G2, ordered by
// decreasing codimension (zero orbit first, regular last). Validated against
// a(O) = |R+0| + |R+1|/2 = codim/2 at load. Throws UnsupportedType otherwise.
std::vector<OrbitDatum> orbit_table(const RootSystem& rs);

} // namespace kcanon

#endif
