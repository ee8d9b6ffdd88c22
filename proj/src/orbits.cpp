#include "kcanon/orbits.hpp"

#include <algorithm>
#include <functional>

namespace kcanon {

Partition::Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1]))
            throw NotAPartitionOfN("not weakly decreasing positive parts");
    }
}

std::int64_t Partition::sum() const {
    std::int64_t s = 0;
    for (auto p : parts)
        s += p;
    return s;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

Partition dual_partition(const Partition& p) {
    std::vector<std::int64_t> d;
    if (p.parts.empty())
        return Partition{};
    for (std::int64_t i = 1; i <= p.parts[0]; ++i) {
        std::int64_t c = 0;
        for (auto q : p.parts)
            if (q >= i)
                ++c;
        d.push_back(c);
    }
    return Partition(std::move(d));
}

std::vector<Partition> partitions_of(std::int64_t n) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<std::int64_t> partition_to_weighted_dynkin(const Partition& p, std::int64_t n) {
    if (p.sum() != n || n < 1)
        throw NotAPartitionOfN(p.str() + " is not a partition of " + std::to_string(n));
    std::vector<std::int64_t> h;
    for (auto part : p.parts)
        for (std::int64_t v = part - 1; v >= 1 - part; v -= 2)
            h.push_back(v);
    std::sort(h.rbegin(), h.rend());
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n) - 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        labels[i] = h[i] - h[i + 1];
    return labels;
}

std::vector<PositiveRoot> graded_low_roots(const RootSystem& rs,
                                           const std::vector<std::int64_t>& labels,
                                           std::size_t* n_grade0, std::size_t* n_grade1) {
    std::vector<PositiveRoot> out;
    std::size_t g0 = 0, g1 = 0;
    for (const auto& pr : rs.positive_roots()) {
        std::int64_t grade = 0;
        for (int j = 0; j < rs.rank(); ++j)
            grade += labels[static_cast<std::size_t>(j)] * pr.root[static_cast<std::size_t>(j)];
        if (grade == 0) {
            ++g0;
            out.push_back(pr);
        } else if (grade == 1) {
            ++g1;
            out.push_back(pr);
        }
    }
    if (n_grade0)
        *n_grade0 = g0;
    if (n_grade1)
        *n_grade1 = g1;
    return out;
}

namespace {

OrbitDatum make_orbit(const RootSystem& rs, std::string name, std::vector<std::int64_t> labels,
                      std::int64_t codim, Partition jordan = {}) {
    OrbitDatum o;
    o.name = std::move(name);
    o.dynkin_labels = std::move(labels);
    o.codim = codim;
    o.jordan_type = std::move(jordan);

    std::size_t g0 = 0, g1 = 0;
    graded_low_roots(rs, o.dynkin_labels, &g0, &g1);
    if (g1 % 2 != 0)
        throw Error("orbit " + o.name + ": a(O) not integral");
    o.a_value = static_cast<std::int64_t>(g0) + static_cast<std::int64_t>(g1) / 2;
    if (2 * o.a_value != o.codim)
        throw Error("orbit " + o.name + ": a(O) != codim/2 (got a=" + std::to_string(o.a_value) +
                    ", codim=" + std::to_string(o.codim) + ")");
    return o;
}

// dim of the sl_n orbit with Jordan type p is n^2 - sum of squares of the
// dual parts; the cone has dimension n^2 - n.
std::int64_t type_a_codim(const Partition& p, std::int64_t n) {
    std::int64_t s = 0;
    for (auto q : dual_partition(p).parts)
        s += q * q;
    return s - n;
}

} // namespace

std::vector<OrbitDatum> orbit_table(const RootSystem& rs) {
    std::vector<OrbitDatum> out;
    if (rs.type() == 'A' && rs.rank() <= 3) {
        const std::int64_t n = rs.rank() + 1;
        for (const auto& p : partitions_of(n))
            out.push_back(make_orbit(rs, p.str(), partition_to_weighted_dynkin(p, n),
                                     type_a_codim(p, n), p));
    } else if (rs.type() == 'B' && rs.rank() == 2) {
        out.push_back(make_orbit(rs, "zero", {0, 0}, 8));
        out.push_back(make_orbit(rs, "minimal", {0, 1}, 4));
        out.push_back(make_orbit(rs, "subregular", {2, 0}, 2));
        out.push_back(make_orbit(rs, "regular", {2, 2}, 0));
    } else if (rs.type() == 'C' && rs.rank() == 2) {
        out.push_back(make_orbit(rs, "zero", {0, 0}, 8));
        out.push_back(make_orbit(rs, "minimal", {1, 0}, 4));
        out.push_back(make_orbit(rs, "subregular", {0, 2}, 2));
        out.push_back(make_orbit(rs, "regular", {2, 2}, 0));
    } else if (rs.type() == 'G') {
        out.push_back(make_orbit(rs, "zero", {0, 0}, 12));
        out.push_back(make_orbit(rs, "minimal", {1, 0}, 6));
        out.push_back(make_orbit(rs, "short-root", {0, 1}, 4));
        out.push_back(make_orbit(rs, "subregular", {2, 0}, 2));
        out.push_back(make_orbit(rs, "regular", {2, 2}, 0));
    } else {
        throw UnsupportedTypeError("no bundled orbit table for " + rs.label());
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitDatum& a, const OrbitDatum& b) { return a.codim > b.codim; });
    return out;
}

} // namespace kcanon
