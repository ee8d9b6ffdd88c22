#ifndef KCANON_WEIGHT_HPP
#define KCANON_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kcanon {

// Integer vector in the fundamental-weight basis: coordinate i is <lambda, alpha_i^vee>.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

    std::size_t rank() const { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    std::int64_t& operator[](std::size_t i) { return coords[i]; }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            r.coords[i] += b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            r.coords[i] -= b.coords[i];
        return r;
    }
    friend Weight operator*(std::int64_t k, const Weight& a) {
        Weight r = a;
        for (auto& c : r.coords)
            c *= k;
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& c : r.coords)
            c = -c;
        return r;
    }

    bool is_zero() const {
        for (auto c : coords)
            if (c != 0)
                return false;
        return true;
    }

    auto operator<=>(const Weight&) const = default;

    // "a,b,c"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(coords[i]);
        }
        return s;
    }
};

} // namespace kcanon

#endif
