#include "kcanon/laurent.hpp"

#include <sstream>

namespace kcanon {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ExponentOverflow("exponent overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

} // namespace

LaurentPoly LaurentPoly::monomial(Int c, std::int64_t k) {
    LaurentPoly p;
    if (c != 0)
        p.coeffs_[k] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::minus_v_pow(std::int64_t k) {
    return monomial((k % 2 == 0) ? 1 : -1, k);
}

Int LaurentPoly::coeff(std::int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPoly::min_exp() const { return coeffs_.begin()->first; }
std::int64_t LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }

void LaurentPoly::set_coeff(std::int64_t k, Int c) {
    if (c == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            std::int64_t k = checked_add(ka, kb);
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end()) {
                Int c = ca * cb;
                if (c != 0)
                    r.coeffs_.emplace(k, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_)
        r.coeffs_.emplace(k, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r;
    if (c == 0)
        return r;
    for (const auto& [k, cc] : coeffs_)
        r.coeffs_.emplace(k, cc * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(checked_add(e, k), c);
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : coeffs_)
        s += c;
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) {
        if (k == INT64_MIN)
            throw ExponentOverflow("cannot negate INT64_MIN exponent");
        r.coeffs_.emplace(-k, c);
    }
    return r;
}

bool LaurentPoly::is_strictly_negative() const {
    return coeffs_.empty() || max_exp() <= -1;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [k, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (k == 0) {
            os << a;
        } else {
            if (a != 1)
                os << a << "*";
            os << "v";
            if (k != 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly solve_antiinvariant(const LaurentPoly& f) {
    if (f.bar() != -f)
        throw NotAntiInvariant("solve_antiinvariant: bar(f) != -f for f = " + f.str());
    LaurentPoly g;
    for (const auto& [k, c] : f.coeffs())
        if (k <= -1)
            g.set_coeff(k, c);
    return g;
}

} // namespace kcanon
