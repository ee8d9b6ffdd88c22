#include "kcanon/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace kcanon {

namespace {

// Determinant and adjugate of a small integer matrix by cofactor expansion.
struct SmallMatrix {
    int n;
    std::vector<std::int64_t> a; // row-major

    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    std::int64_t minor_det(std::vector<int> rows, std::vector<int> cols) const {
        if (rows.size() == 1)
            return at(rows[0], cols[0]);
        std::int64_t s = 0;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> sub_cols;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != c)
                    sub_cols.push_back(cols[k]);
            std::int64_t term = at(rows[0], cols[c]) * minor_det(sub_rows, sub_cols);
            s += (c % 2 == 0) ? term : -term;
        }
        return s;
    }

    std::int64_t det() const {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i)
            idx[i] = i;
        return minor_det(idx, idx);
    }

    // adj(A) with A * adj(A) = det(A) * I
    std::vector<std::int64_t> adjugate() const {
        std::vector<std::int64_t> r(static_cast<std::size_t>(n) * n);
        if (n == 1) {
            r[0] = 1;
            return r;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> rows, cols;
                for (int k = 0; k < n; ++k) {
                    if (k != j)
                        rows.push_back(k);
                    if (k != i)
                        cols.push_back(k);
                }
                std::int64_t c = minor_det(rows, cols);
                r[static_cast<std::size_t>(i) * n + j] = ((i + j) % 2 == 0) ? c : -c;
            }
        return r;
    }
};

std::size_t classical_weyl_order(char t, int r) {
    auto fact = [](int k) {
        std::size_t f = 1;
        for (int i = 2; i <= k; ++i)
            f *= static_cast<std::size_t>(i);
        return f;
    };
    switch (t) {
    case 'A': return fact(r + 1);
    case 'B':
    case 'C': return fact(r) << r;
    case 'G': return 12;
    default: return 0;
    }
}

} // namespace

RootSystem RootSystem::build(const std::string& label) {
    std::string s;
    for (char c : label)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() < 2)
        throw UnsupportedTypeError("bad root system label '" + label + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int r = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw UnsupportedTypeError("bad root system label '" + label + "'");
        r = r * 10 + (s[i] - '0');
    }
    return build(t, r);
}

RootSystem RootSystem::build(char type_letter, int rank) {
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;

    const bool ok = (t == 'A' && rank >= 1 && rank <= 4) ||
                    (t == 'B' && (rank == 2 || rank == 3)) ||
                    (t == 'C' && (rank == 2 || rank == 3)) ||
                    (t == 'G' && rank == 2);
    if (!ok)
        throw UnsupportedTypeError("unsupported root system " + std::string(1, t) + std::to_string(rank));

    const int n = rank;
    rs.cartan_.assign(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](int i, int j, std::int64_t v) { rs.cartan_[static_cast<std::size_t>(i) * n + j] = v; };
    for (int i = 0; i < n; ++i)
        set(i, i, 2);
    for (int i = 0; i + 1 < n; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
    }
    rs.sym_d_.assign(n, 1);
    if (t == 'B') {
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        set(n - 1, n - 2, -2);
        for (int i = 0; i < n - 1; ++i)
            rs.sym_d_[i] = 2;
    } else if (t == 'C') {
        // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        set(n - 2, n - 1, -2);
        rs.sym_d_[n - 1] = 2;
    } else if (t == 'G') {
        // alpha_1 long (omega_1 adjoint/14-dim), alpha_2 short (omega_2 7-dim)
        set(1, 0, -3);
        rs.sym_d_[0] = 3;
    }

    SmallMatrix cm{n, rs.cartan_};
    rs.cartan_det_ = cm.det();
    rs.cartan_adj_ = cm.adjugate();

    rs.simple_roots_.resize(n);
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> col(n);
        for (int i = 0; i < n; ++i)
            col[i] = rs.cartan(i, j);
        rs.simple_roots_[j] = Weight(std::move(col));
    }
    rs.rho_ = Weight(std::vector<std::int64_t>(n, 1));

    rs.generate_positive_roots();
    rs.enumerate_weyl();

    rs.two_rho_check_.assign(n, 0);
    for (const auto& pr : rs.positive_roots_)
        for (int j = 0; j < n; ++j)
            rs.two_rho_check_[j] += pr.coroot[j];

    rs.validate();
    return rs;
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
    Weight r = lambda;
    const std::int64_t pairing = lambda[static_cast<std::size_t>(i)];
    for (int k = 0; k < rank_; ++k)
        r[static_cast<std::size_t>(k)] -= pairing * cartan(k, i);
    return r;
}

void RootSystem::generate_positive_roots() {
    // Closure of the simple roots under the simple reflections; track the
    // coordinates over the simple roots alongside.
    std::map<Weight, std::vector<std::int64_t>> seen;
    std::vector<Weight> queue;
    for (int j = 0; j < rank_; ++j) {
        std::vector<std::int64_t> rc(rank_, 0);
        rc[j] = 1;
        seen.emplace(simple_roots_[j], std::move(rc));
        queue.push_back(simple_roots_[j]);
    }
    while (!queue.empty()) {
        Weight alpha = queue.back();
        queue.pop_back();
        const auto rc = seen.at(alpha);
        for (int i = 0; i < rank_; ++i) {
            Weight beta = reflect(i, alpha);
            std::vector<std::int64_t> brc = rc;
            brc[i] -= alpha[static_cast<std::size_t>(i)];
            bool has_positive = false, has_negative = false;
            for (auto c : brc) {
                if (c > 0)
                    has_positive = true;
                else if (c < 0)
                    has_negative = true;
            }
            if (has_negative || !has_positive)
                continue;
            if (seen.emplace(beta, brc).second)
                queue.push_back(beta);
        }
    }

    for (const auto& [fw, rc] : seen) {
        PositiveRoot pr;
        pr.fw = fw;
        pr.root = rc;
        // (alpha, alpha) with (alpha_i, alpha_j) = d_j * cartan(j, i)
        std::int64_t len2 = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                len2 += rc[i] * rc[j] * sym_d_[j] * cartan(j, i);
        if (len2 <= 0 || len2 % 2 != 0)
            throw Error("root datum: bad squared length for a positive root");
        pr.d = len2 / 2;
        pr.coroot.resize(rank_);
        for (int j = 0; j < rank_; ++j) {
            std::int64_t num = rc[j] * sym_d_[j];
            if (num % pr.d != 0)
                throw Error("root datum: non-integral coroot");
            pr.coroot[j] = num / pr.d;
        }
        pr.is_long = pr.d > 1;
        positive_roots_.push_back(std::move(pr));
    }
    // Deterministic order: by height (sum of root coordinates), then lex.
    std::sort(positive_roots_.begin(), positive_roots_.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) {
                  std::int64_t ha = 0, hb = 0;
                  for (auto c : a.root) ha += c;
                  for (auto c : b.root) hb += c;
                  if (ha != hb)
                      return ha < hb;
                  return a.root < b.root;
              });
}

void RootSystem::enumerate_weyl() {
    const int n = rank_;
    auto identity = [&]() {
        std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i) * n + i] = 1;
        return m;
    };
    // Matrix of s_i acting on fundamental-weight coordinates.
    auto refl_matrix = [&](int i) {
        std::vector<std::int64_t> m = identity();
        for (int k = 0; k < n; ++k)
            m[static_cast<std::size_t>(k) * n + i] -= cartan(k, i);
        return m;
    };
    auto mul = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> r(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::int64_t aik = a[static_cast<std::size_t>(i) * n + k];
                if (aik == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    r[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
            }
        return r;
    };

    std::vector<std::vector<std::int64_t>> refl(n);
    for (int i = 0; i < n; ++i)
        refl[i] = refl_matrix(i);

    std::map<std::vector<std::int64_t>, std::size_t> index_of;
    WeylElement e;
    e.length = 0;
    e.matrix = identity();
    weyl_.push_back(e);
    index_of.emplace(e.matrix, 0);

    std::size_t frontier_begin = 0;
    while (frontier_begin < weyl_.size()) {
        const std::size_t frontier_end = weyl_.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            for (int i = 0; i < n; ++i) {
                std::vector<std::int64_t> m = mul(weyl_[idx].matrix, refl[i]);
                if (index_of.count(m))
                    continue;
                WeylElement w;
                w.word = weyl_[idx].word;
                w.word.push_back(i);
                w.length = weyl_[idx].length + 1;
                w.matrix = std::move(m);
                index_of.emplace(w.matrix, weyl_.size());
                weyl_.push_back(std::move(w));
            }
        }
        frontier_begin = frontier_end;
    }

    int max_len = 0;
    for (const auto& w : weyl_)
        max_len = std::max(max_len, w.length);
    std::size_t count_max = 0;
    for (std::size_t i = 0; i < weyl_.size(); ++i)
        if (weyl_[i].length == max_len) {
            w0_index_ = i;
            ++count_max;
        }
    if (count_max != 1)
        throw Error("root datum: longest element is not unique");
}

void RootSystem::validate() const {
    if (positive_roots_.size() != static_cast<std::size_t>(w0().length))
        throw Error("root datum: |R+| != l(w0)");
    if (weyl_.size() != classical_weyl_order(type_, rank_))
        throw Error("root datum: wrong Weyl group order");
    for (int i = 0; i < rank_; ++i)
        if (rho_[static_cast<std::size_t>(i)] != 1)
            throw Error("root datum: <rho, alpha_i^vee> != 1");
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (sym_d_[i] * cartan(i, j) != sym_d_[j] * cartan(j, i))
                throw Error("root datum: symmetrizer mismatch");
    // Simple roots pair to 2 with 2 rho^vee.
    for (int j = 0; j < rank_; ++j)
        if (measure(simple_roots_[j]) != 2)
            throw Error("root datum: <alpha_j, 2 rho^vee> != 2");
}

Weight RootSystem::apply(const WeylElement& w, const Weight& lambda) const {
    Weight r(std::vector<std::int64_t>(rank_, 0));
    for (int i = 0; i < rank_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < rank_; ++j)
            s += w.matrix[static_cast<std::size_t>(i) * rank_ + j] * lambda[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

Weight RootSystem::w0_action(const Weight& lambda) const { return apply(w0(), lambda); }

Weight RootSystem::dominant_representative(Weight lambda) const {
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (lambda[static_cast<std::size_t>(i)] < 0) {
                neg = i;
                break;
            }
        if (neg < 0)
            return lambda;
        lambda = reflect(neg, lambda);
    }
}

bool RootSystem::is_dominant(const Weight& lambda) const {
    for (auto c : lambda.coords)
        if (c < 0)
            return false;
    return true;
}

std::optional<std::vector<std::int64_t>> RootSystem::root_coords(const Weight& lambda) const {
    std::vector<std::int64_t> k(rank_);
    for (int i = 0; i < rank_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < rank_; ++j)
            s += cartan_adj_[static_cast<std::size_t>(i) * rank_ + j] * lambda[static_cast<std::size_t>(j)];
        if (s % cartan_det_ != 0)
            return std::nullopt;
        k[i] = s / cartan_det_;
    }
    return k;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto k = root_coords(lambda - mu);
    if (!k)
        return false;
    for (auto c : *k)
        if (c < 0)
            return false;
    return true;
}

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, const PositiveRoot& alpha) const {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j)
        s += alpha.coroot[j] * lambda[static_cast<std::size_t>(j)];
    return s;
}

std::int64_t RootSystem::measure(const Weight& lambda) const {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j)
        s += two_rho_check_[j] * lambda[static_cast<std::size_t>(j)];
    return s;
}

std::int64_t RootSystem::nu_lambda(const Weight& lambda) const {
    if (!is_dominant(lambda))
        throw DominanceViolation("nu_lambda: weight " + lambda.str() + " is not dominant");
    std::int64_t c = 0;
    for (const auto& pr : positive_roots_)
        if (coroot_pairing(lambda, pr) == 0)
            ++c;
    return c;
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& lambda) const {
    if (!is_dominant(lambda))
        throw DominanceViolation("dominant_weights_below: weight " + lambda.str() + " is not dominant");
    std::vector<Weight> out;
    const std::int64_t budget = measure(lambda) / 2;
    std::function<void(int, std::int64_t, Weight)> rec = [&](int pos, std::int64_t left, Weight mu) {
        if (pos == rank_) {
            if (is_dominant(mu))
                out.push_back(mu);
            return;
        }
        Weight cur = mu;
        for (std::int64_t kk = 0; kk <= left; ++kk) {
            rec(pos + 1, left - kk, cur);
            cur = cur - simple_roots_[pos];
        }
    };
    rec(0, budget, lambda);
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const auto ma = measure(a), mb = measure(b);
        if (ma != mb)
            return ma < mb;
        return a < b;
    });
    return out;
}

std::vector<Weight> RootSystem::dominant_weights_up_to(std::int64_t bound) const {
    std::vector<Weight> out;
    if (bound < 0)
        return out;
    std::function<void(int, std::int64_t, Weight)> rec = [&](int pos, std::int64_t left, Weight mu) {
        if (pos == rank_) {
            out.push_back(mu);
            return;
        }
        const std::int64_t unit = two_rho_check_[pos]; // measure of omega_pos
        for (std::int64_t m = 0; m * unit <= left; ++m) {
            Weight next = mu;
            next[static_cast<std::size_t>(pos)] = m;
            rec(pos + 1, left - m * unit, next);
        }
    };
    rec(0, bound, zero());
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const auto ma = measure(a), mb = measure(b);
        if (ma != mb)
            return ma < mb;
        return a < b;
    });
    return out;
}

std::vector<Weight> RootSystem::minimal_weights() const {
    std::int64_t bound = 0;
    for (int j = 0; j < rank_; ++j)
        bound = std::max(bound, two_rho_check_[j]);
    auto coset_key = [&](const Weight& w) {
        std::vector<std::int64_t> key(rank_);
        for (int i = 0; i < rank_; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < rank_; ++j)
                s += cartan_adj_[static_cast<std::size_t>(i) * rank_ + j] * w[static_cast<std::size_t>(j)];
            key[i] = ((s % cartan_det_) + cartan_det_) % cartan_det_;
        }
        return key;
    };
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<std::vector<std::int64_t>, Weight> best;
        for (const auto& w : dominant_weights_up_to(bound)) // already (measure, lex) sorted
            best.emplace(coset_key(w), w);
        if (static_cast<std::int64_t>(best.size()) == cartan_det_) {
            std::vector<Weight> out;
            for (const auto& [k, w] : best)
                out.push_back(w);
            std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
                const auto ma = measure(a), mb = measure(b);
                if (ma != mb)
                    return ma < mb;
                return a < b;
            });
            return out;
        }
        bound = bound * 2 + 2;
    }
    throw Error("minimal_weights: could not cover all root-lattice cosets");
}

Weight RootSystem::short_dominant_root() const {
    for (const auto& pr : positive_roots_)
        if (!pr.is_long && is_dominant(pr.fw))
            return pr.fw;
    throw Error("no short dominant root");
}

std::optional<Weight> RootSystem::long_dominant_root() const {
    for (const auto& pr : positive_roots_)
        if (pr.is_long && is_dominant(pr.fw))
            return pr.fw;
    return std::nullopt;
}

int RootSystem::short_simple_index() const {
    for (int i = 0; i < rank_; ++i)
        if (sym_d_[i] == 1)
            return i;
    throw Error("no short simple root");
}

std::optional<int> RootSystem::long_simple_index() const {
    for (int i = 0; i < rank_; ++i)
        if (sym_d_[i] > 1)
            return i;
    return std::nullopt;
}

bool RootSystem::simply_laced() const {
    for (auto d : sym_d_)
        if (d != 1)
            return false;
    return true;
}

LaurentPoly RootSystem::q_partition(const Weight& beta) const {
    auto rc = root_coords(beta);
    if (!rc)
        return LaurentPoly();
    for (auto c : *rc)
        if (c < 0)
            return LaurentPoly();

    const std::size_t nroots = positive_roots_.size();
    std::map<std::pair<std::vector<std::int64_t>, std::size_t>, LaurentPoly> memo;
    std::function<LaurentPoly(std::vector<std::int64_t>, std::size_t)> rec =
        [&](std::vector<std::int64_t> gamma, std::size_t i) -> LaurentPoly {
        bool zero = true;
        for (auto c : gamma)
            if (c != 0) {
                zero = false;
                break;
            }
        if (zero)
            return LaurentPoly::one();
        if (i == nroots)
            return LaurentPoly();
        auto key = std::make_pair(gamma, i);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        LaurentPoly acc;
        std::vector<std::int64_t> g = gamma;
        for (std::int64_t k = 0;; ++k) {
            bool feasible = true;
            for (auto c : g)
                if (c < 0) {
                    feasible = false;
                    break;
                }
            if (!feasible)
                break;
            acc += rec(g, i + 1).shifted(2 * k); // q = v^2
            for (int j = 0; j < rank_; ++j)
                g[j] -= positive_roots_[i].root[j];
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };
    return rec(*rc, 0);
}

} // namespace kcanon
