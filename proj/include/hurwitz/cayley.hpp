#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hurwitz/character.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/content_product.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr int kDefaultBruteCap = 7;

/// A permutation of {1..n}, stored as 0-based images.
class Perm {
public:
    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Perm(std::move(img));
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> images_;
};

/// Cycle type of g as a partition, canonical order.
inline Partition cycle_type(const Perm& g) {
    std::vector<bool> seen(g.n(), false);
    std::vector<int> lengths;
    for (int i = 0; i < g.n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = g(j)) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

/// Band structure of a multimonotonic path: ordered (length, mode) runs.
struct BandSpec {
    enum class Mode { strict, weak };
    struct Band {
        int length;
        Mode mode;
    };
    std::vector<Band> bands;

    /// Strict bands of lengths c followed by weak bands of lengths d.
    static BandSpec from_key(const std::vector<int>& c, const std::vector<int>& d) {
        BandSpec spec;
        for (int ca : c) spec.bands.push_back({ca, Mode::strict});
        for (int db : d) spec.bands.push_back({db, Mode::weak});
        return spec;
    }

    int total_length() const {
        int k = 0;
        for (auto& b : bands) k += b.length;
        return k;
    }
};

namespace detail {

inline void check_brute_cap(int n, int cap) {
    if (n > cap)
        throw CapExceededError("brute-force enumeration refused: n = " + std::to_string(n) +
                               " exceeds the cap " + std::to_string(cap));
}

/// Explicit S_n as image tables, with ranks assigned by lexicographic order.
class GroupTable {
public:
    explicit GroupTable(int n) : n_(n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        do {
            elements_.push_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
    }

    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<int>& element(std::size_t r) const { return elements_[r]; }

    /// Lexicographic rank via the Lehmer code.
    std::size_t rank(const std::vector<int>& img) const {
        std::size_t r = 0;
        std::size_t fact = 1;
        for (int i = 2; i <= n_; ++i) fact *= i;
        for (int i = 0; i < n_; ++i) {
            fact /= (n_ - i);
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j)
                if (img[j] < img[i]) ++smaller;
            r += smaller * fact;
        }
        return r;
    }

    /// Rank of t*g where t is the transposition (a b), 0-based a < b.
    /// Left multiplication by (a b) swaps the values a and b in the image table.
    std::size_t apply_transposition(std::size_t r, int a, int b) const {
        std::vector<int> img = elements_[r];
        for (int& v : img) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
        }
        return rank(img);
    }

private:
    int n_;
    std::vector<std::vector<int>> elements_;
};

}  // namespace detail

/// Number of pairs (g, transposition sequence) with g of cycle type mu, the
/// sequence band-wise monotone in the larger elements b_i, and product*g of
/// cycle type nu. Transpositions are written (a b) with a < b; strict bands
/// need b_i < b_{i+1}, weak bands b_i <= b_{i+1}, no constraint across bands.
inline unsigned long long count_monotone_pairs(const Partition& mu, const Partition& nu,
                                               const BandSpec& bands,
                                               int brute_cap = kDefaultBruteCap) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("count_monotone_pairs: |mu| != |nu|");
    int n = mu.weight();
    if (n < 1) throw std::invalid_argument("count_monotone_pairs: weight must be >= 1");
    detail::check_brute_cap(n, brute_cap);
    detail::GroupTable group(n);

    // Work right to left: seed with the class of mu, finish in the class of nu.
    // Within a band the next larger element placed (to the left) must be
    // smaller (strict) or no larger (weak) than the previous one.
    std::vector<unsigned long long> current(group.size(), 0);
    for (std::size_t r = 0; r < group.size(); ++r)
        if (cycle_type(Perm(group.element(r))) == mu) current[r] = 1;

    for (auto it = bands.bands.rbegin(); it != bands.bands.rend(); ++it) {
        if (it->length < 0) throw std::invalid_argument("count_monotone_pairs: negative band");
        bool strict = it->mode == BandSpec::Mode::strict;
        // state: (perm rank, bound on the next b); bound n means unconstrained.
        std::vector<std::vector<unsigned long long>> state(
            group.size(), std::vector<unsigned long long>(n + 1, 0));
        for (std::size_t r = 0; r < group.size(); ++r) state[r][n] = current[r];
        for (int step = 0; step < it->length; ++step) {
            std::vector<std::vector<unsigned long long>> next(
                group.size(), std::vector<unsigned long long>(n + 1, 0));
            for (std::size_t r = 0; r < group.size(); ++r) {
                for (int bound = 0; bound <= n; ++bound) {
                    unsigned long long count = state[r][bound];
                    if (count == 0) continue;
                    int max_b = std::min(bound == n ? n - 1 : (strict ? bound - 1 : bound), n - 1);
                    for (int b = 1; b <= max_b; ++b)
                        for (int a = 0; a < b; ++a)
                            next[group.apply_transposition(r, a, b)][b] += count;
                }
            }
            state = std::move(next);
        }
        for (std::size_t r = 0; r < group.size(); ++r)
            current[r] = std::accumulate(state[r].begin(), state[r].end(), 0ULL);
    }

    unsigned long long total = 0;
    for (std::size_t r = 0; r < group.size(); ++r)
        if (current[r] && cycle_type(Perm(group.element(r))) == nu) total += current[r];
    return total;
}

/// Number of tuples (g_1..g_j), g_a in cyc_{mu^(a)}, with g_1...g_j = identity.
inline unsigned long long count_cover_tuples(const std::vector<Partition>& profiles,
                                             int brute_cap = kDefaultBruteCap) {
    if (profiles.empty())
        throw std::invalid_argument("count_cover_tuples: empty profile list");
    int n = profiles.front().weight();
    for (auto& p : profiles)
        if (p.weight() != n)
            throw std::invalid_argument("count_cover_tuples: profiles of unequal weight");
    detail::check_brute_cap(n, brute_cap);
    detail::GroupTable group(n);

    // Ranks of each conjugacy class we need.
    std::map<Partition, std::vector<std::size_t>> classes;
    for (std::size_t r = 0; r < group.size(); ++r)
        classes[cycle_type(Perm(group.element(r)))].push_back(r);

    // dist[r] = number of ways to write the element of rank r as g_1...g_a.
    std::vector<unsigned long long> dist(group.size(), 0);
    dist[group.rank(Perm::identity(n).images())] = 1;
    for (auto& profile : profiles) {
        std::vector<unsigned long long> next(group.size(), 0);
        for (std::size_t r = 0; r < group.size(); ++r) {
            if (dist[r] == 0) continue;
            const auto& left = group.element(r);
            for (std::size_t gr : classes[profile]) {
                const auto& g = group.element(gr);
                std::vector<int> prod(n);
                for (int i = 0; i < n; ++i) prod[i] = left[g[i]];
                next[group.rank(prod)] += dist[r];
            }
        }
        dist = std::move(next);
    }
    return dist[group.rank(Perm::identity(n).images())];
}

/// An element of the centre of C[S_n] in the class-sum basis.
struct CenterElement {
    int n;
    std::map<Partition, Rational> coefficients;

    bool operator==(const CenterElement& other) const {
        if (n != other.n) return false;
        auto nonzero = [](const std::map<Partition, Rational>& m, const Partition& p) {
            auto it = m.find(p);
            return it == m.end() ? Rational(0) : it->second;
        };
        for (auto& [p, v] : coefficients)
            if (v != nonzero(other.coefficients, p)) return false;
        for (auto& [p, v] : other.coefficients)
            if (v != nonzero(coefficients, p)) return false;
        return true;
    }
};

namespace detail {

/// Dense group-algebra vector of the central element e_k(J) or h_k(J),
/// J_b the Jucys-Murphy elements, built by symmetric-function recursion
/// over the variables J_2..J_n.
inline std::vector<unsigned long long> symmetric_jucys_murphy(const GroupTable& group, int k,
                                                              SymmetricKind kind) {
    int n = group.n();
    std::size_t id = group.rank(Perm::identity(n).images());
    std::vector<std::vector<unsigned long long>> levels(
        k + 1, std::vector<unsigned long long>(group.size(), 0));
    levels[0][id] = 1;

    auto multiply_by_jm = [&](const std::vector<unsigned long long>& v, int b) {
        std::vector<unsigned long long> out(group.size(), 0);
        for (std::size_t r = 0; r < group.size(); ++r) {
            if (v[r] == 0) continue;
            for (int a = 0; a < b; ++a)
                out[group.apply_transposition(r, a, b)] += v[r];
        }
        return out;
    };

    for (int b = 1; b < n; ++b) {  // J_{b+1} in 1-based terms
        if (kind == SymmetricKind::elementary) {
            for (int j = k; j >= 1; --j) {
                auto add = multiply_by_jm(levels[j - 1], b);
                for (std::size_t r = 0; r < group.size(); ++r) levels[j][r] += add[r];
            }
        } else {
            for (int j = 1; j <= k; ++j) {
                auto add = multiply_by_jm(levels[j - 1], b);
                for (std::size_t r = 0; r < group.size(); ++r) levels[j][r] += add[r];
            }
        }
    }
    return levels[k];
}

}  // namespace detail

/// Multiplies a central element by e_k(J) or h_k(J), expanding class sums into
/// explicit permutations and re-collecting by cycle type. The result is
/// checked to be constant on conjugacy classes.
inline CenterElement multiply_central(const CenterElement& elem, SymmetricKind kind, int k,
                                      int brute_cap = kDefaultBruteCap) {
    if (k < 0) throw std::invalid_argument("multiply_central: k must be >= 0");
    detail::check_brute_cap(elem.n, brute_cap);
    int n = elem.n;
    detail::GroupTable group(n);

    std::vector<Rational> input(group.size(), 0);
    std::vector<Partition> type_of(group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        type_of[r] = cycle_type(Perm(group.element(r)));
    for (std::size_t r = 0; r < group.size(); ++r) {
        auto it = elem.coefficients.find(type_of[r]);
        if (it != elem.coefficients.end()) input[r] = it->second;
    }
    for (auto& [p, v] : elem.coefficients)
        if (p.weight() != n)
            throw std::invalid_argument("multiply_central: class " + p.to_string() +
                                        " has wrong weight");

    auto central = detail::symmetric_jucys_murphy(group, k, kind);

    std::vector<Rational> output(group.size(), 0);
    for (std::size_t gr = 0; gr < group.size(); ++gr) {
        if (central[gr] == 0) continue;
        const auto& g = group.element(gr);
        for (std::size_t r = 0; r < group.size(); ++r) {
            if (input[r] == 0) continue;
            const auto& x = group.element(r);
            std::vector<int> prod(n);
            for (int i = 0; i < n; ++i) prod[i] = g[x[i]];
            output[group.rank(prod)] += Rational(central[gr]) * input[r];
        }
    }

    CenterElement result{n, {}};
    for (std::size_t r = 0; r < group.size(); ++r) {
        auto [it, inserted] = result.coefficients.try_emplace(type_of[r], output[r]);
        if (!inserted && it->second != output[r])
            throw std::logic_error("multiply_central: result is not central");
    }
    for (auto it = result.coefficients.begin(); it != result.coefficients.end();)
        it = it->second == 0 ? result.coefficients.erase(it) : std::next(it);
    return result;
}

/// Orthogonal idempotent F_lambda = h_lambda^{-1} sum_mu chi_lambda(mu) C_mu.
inline CenterElement idempotent(const Partition& lambda, int brute_cap = kDefaultBruteCap) {
    int n = lambda.weight();
    if (n < 1) throw std::invalid_argument("idempotent: weight must be >= 1");
    detail::check_brute_cap(n, brute_cap);
    const auto& table = character_table(n);
    Rational h_inv = Rational(1) / Rational(hook_product(lambda));
    CenterElement result{n, {}};
    for (auto& mu : table.partitions()) {
        Rational coeff = h_inv * table.at(lambda, mu);
        if (coeff != 0) result.coefficients[mu] = coeff;
    }
    return result;
}

/// Product of two central elements in the class-sum basis.
inline CenterElement multiply_center_elements(const CenterElement& x, const CenterElement& y,
                                              int brute_cap = kDefaultBruteCap) {
    if (x.n != y.n) throw std::invalid_argument("multiply_center_elements: size mismatch");
    detail::check_brute_cap(x.n, brute_cap);
    int n = x.n;
    detail::GroupTable group(n);
    std::vector<Partition> type_of(group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        type_of[r] = cycle_type(Perm(group.element(r)));

    auto expand = [&](const CenterElement& e) {
        std::vector<Rational> v(group.size(), 0);
        for (std::size_t r = 0; r < group.size(); ++r) {
            auto it = e.coefficients.find(type_of[r]);
            if (it != e.coefficients.end()) v[r] = it->second;
        }
        return v;
    };
    auto vx = expand(x), vy = expand(y);
    std::vector<Rational> out(group.size(), 0);
    for (std::size_t r = 0; r < group.size(); ++r) {
        if (vx[r] == 0) continue;
        const auto& a = group.element(r);
        for (std::size_t s = 0; s < group.size(); ++s) {
            if (vy[s] == 0) continue;
            const auto& b = group.element(s);
            std::vector<int> prod(n);
            for (int i = 0; i < n; ++i) prod[i] = a[b[i]];
            out[group.rank(prod)] += vx[r] * vy[s];
        }
    }
    CenterElement result{n, {}};
    for (std::size_t r = 0; r < group.size(); ++r)
        if (out[r] != 0) {
            auto [it, inserted] = result.coefficients.try_emplace(type_of[r], out[r]);
            if (!inserted && it->second != out[r])
                throw std::logic_error("multiply_center_elements: result is not central");
        }
    return result;
}

}  // namespace hurwitz
