#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hurwitz/character.hpp"
#include "hurwitz/content_product.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Index (mu, nu, c, d) of one expansion coefficient F^c_d(mu, nu).
using CoefficientKey = RamificationData;

/// G_r(mu, nu) = (Z_mu Z_nu)^{-1} sum_lambda r_lambda chi_lambda(mu) chi_lambda(nu)
/// for an arbitrary diagonal weight assignment lambda -> r_lambda.
inline Rational g_coefficient(const std::map<Partition, Rational>& weights,
                              const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("g_coefficient: |mu| != |nu|");
    int n = mu.weight();
    const auto& table = character_table(n);
    Rational sum = 0;
    for (auto& lambda : table.partitions()) {
        auto it = weights.find(lambda);
        if (it == weights.end())
            throw std::invalid_argument("g_coefficient: missing weight for " + lambda.to_string());
        sum += it->second * table.at(lambda, mu) * table.at(lambda, nu);
    }
    return sum / Rational(stabilizer_order(mu) * stabilizer_order(nu));
}

/// The expansion coefficient F^c_d(mu, nu), computed spectrally:
/// (Z_mu Z_nu)^{-1} sum_lambda chi chi prod_a e_{c_a}(cont) prod_b h_{d_b}(cont).
inline Rational f_coefficient(const CoefficientKey& key) {
    key.validate();
    int n = key.mu.weight();
    if (n < 1) throw std::invalid_argument("f_coefficient: weight must be >= 1");
    const auto& table = character_table(n);
    Rational sum = 0;
    for (auto& lambda : table.partitions()) {
        Rational term = Rational(table.at(lambda, key.mu)) * table.at(lambda, key.nu);
        if (term == 0) continue;
        for (int ca : key.c)
            term *= Rational(content_symmetric(lambda, ca, SymmetricKind::elementary));
        for (int db : key.d)
            term *= Rational(content_symmetric(lambda, db, SymmetricKind::complete));
        sum += term;
    }
    return sum / Rational(stabilizer_order(key.mu) * stabilizer_order(key.nu));
}

/// Frobenius character sum for the (automorphism-weighted, possibly
/// disconnected) Hurwitz number with the given profiles over a base of
/// genus g0: sum_lambda h_lambda^{j+2g0-2} prod_a chi_lambda(mu^(a))/Z.
inline Rational frobenius_hurwitz(const std::vector<Partition>& profiles, int base_genus = 0) {
    if (profiles.empty())
        throw std::invalid_argument("frobenius_hurwitz: empty profile list");
    int n = profiles.front().weight();
    for (auto& p : profiles)
        if (p.weight() != n)
            throw std::invalid_argument("frobenius_hurwitz: profiles of unequal weight");
    const auto& table = character_table(n);
    int exponent = static_cast<int>(profiles.size()) + 2 * base_genus - 2;
    Rational sum = 0;
    for (auto& lambda : table.partitions()) {
        Rational term = 1;
        Rational h = Rational(hook_product(lambda));
        if (exponent >= 0)
            for (int e = 0; e < exponent; ++e) term *= h;
        else
            for (int e = 0; e < -exponent; ++e) term /= h;
        for (auto& p : profiles) term *= Rational(table.at(lambda, p)) / Rational(stabilizer_order(p));
        sum += term;
    }
    return sum;
}

namespace detail {

/// Enumerates, for one colour with target d, all ordered tuples of partitions
/// of n with colength >= 1 whose colengths sum to d; f receives the tuple.
inline void for_each_colour_group(int n, int d,
                                  const std::function<void(const std::vector<Partition>&)>& f) {
    std::vector<Partition> tuple;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            f(tuple);
            return;
        }
        int max_colength = std::min(remaining, n - 1);
        for (int cl = 1; cl <= max_colength; ++cl) {
            for (auto& p : partitions_with_colength(n, cl)) {
                tuple.push_back(p);
                self(self, remaining - cl);
                tuple.pop_back();
            }
        }
    };
    rec(rec, d);
}

}  // namespace detail

/// One term of the signed Hurwitz assembly: the nontrivial strict and coloured
/// profiles, the colour group sizes, and the resulting signed contribution.
struct SignedHurwitzTerm {
    std::vector<Partition> profiles;
    std::vector<int> colour_sizes;
    int sign = 1;
    Rational value;
};

/// The same coefficient assembled as a finite signed sum of Frobenius Hurwitz
/// numbers over admissible profile systems. Each strict index a contributes a
/// profile of colength c_a (the trivial profile for c_a = 0 is dropped, since
/// appending it leaves H unchanged); each colour b contributes an ordered
/// tuple of nontrivial profiles with colengths summing to d_b. A term with C
/// coloured points in total carries sign (-1)^{C+D}, D = sum d_b.
///
/// Note the printed theorem carries an extra factor (-1)^{mn}; the expansion
/// of the denominator factors gives (-1)^{C+D}, and that is what agrees with
/// the spectral route (see the three-way equivalence suite).
inline Rational signed_hurwitz_sum(const CoefficientKey& key,
                                   std::vector<SignedHurwitzTerm>* terms = nullptr) {
    key.validate();
    int n = key.mu.weight();
    if (n < 1) throw std::invalid_argument("signed_hurwitz_sum: weight must be >= 1");
    int D = 0;
    for (int db : key.d) D += db;

    // Strict profile choices, one list per index a with c_a > 0.
    std::vector<std::vector<Partition>> strict_choices;
    for (int ca : key.c)
        if (ca > 0) strict_choices.push_back(partitions_with_colength(n, ca));

    Rational total = 0;
    std::vector<Partition> strict_profiles;
    auto over_colours = [&](auto&& self, std::size_t b, std::vector<Partition>& coloured,
                            std::vector<int>& sizes, int C) -> void {
        if (b == key.d.size()) {
            std::vector<Partition> profiles = {key.mu, key.nu};
            profiles.insert(profiles.end(), strict_profiles.begin(), strict_profiles.end());
            profiles.insert(profiles.end(), coloured.begin(), coloured.end());
            Rational h = frobenius_hurwitz(profiles, 0);
            int sign = ((C + D) % 2 == 0) ? 1 : -1;
            total += sign * h;
            if (terms) {
                std::vector<Partition> extra(profiles.begin() + 2, profiles.end());
                terms->push_back({std::move(extra), sizes, sign, sign * h});
            }
            return;
        }
        detail::for_each_colour_group(n, key.d[b], [&](const std::vector<Partition>& group) {
            std::size_t before = coloured.size();
            coloured.insert(coloured.end(), group.begin(), group.end());
            sizes.push_back(static_cast<int>(group.size()));
            self(self, b + 1, coloured, sizes, C + static_cast<int>(group.size()));
            sizes.pop_back();
            coloured.resize(before);
        });
    };

    auto over_strict = [&](auto&& self, std::size_t a) -> void {
        if (a == strict_choices.size()) {
            std::vector<Partition> coloured;
            std::vector<int> sizes;
            over_colours(over_colours, 0, coloured, sizes, 0);
            return;
        }
        for (auto& p : strict_choices[a]) {
            strict_profiles.push_back(p);
            self(self, a + 1);
            strict_profiles.pop_back();
        }
    };
    over_strict(over_strict, 0);
    return total;
}

/// Okounkov's double Hurwitz number: all strict bands of length 1, m = 0.
inline Rational double_hurwitz(const Partition& mu, const Partition& nu, int k) {
    if (k < 0) throw std::invalid_argument("double_hurwitz: k must be >= 0");
    if (k >= 1 && mu.weight() < 2) return 0;  // no transpositions below n = 2
    CoefficientKey key{mu, nu, std::vector<int>(k, 1), {}};
    return f_coefficient(key);
}

/// F^{(c,l)}(mu, nu): sum of F over all compositions (c_1..c_l) of c.
inline Rational aggregated_strict(const Partition& mu, const Partition& nu, int c, int l) {
    if (c < 0 || l < 1)
        throw std::invalid_argument("aggregated_strict: need c >= 0 and l >= 1");
    Rational total = 0;
    std::vector<int> comp(l, 0);
    auto rec = [&](auto&& self, int a, int remaining) -> void {
        if (a == l - 1) {
            comp[a] = remaining;
            if (remaining <= mu.weight() - 1)
                total += f_coefficient({mu, nu, comp, {}});
            return;
        }
        for (int v = 0; v <= remaining && v <= mu.weight() - 1; ++v) {
            comp[a] = v;
            self(self, a + 1, remaining - v);
        }
    };
    rec(rec, 0, c);
    return total;
}

/// KP restriction: no branching at infinity, nu = (1^n).
inline Rational kp_coefficient(const Partition& mu, const std::vector<int>& c,
                               const std::vector<int>& d) {
    Partition identity(std::vector<int>(mu.weight(), 1));
    return f_coefficient({mu, identity, c, d});
}

/// The (l,m) = (0,1) even/odd split: unsigned sums of Hurwitz numbers over the
/// profile systems of weak degree d, split by the parity of C + n, so that
/// F_d(mu, nu) = (-1)^{n+d} (F+ - F-).
inline std::pair<Rational, Rational> parity_split_hurwitz(const Partition& mu,
                                                          const Partition& nu, int d) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("parity_split_hurwitz: |mu| != |nu|");
    if (d < 0) throw std::invalid_argument("parity_split_hurwitz: d must be >= 0");
    int n = mu.weight();
    Rational even = 0, odd = 0;
    detail::for_each_colour_group(n, d, [&](const std::vector<Partition>& group) {
        std::vector<Partition> profiles = {mu, nu};
        profiles.insert(profiles.end(), group.begin(), group.end());
        Rational h = frobenius_hurwitz(profiles, 0);
        int C = static_cast<int>(group.size());
        if ((C + n) % 2 == 0)
            even += h;
        else
            odd += h;
    });
    return {even, odd};
}

}  // namespace hurwitz
