#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is a valid value.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// Conjugate (transposed) Young diagram.
    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; parts_.size() && j <= parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            c.push_back(count);
        }
        return Partition(std::move(c));
    }

    auto operator<=>(const Partition&) const = default;

    /// Textual form "3,1,1"; the empty partition renders as "".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            std::size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos != token.size())
                throw std::invalid_argument("malformed partition: \"" + text + "\"");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// Canonical order used in all listings and serialized tables:
/// reverse-lexicographic, so (n) comes first and (1^n) last.
inline bool canonical_less(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

/// All partitions of n in canonical (reverse-lexicographic) order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-first DFS emits reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Z_mu, the order of the stabilizer of an element of cycle type mu:
/// prod_i i^{j_i} (j_i)! over part multiplicities j_i.
inline Integer stabilizer_order(const Partition& mu) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    for (auto [part, count] : mult) {
        for (int i = 0; i < count; ++i) z *= part;
        z *= factorial(count);
    }
    return z;
}

/// |cyc_mu| = n!/Z_mu.
inline Integer class_size(const Partition& mu) {
    return factorial(mu.weight()) / stabilizer_order(mu);
}

/// Contents j-i of the cells (i,j) of the Young diagram, row by row.
inline std::vector<int> contents(const Partition& lambda) {
    std::vector<int> out;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            out.push_back(j - i);
    return out;
}

/// Product of the hook lengths of lambda.
inline Integer hook_product(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("hook_product: empty partition");
    Partition conj = lambda.conjugate();
    Integer h = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            h *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
    return h;
}

/// Dimension of the irreducible S_n representation labelled by lambda.
inline Integer dimension(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("dimension: empty partition");
    return factorial(lambda.weight()) / hook_product(lambda);
}

/// Colength l*(mu) = |mu| - l(mu).
inline int colength(const Partition& mu) { return mu.weight() - mu.length(); }

/// All partitions of n with colength exactly c, canonical order.
inline std::vector<Partition> partitions_with_colength(int n, int c) {
    if (n < 1) throw std::invalid_argument("partitions_with_colength: n must be positive");
    if (c < 0 || c >= n)
        throw std::invalid_argument("partitions_with_colength: need 0 <= c <= n-1");
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (colength(p) == c) out.push_back(p);
    return out;
}

/// Ramification data of one coefficient key: profiles over 0 and infinity
/// plus the strict colengths c_a and coloured colength sums d_b.
struct RamificationData {
    Partition mu;
    Partition nu;
    std::vector<int> c;
    std::vector<int> d;

    void validate() const {
        if (mu.weight() != nu.weight())
            throw std::invalid_argument("ramification data: |mu| != |nu|");
        int n = mu.weight();
        for (int ca : c)
            if (ca < 0 || (n > 0 && ca > n - 1))
                throw std::invalid_argument("ramification data: need 0 <= c_a <= n-1");
        for (int db : d)
            if (db < 0) throw std::invalid_argument("ramification data: d_b must be >= 0");
    }
};

/// Riemann-Hurwitz: 2g = 2 + sum c_a + sum d_b - l(mu) - l(nu).
/// Returned as 2g; an odd value signals a nonorientable (half-integer genus) count.
inline int double_genus(const RamificationData& data) {
    if (data.mu.weight() != data.nu.weight())
        throw std::invalid_argument("double_genus: |mu| != |nu|");
    int s = 0;
    for (int ca : data.c) s += ca;
    for (int db : data.d) s += db;
    return 2 + s - data.mu.length() - data.nu.length();
}

}  // namespace hurwitz
