#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/character.hpp"
#include "hurwitz/coefficients.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Raised when a coefficient beyond the configured degree caps is requested.
class UnderTruncationError : public std::runtime_error {
public:
    explicit UnderTruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse multivariate polynomial in q, w_1..w_l, z_1..z_m with exact rational
/// coefficients, truncated by per-variable degree caps. Exponent vectors are
/// laid out as [e_q, e_w..., e_z...].
class TruncatedSeries {
public:
    TruncatedSeries(int l, int m, int q_cap, std::vector<int> w_caps, std::vector<int> z_caps)
        : l_(l), m_(m), q_cap_(q_cap), w_caps_(std::move(w_caps)), z_caps_(std::move(z_caps)) {
        if (static_cast<int>(w_caps_.size()) != l || static_cast<int>(z_caps_.size()) != m)
            throw std::invalid_argument("TruncatedSeries: cap arity mismatch");
    }

    static TruncatedSeries uniform(int l, int m, int q_cap, int cap) {
        return TruncatedSeries(l, m, q_cap, std::vector<int>(l, cap), std::vector<int>(m, cap));
    }

    int l() const { return l_; }
    int m() const { return m_; }
    int arity() const { return 1 + l_ + m_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    int cap(std::size_t var) const {
        if (var == 0) return q_cap_;
        if (var <= static_cast<std::size_t>(l_)) return w_caps_[var - 1];
        return z_caps_[var - 1 - l_];
    }

    bool in_cap(const std::vector<int>& exp) const {
        for (std::size_t v = 0; v < exp.size(); ++v)
            if (exp[v] > cap(v)) return false;
        return true;
    }

    void add_term(const std::vector<int>& exp, const Rational& value) {
        if (static_cast<int>(exp.size()) != arity())
            throw std::invalid_argument("TruncatedSeries: exponent arity mismatch");
        if (!in_cap(exp)) return;  // pruned by cap
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (value != 0) terms_[exp] = value;
        } else {
            it->second += value;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Coefficient extraction; exponents beyond a cap are an error, not zero.
    Rational coefficient(const std::vector<int>& exp) const {
        if (static_cast<int>(exp.size()) != arity())
            throw std::invalid_argument("TruncatedSeries: exponent arity mismatch");
        if (!in_cap(exp))
            throw UnderTruncationError("coefficient at exponent beyond the truncation caps");
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        for (auto& [exp, val] : other.terms_) add_term(exp, val);
        return *this;
    }

    TruncatedSeries& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [exp, val] : terms_) val *= scalar;
        return *this;
    }

    /// Exact sparse convolution with cap-based pruning.
    TruncatedSeries operator*(const TruncatedSeries& other) const {
        TruncatedSeries out(l_, m_, q_cap_, w_caps_, z_caps_);
        for (auto& [ea, va] : terms_)
            for (auto& [eb, vb] : other.terms_) {
                std::vector<int> exp(ea.size());
                for (std::size_t v = 0; v < exp.size(); ++v) exp[v] = ea[v] + eb[v];
                out.add_term(exp, va * vb);
            }
        return out;
    }

private:
    int l_, m_, q_cap_;
    std::vector<int> w_caps_, z_caps_;
    std::map<std::vector<int>, Rational> terms_;
};

/// Coefficients of tau at one weight n: a TruncatedSeries per pair (mu, nu).
struct PowerSumTable {
    int n;
    int l, m;
    std::map<std::pair<Partition, Partition>, TruncatedSeries> entries;
};

/// Frobenius expansion of one Schur function over power sums:
/// S_lambda = sum_mu chi_lambda(mu)/Z_mu P_mu.
inline std::map<Partition, Rational> schur_to_powersum(const Partition& lambda) {
    std::map<Partition, Rational> out;
    if (lambda.empty()) return out;
    const auto& table = character_table(lambda.weight());
    for (auto& mu : table.partitions()) {
        Rational coeff = Rational(table.at(lambda, mu)) / Rational(stabilizer_order(mu));
        if (coeff != 0) out[mu] = coeff;
    }
    return out;
}

namespace detail {

/// The content product r_lambda as a truncated series: exact numerator factors
/// (1 + w_a * content) per cell and truncated geometric expansions of the
/// denominator factors (1 - z_b * content)^{-1}.
inline TruncatedSeries content_product_series(const Partition& lambda, int l, int m,
                                              const TruncatedSeries& prototype) {
    std::vector<int> w_caps, z_caps;
    for (int a = 0; a < l; ++a) w_caps.push_back(prototype.cap(1 + a));
    for (int b = 0; b < m; ++b) z_caps.push_back(prototype.cap(1 + l + b));
    auto blank = [&] { return TruncatedSeries(l, m, prototype.cap(0), w_caps, z_caps); };

    TruncatedSeries acc = blank();
    std::vector<int> exp(acc.arity(), 0);
    exp[0] = lambda.weight();
    acc.add_term(exp, 1);

    auto cells = contents(lambda);
    for (int a = 0; a < l; ++a) {
        for (int c : cells) {
            TruncatedSeries lin = blank();
            lin.add_term(std::vector<int>(acc.arity(), 0), 1);
            if (c != 0) {
                std::vector<int> e1(acc.arity(), 0);
                e1[1 + a] = 1;
                lin.add_term(e1, c);
            }
            acc = acc * lin;
        }
    }
    for (int b = 0; b < m; ++b) {
        for (int c : cells) {
            TruncatedSeries geo = blank();
            Integer power = 1;
            for (int t = 0; t <= z_caps[b]; ++t) {
                std::vector<int> e(acc.arity(), 0);
                e[1 + l + b] = t;
                geo.add_term(e, Rational(power));
                power *= c;
                if (c == 0 && t == 0) {  // (1 - 0)^{-1} = 1, skip zero powers
                    break;
                }
            }
            acc = acc * geo;
        }
    }
    return acc;
}

}  // namespace detail

/// Expands tau^{(q,w,z)} through weight n_max with uniform per-variable degree
/// caps on w and z; returns one PowerSumTable per weight 1..n_max.
/// Extraction of the exponent (n, c, d) from table n equals F^c_d(mu, nu).
inline std::vector<PowerSumTable> tau_expand(int l, int m, int n_max, int degree_cap) {
    if (l < 0 || m < 0 || n_max < 1 || degree_cap < 0)
        throw std::invalid_argument("tau_expand: invalid arguments");
    std::vector<PowerSumTable> tables;
    for (int n = 1; n <= n_max; ++n) {
        PowerSumTable table{n, l, m, {}};
        const auto& chars = character_table(n);
        TruncatedSeries prototype = TruncatedSeries::uniform(l, m, n_max, degree_cap);
        for (auto& lambda : chars.partitions()) {
            TruncatedSeries r_series = detail::content_product_series(lambda, l, m, prototype);
            for (auto& mu : chars.partitions()) {
                long long chi_mu = chars.at(lambda, mu);
                if (chi_mu == 0) continue;
                for (auto& nu : chars.partitions()) {
                    long long chi_nu = chars.at(lambda, nu);
                    if (chi_nu == 0) continue;
                    Rational weight = Rational(Integer(chi_mu) * Integer(chi_nu)) /
                                      Rational(stabilizer_order(mu) * stabilizer_order(nu));
                    TruncatedSeries contribution = r_series;
                    contribution *= weight;
                    auto key = std::make_pair(mu, nu);
                    auto it = table.entries.find(key);
                    if (it == table.entries.end())
                        table.entries.emplace(key, std::move(contribution));
                    else
                        it->second += contribution;
                }
            }
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

enum class SpecialEvaluation {
    schur_at_t_infinity,
    schur_at_t_u,
    powersum_at_t_u,
    powersum_at_t_infinity,
};

/// Special evaluations: S_lambda(t_inf) = 1/h_lambda, S_lambda(t(u)) =
/// (u)_lambda/h_lambda, P_mu(t(u)) = u^{l(mu)}, P_mu(t_inf) = [mu = (1^n)].
inline Rational evaluate_special(SpecialEvaluation kind, const Partition& p,
                                 const Rational& u = Rational(0)) {
    switch (kind) {
        case SpecialEvaluation::schur_at_t_infinity:
            return Rational(1) / Rational(hook_product(p));
        case SpecialEvaluation::schur_at_t_u:
            return pochhammer_partition(u, p) / Rational(hook_product(p));
        case SpecialEvaluation::powersum_at_t_u: {
            Rational r = 1;
            for (int i = 0; i < p.length(); ++i) r *= u;
            return r;
        }
        case SpecialEvaluation::powersum_at_t_infinity:
            return p == Partition(std::vector<int>(p.weight(), 1)) ? 1 : 0;
    }
    throw std::logic_error("evaluate_special: unknown kind");
}

/// KP restriction s = t_inf: keeps only the nu = (1^n) column of the table.
inline std::map<std::pair<Partition, std::vector<int>>, Rational> kp_restrict(
    const PowerSumTable& table) {
    Partition identity(std::vector<int>(table.n, 1));
    std::map<std::pair<Partition, std::vector<int>>, Rational> out;
    for (auto& [key, series] : table.entries) {
        if (key.second != identity) continue;
        for (auto& [exp, val] : series.terms()) out[{key.first, exp}] = val;
    }
    return out;
}

/// JSON form of a PowerSumTable, with partitions in their textual form and
/// coefficients as exact rational strings.
inline nlohmann::json power_sum_table_to_json(const PowerSumTable& table) {
    nlohmann::json j;
    j["n"] = table.n;
    j["l"] = table.l;
    j["m"] = table.m;
    std::vector<int> caps;
    if (!table.entries.empty()) {
        const auto& s = table.entries.begin()->second;
        for (int v = 0; v < s.arity(); ++v) caps.push_back(s.cap(v));
    }
    j["caps"] = caps;
    j["entries"] = nlohmann::json::array();
    for (auto& [key, series] : table.entries) {
        nlohmann::json entry;
        entry["mu"] = key.first.to_string();
        entry["nu"] = key.second.to_string();
        entry["coeffs"] = nlohmann::json::array();
        for (auto& [exp, val] : series.terms()) {
            nlohmann::json c;
            c["exp"] = exp;
            c["val"] = to_string(val);
            entry["coeffs"].push_back(c);
        }
        j["entries"].push_back(entry);
    }
    return j;
}

}  // namespace hurwitz
