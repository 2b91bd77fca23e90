#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// The parameter tuple (q, w_1..w_l, z_1..z_m) of the hypergeometric family.
/// Parameters are exact rationals throughout.
struct HypergeometricParams {
    Rational q;
    std::vector<Rational> w;
    std::vector<Rational> z;

    HypergeometricParams(Rational q_, std::vector<Rational> w_ = {},
                         std::vector<Rational> z_ = {})
        : q(std::move(q_)), w(std::move(w_)), z(std::move(z_)) {
        if (q == 0) throw std::invalid_argument("hypergeometric params: q must be nonzero");
    }

    int l() const { return static_cast<int>(w.size()); }
    int m() const { return static_cast<int>(z.size()); }
};

/// Raised when a denominator factor 1 - k*z_b (or 1 - k*w_a) vanishes.
class SingularParameterError : public std::runtime_error {
public:
    SingularParameterError(const std::string& parameter, int k)
        : std::runtime_error("singular parameter: factor 1 - " + std::to_string(k) + "*" +
                             parameter + " vanishes"),
          parameter_(parameter), k_(k) {}

    const std::string& parameter() const { return parameter_; }
    int k() const { return k_; }

private:
    std::string parameter_;
    int k_;
};

/// r_j = q * prod_a (1 + j w_a) / prod_b (1 - j z_b).
inline Rational r_factor(const HypergeometricParams& params, int j) {
    Rational r = params.q;
    for (std::size_t a = 0; a < params.w.size(); ++a)
        r *= 1 + j * params.w[a];
    for (std::size_t b = 0; b < params.z.size(); ++b) {
        Rational den = 1 - j * params.z[b];
        if (den == 0) throw SingularParameterError("z_" + std::to_string(b + 1), j);
        r /= den;
    }
    return r;
}

/// rho_j: rho_0 = 1; for j > 0, rho_j = q^j prod_{k=1}^j prod_a (1+k w_a) / prod_b (1-k z_b);
/// for j < 0 the mirrored product over k = 0..|j|-1 with w and z exchanged.
inline Rational rho(const HypergeometricParams& params, int j) {
    if (j == 0) return 1;
    Rational result = 1;
    if (j > 0) {
        for (int k = 1; k <= j; ++k) {
            result *= params.q;
            for (auto& w : params.w) result *= 1 + k * w;
            for (std::size_t b = 0; b < params.z.size(); ++b) {
                Rational den = 1 - k * params.z[b];
                if (den == 0) throw SingularParameterError("z_" + std::to_string(b + 1), k);
                result /= den;
            }
        }
    } else {
        for (int k = 0; k < -j; ++k) {
            result /= params.q;
            for (auto& z : params.z) result *= 1 + k * z;
            for (std::size_t a = 0; a < params.w.size(); ++a) {
                Rational den = 1 - k * params.w[a];
                if (den == 0) throw SingularParameterError("w_" + std::to_string(a + 1), k);
                result /= den;
            }
        }
    }
    return result;
}

/// r_0(N): the empty-diagram normalisation, built from the rho products.
/// r_0(0) = 1, r_0(N) = prod_{j=0}^{N-1} rho_j, r_0(-N) = prod_{j=1}^{N} rho_{-j}^{-1}.
inline Rational r_zero(const HypergeometricParams& params, int N) {
    Rational result = 1;
    if (N > 0) {
        for (int j = 0; j < N; ++j) result *= rho(params, j);
    } else {
        for (int j = 1; j <= -N; ++j) result /= rho(params, -j);
    }
    return result;
}

/// Content product r_lambda(N) = r_0(N) * prod_{(i,j) in lambda} r_{N+j-i}.
inline Rational content_product(const HypergeometricParams& params, const Partition& lambda,
                                int N = 0) {
    Rational result = r_zero(params, N);
    for (int c : contents(lambda)) result *= r_factor(params, N + c);
    return result;
}

/// Extended Pochhammer symbol (u)_lambda = prod_i (u-i+1)_{lambda_i}
/// with (x)_k the rising factorial.
inline Rational pochhammer_partition(const Rational& u, const Partition& lambda) {
    Rational result = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        Rational base = u - i;
        for (int k = 0; k < lambda.part(i); ++k) result *= base + k;
    }
    return result;
}

enum class SymmetricKind { elementary, complete };

/// e_k or h_k evaluated on the content multiset of lambda, via Newton's
/// identities on the content power sums. Always an exact integer.
inline Integer content_symmetric(const Partition& lambda, int k, SymmetricKind kind) {
    if (k < 0) throw std::invalid_argument("content_symmetric: k must be >= 0");
    if (k == 0) return 1;
    auto cells = contents(lambda);
    if (kind == SymmetricKind::elementary && k > static_cast<int>(cells.size())) return 0;

    std::vector<Rational> power(k + 1, 0);
    for (int j = 1; j <= k; ++j) {
        Integer p = 0;
        for (int c : cells) {
            Integer t = 1;
            for (int e = 0; e < j; ++e) t *= c;
            p += t;
        }
        power[j] = Rational(p);
    }

    std::vector<Rational> value(k + 1, 0);
    value[0] = 1;
    for (int j = 1; j <= k; ++j) {
        Rational acc = 0;
        for (int i = 1; i <= j; ++i) {
            if (kind == SymmetricKind::elementary) {
                Rational term = value[j - i] * power[i];
                acc += (i % 2 ? term : -term);
            } else {
                acc += value[j - i] * power[i];
            }
        }
        value[j] = acc / j;
    }
    Integer out;
    if (!as_integer(value[k], out))
        throw std::logic_error("content_symmetric: non-integer result");
    return out;
}

}  // namespace hurwitz
