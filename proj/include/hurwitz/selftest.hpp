#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/cayley.hpp"
#include "hurwitz/coefficients.hpp"
#include "hurwitz/content_product.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

struct SuiteResult {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0 && instances > 0; }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++instances;
        if (!ok) {
            ++failures;
            if (first_counterexample.empty()) first_counterexample = describe();
        }
    }
};

enum class SelftestScope { quick, full };

namespace selftest {

/// All (c, d) index pairs with l, m <= max_arity and sum(c)+sum(d) <= max_total,
/// entries capped at n-1 for c.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> coefficient_indices(
    int n, int max_arity, int max_total) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<std::vector<int>> vectors_by_arity[2];
    for (int which = 0; which < 2; ++which) {
        for (int arity = 0; arity <= max_arity; ++arity) {
            std::vector<int> cur(arity, 0);
            auto rec = [&](auto&& self, int pos, int budget) -> void {
                if (pos == arity) {
                    vectors_by_arity[which].push_back(cur);
                    return;
                }
                int cap = which == 0 ? std::min(budget, n - 1) : budget;
                for (int v = 0; v <= cap; ++v) {
                    cur[pos] = v;
                    self(self, pos + 1, budget - v);
                }
            };
            rec(rec, 0, max_total);
        }
    }
    for (auto& c : vectors_by_arity[0]) {
        int sc = 0;
        for (int v : c) sc += v;
        for (auto& d : vectors_by_arity[1]) {
            int sd = 0;
            for (int v : d) sd += v;
            if (sc + sd <= max_total) out.emplace_back(c, d);
        }
    }
    return out;
}

inline std::string key_string(const CoefficientKey& key) {
    std::ostringstream os;
    os << "mu=(" << key.mu.to_string() << ") nu=(" << key.nu.to_string() << ") c=(";
    for (std::size_t i = 0; i < key.c.size(); ++i) os << (i ? "," : "") << key.c[i];
    os << ") d=(";
    for (std::size_t i = 0; i < key.d.size(); ++i) os << (i ? "," : "") << key.d[i];
    os << ")";
    return os.str();
}

inline SuiteResult class_size_sum(int n_max) {
    SuiteResult r{"partition.class-size-sum"};
    for (int n = 0; n <= n_max; ++n) {
        Integer total = 0;
        for (auto& p : partitions_of(n)) total += class_size(p);
        r.check(total == factorial(n), [&] { return "n=" + std::to_string(n); });
    }
    return r;
}

inline SuiteResult burnside(int n_max) {
    SuiteResult r{"partition.burnside"};
    for (int n = 1; n <= n_max; ++n) {
        Integer total = 0;
        for (auto& p : partitions_of(n)) total += dimension(p) * dimension(p);
        r.check(total == factorial(n), [&] { return "n=" + std::to_string(n); });
    }
    return r;
}

inline SuiteResult contents_closed_form(int n_max) {
    SuiteResult r{"partition.contents-closed-form"};
    for (int n = 0; n <= n_max; ++n) {
        for (auto& lambda : partitions_of(n)) {
            long long sum = 0;
            for (int c : contents(lambda)) sum += c;
            long long expected2 = 0;  // twice the closed form, to stay integral
            for (int i = 0; i < lambda.length(); ++i) {
                long long part = lambda.part(i);
                expected2 += part * (part - 2 * (i + 1) + 1);
            }
            r.check(2 * sum == expected2, [&] { return "lambda=" + lambda.to_string(); });
        }
    }
    return r;
}

inline SuiteResult hook_dimension_product(int n_max) {
    SuiteResult r{"partition.hook-dimension-product"};
    for (int n = 1; n <= n_max; ++n)
        for (auto& lambda : partitions_of(n))
            r.check(hook_product(lambda) * dimension(lambda) == factorial(n),
                    [&] { return "lambda=" + lambda.to_string(); });
    return r;
}

inline SuiteResult character_orthogonality(int n_max) {
    SuiteResult r{"character.orthogonality"};
    for (int n = 1; n <= n_max; ++n) {
        const auto& table = character_table(n);
        const auto& parts = table.partitions();
        // First orthogonality over class pairs.
        for (auto& mu : parts)
            for (auto& nu : parts) {
                Integer sum = 0;
                for (auto& lambda : parts)
                    sum += Integer(table.at(lambda, mu)) * table.at(lambda, nu);
                Integer expected = (mu == nu) ? stabilizer_order(mu) : Integer(0);
                r.check(sum == expected, [&] {
                    return "first, n=" + std::to_string(n) + " mu=" + mu.to_string() +
                           " nu=" + nu.to_string();
                });
            }
        // Second orthogonality over representation pairs.
        for (auto& a : parts)
            for (auto& b : parts) {
                Rational sum = 0;
                for (auto& mu : parts)
                    sum += Rational(Integer(table.at(a, mu)) * table.at(b, mu)) /
                           Rational(stabilizer_order(mu));
                r.check(sum == (a == b ? 1 : 0), [&] {
                    return "second, n=" + std::to_string(n) + " lambda=" + a.to_string() +
                           " lambda'=" + b.to_string();
                });
            }
    }
    return r;
}

inline SuiteResult conjugate_sign_rule(int n_max) {
    SuiteResult r{"character.conjugate-sign"};
    for (int n = 1; n <= n_max; ++n) {
        const auto& table = character_table(n);
        for (auto& lambda : table.partitions())
            for (auto& mu : table.partitions()) {
                long long sign = colength(mu) % 2 ? -1 : 1;
                r.check(table.at(lambda.conjugate(), mu) == sign * table.at(lambda, mu), [&] {
                    return "lambda=" + lambda.to_string() + " mu=" + mu.to_string();
                });
            }
    }
    return r;
}

inline SuiteResult rho_telescoping(int trials) {
    SuiteResult r{"content-product.telescoping"};
    std::mt19937 rng(20240831);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(5, 9);
    for (int t = 0; t < trials; ++t) {
        HypergeometricParams params(Rational(num(rng) * 2 + 1, den(rng)),
                                    {Rational(num(rng), den(rng))},
                                    {Rational(num(rng), den(rng))});
        for (int j = -6; j <= 6; ++j) {
            try {
                // product form stays valid even when rho vanishes
                Rational lhs = rho(params, j);
                r.check(lhs == r_factor(params, j) * rho(params, j - 1), [&] {
                    return "j=" + std::to_string(j) + " q=" + to_string(params.q);
                });
            } catch (const SingularParameterError&) {
                // pole on this draw; not a telescoping instance
            }
        }
    }
    return r;
}

inline SuiteResult content_product_factorized(int weight_max) {
    SuiteResult r{"content-product.factorized-form"};
    HypergeometricParams params(Rational(2, 3), {Rational(1, 5), Rational(-1, 7)},
                                {Rational(1, 11)});
    for (int n = 0; n <= weight_max; ++n) {
        for (auto& lambda : partitions_of(n)) {
            Rational expected = 1;
            for (int i = 0; i < n; ++i) expected *= params.q;
            for (int c : contents(lambda)) {
                for (auto& w : params.w) expected *= 1 + c * w;
                for (auto& z : params.z) expected /= 1 - c * z;
            }
            r.check(content_product(params, lambda, 0) == expected,
                    [&] { return "lambda=" + lambda.to_string(); });
        }
    }
    return r;
}

inline SuiteResult pochhammer_content_identity(int weight_max) {
    SuiteResult r{"content-product.pochhammer-identity"};
    for (Rational w : {Rational(1, 3), Rational(-2, 5), Rational(3, 2)}) {
        for (int n = 0; n <= weight_max; ++n) {
            for (auto& lambda : partitions_of(n)) {
                Rational lhs = 1;
                for (int c : contents(lambda)) lhs *= 1 + c * w;
                Rational rhs = pochhammer_partition(1 / w, lambda);
                for (int i = 0; i < n; ++i) rhs *= w;
                r.check(lhs == rhs, [&] {
                    return "lambda=" + lambda.to_string() + " w=" + to_string(w);
                });
            }
        }
    }
    return r;
}

/// N-shift: r_lambda(N) = r_0(N) * r~_lambda(0) with the shifted parameters
/// w~ = w/(1+Nw), z~ = z/(1-Nz), q~ = q prod(1+Nw)/prod(1-Nz).
inline SuiteResult n_shift_identity(int weight_max) {
    SuiteResult r{"content-product.n-shift"};
    HypergeometricParams params(Rational(3, 4), {Rational(1, 5)}, {Rational(1, 7)});
    for (int N : {-2, -1, 1, 2}) {
        Rational q_shift = params.q;
        std::vector<Rational> w_shift, z_shift;
        for (auto& w : params.w) {
            q_shift *= 1 + N * w;
            w_shift.push_back(w / (1 + N * w));
        }
        for (auto& z : params.z) {
            q_shift /= 1 - N * z;
            z_shift.push_back(z / (1 - N * z));
        }
        HypergeometricParams shifted(q_shift, w_shift, z_shift);
        Rational transfer = r_zero(params, N);
        for (int n = 0; n <= weight_max; ++n)
            for (auto& lambda : partitions_of(n))
                r.check(content_product(params, lambda, N) ==
                            transfer * content_product(shifted, lambda, 0),
                        [&] {
                            return "N=" + std::to_string(N) + " lambda=" + lambda.to_string();
                        });
    }
    return r;
}

/// e_k/h_k of the contents versus direct expansion of the generating products.
inline SuiteResult content_symmetric_generating(int weight_max, int k_max) {
    SuiteResult r{"content-product.symmetric-generating"};
    for (int n = 0; n <= weight_max; ++n) {
        for (auto& lambda : partitions_of(n)) {
            auto cells = contents(lambda);
            // prod (1 + c t) truncated at k_max
            std::vector<Rational> elem(k_max + 1, 0), comp(k_max + 1, 0);
            elem[0] = comp[0] = 1;
            for (int c : cells) {
                for (int j = k_max; j >= 1; --j) elem[j] += Rational(c) * elem[j - 1];
                // (1 - c t)^{-1} factor: comp *= sum_t c^t t^t
                std::vector<Rational> next(k_max + 1, 0);
                for (int j = 0; j <= k_max; ++j) {
                    Rational power = 1;
                    for (int t = 0; j + t <= k_max; ++t) {
                        next[j + t] += comp[j] * power;
                        power *= c;
                    }
                }
                comp = std::move(next);
            }
            for (int k = 0; k <= k_max; ++k) {
                r.check(Rational(content_symmetric(lambda, k, SymmetricKind::elementary)) ==
                            elem[k],
                        [&] { return "e, lambda=" + lambda.to_string() + " k=" + std::to_string(k); });
                r.check(Rational(content_symmetric(lambda, k, SymmetricKind::complete)) == comp[k],
                        [&] { return "h, lambda=" + lambda.to_string() + " k=" + std::to_string(k); });
            }
        }
    }
    return r;
}

/// Core acceptance sweep: spectral coefficient == signed Hurwitz assembly, and
/// n! * coefficient == brute-force monotone path count. Also checks symmetry
/// in (mu, nu) and integrality/nonnegativity of the path-count bridge.
inline void three_way_equivalence(int n_max, int max_arity, int max_total,
                                  SuiteResult& equivalence, SuiteResult& integrality,
                                  SuiteResult& symmetry) {
    for (int n = 1; n <= n_max; ++n) {
        auto mus = partitions_of(n);
        Integer nfact = factorial(n);
        for (auto& [c, d] : coefficient_indices(n, max_arity, max_total)) {
            // count_monotone_pairs depends on (c, d) and classes only; reuse
            // across the symmetric pair.
            for (auto& mu : mus)
                for (auto& nu : mus) {
                    CoefficientKey key{mu, nu, c, d};
                    Rational f = f_coefficient(key);
                    Rational assembled = signed_hurwitz_sum(key);
                    unsigned long long paths =
                        count_monotone_pairs(mu, nu, BandSpec::from_key(c, d));
                    equivalence.check(f == assembled && Rational(nfact) * f == paths,
                                      [&] { return key_string(key); });
                    Rational scaled = Rational(nfact) * f;
                    Integer scaled_int;
                    integrality.check(as_integer(scaled, scaled_int) && scaled_int >= 0,
                                      [&] { return key_string(key); });
                    if (canonical_less(mu, nu)) {
                        CoefficientKey flipped{nu, mu, c, d};
                        symmetry.check(f == f_coefficient(flipped),
                                       [&] { return key_string(key); });
                    }
                }
        }
    }
}

inline SuiteResult band_order_independence(int n_max) {
    SuiteResult r{"cayley.band-order-independence"};
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> keys = {
        {{1, 2}, {}}, {{2}, {1}}, {{1}, {2}}, {{}, {1, 2}}, {{2, 1}, {1}},
    };
    for (int n = 2; n <= n_max; ++n) {
        for (auto& mu : partitions_of(n)) {
            for (auto& nu : partitions_of(n)) {
                for (auto& [c, d] : keys) {
                    if (!c.empty() && *std::max_element(c.begin(), c.end()) > n - 1) continue;
                    auto base = count_monotone_pairs(mu, nu, BandSpec::from_key(c, d));
                    // permute within c and within d
                    auto c2 = c, d2 = d;
                    std::reverse(c2.begin(), c2.end());
                    std::reverse(d2.begin(), d2.end());
                    r.check(count_monotone_pairs(mu, nu, BandSpec::from_key(c2, d2)) == base,
                            [&] { return key_string({mu, nu, c, d}) + " permuted"; });
                    // interleave c and d bands
                    BandSpec interleaved;
                    std::size_t i = 0, j = 0;
                    while (i < c.size() || j < d.size()) {
                        if (j < d.size())
                            interleaved.bands.push_back({d[j++], BandSpec::Mode::weak});
                        if (i < c.size())
                            interleaved.bands.push_back({c[i++], BandSpec::Mode::strict});
                    }
                    r.check(count_monotone_pairs(mu, nu, interleaved) == base,
                            [&] { return key_string({mu, nu, c, d}) + " interleaved"; });
                }
            }
        }
    }
    return r;
}

/// Single strict band parity gate: F^(c)(mu,nu) vanishes when the
/// Riemann-Hurwitz value 2g = 2 + c - l(mu) - l(nu) is odd.
inline SuiteResult genus_parity_gate(int n_max) {
    SuiteResult r{"coefficient.genus-parity-gate"};
    for (int n = 1; n <= n_max; ++n)
        for (auto& mu : partitions_of(n))
            for (auto& nu : partitions_of(n))
                for (int c = 0; c <= std::min(3, n - 1); ++c) {
                    RamificationData data{mu, nu, {c}, {}};
                    if (double_genus(data) % 2 == 0) continue;
                    r.check(f_coefficient(data) == 0, [&] { return key_string(data); });
                }
    return r;
}

inline SuiteResult frobenius_oracle(int n_max, int max_profiles) {
    SuiteResult r{"coefficient.frobenius-oracle"};
    for (int n = 1; n <= n_max; ++n) {
        auto parts = partitions_of(n);
        Integer nfact = factorial(n);
        std::vector<Partition> list;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (!list.empty()) {
                Rational h = frobenius_hurwitz(list, 0);
                unsigned long long tuples = count_cover_tuples(list);
                r.check(Rational(nfact) * h == tuples, [&] {
                    std::string s = "profiles=";
                    for (auto& p : list) s += "(" + p.to_string() + ")";
                    return s;
                });
            }
            if (list.size() == static_cast<std::size_t>(max_profiles)) return;
            for (std::size_t i = start; i < parts.size(); ++i) {
                list.push_back(parts[i]);
                self(self, i);
                list.pop_back();
            }
        };
        rec(rec, 0);
    }
    return r;
}

inline SuiteResult jucys_murphy_eigenvalues(int n_max, int k_max) {
    SuiteResult r{"cayley.jucys-murphy-eigenvalues"};
    for (int n = 1; n <= n_max; ++n) {
        for (auto& lambda : partitions_of(n)) {
            CenterElement f = idempotent(lambda);
            for (int k = 0; k <= k_max; ++k) {
                for (auto kind : {SymmetricKind::elementary, SymmetricKind::complete}) {
                    CenterElement product = multiply_central(f, kind, k);
                    CenterElement expected = f;
                    Rational eigen = Rational(content_symmetric(lambda, k, kind));
                    for (auto& [p, v] : expected.coefficients) v *= eigen;
                    for (auto it = expected.coefficients.begin();
                         it != expected.coefficients.end();)
                        it = it->second == 0 ? expected.coefficients.erase(it) : std::next(it);
                    r.check(product == expected, [&] {
                        return "lambda=" + lambda.to_string() + " k=" + std::to_string(k) +
                               (kind == SymmetricKind::elementary ? " e" : " h");
                    });
                }
            }
        }
    }
    return r;
}

inline SuiteResult idempotent_orthogonality(int n_max) {
    SuiteResult r{"cayley.idempotent-orthogonality"};
    for (int n = 1; n <= n_max; ++n) {
        auto parts = partitions_of(n);
        for (auto& a : parts) {
            CenterElement fa = idempotent(a);
            for (auto& b : parts) {
                CenterElement product = multiply_center_elements(fa, idempotent(b));
                CenterElement expected = (a == b) ? fa : CenterElement{n, {}};
                r.check(product == expected, [&] {
                    return "lambda=" + a.to_string() + " mu=" + b.to_string();
                });
            }
        }
    }
    return r;
}

inline SuiteResult series_extraction(int n_max, int degree_cap) {
    SuiteResult r{"series.extraction-consistency"};
    for (int l = 0; l <= 2; ++l) {
        for (int m = 0; m <= 2; ++m) {
            auto tables = tau_expand(l, m, n_max, degree_cap);
            for (auto& table : tables) {
                auto pairs = partitions_of(table.n);
                for (auto& mu : pairs)
                    for (auto& nu : pairs) {
                        auto it = table.entries.find({mu, nu});
                        // enumerate all in-cap (c, d)
                        std::vector<int> exp(1 + l + m, 0);
                        exp[0] = table.n;
                        auto rec = [&](auto&& self, int pos) -> void {
                            if (pos == 1 + l + m) {
                                std::vector<int> c(exp.begin() + 1, exp.begin() + 1 + l);
                                std::vector<int> d(exp.begin() + 1 + l, exp.end());
                                for (int v : c)
                                    if (v > table.n - 1) return;
                                Rational series_val =
                                    it == table.entries.end() ? Rational(0)
                                                              : it->second.coefficient(exp);
                                Rational direct = f_coefficient({mu, nu, c, d});
                                r.check(series_val == direct,
                                        [&] { return key_string({mu, nu, c, d}); });
                                return;
                            }
                            for (int v = 0; v <= degree_cap; ++v) {
                                exp[pos] = v;
                                self(self, pos + 1);
                            }
                            exp[pos] = 0;
                        };
                        rec(rec, 1);
                    }
            }
        }
    }
    return r;
}

inline SuiteResult frobenius_round_trip(int n_max) {
    SuiteResult r{"series.frobenius-round-trip"};
    for (int n = 1; n <= n_max; ++n) {
        const auto& table = character_table(n);
        for (auto& a : table.partitions()) {
            auto coeffs = schur_to_powersum(a);
            for (auto& b : table.partitions()) {
                Rational sum = 0;
                for (auto& [mu, v] : coeffs) sum += v * table.at(b, mu);
                r.check(sum == (a == b ? 1 : 0), [&] {
                    return "lambda=" + a.to_string() + " lambda'=" + b.to_string();
                });
            }
        }
    }
    return r;
}

inline SuiteResult special_evaluations(int n_max) {
    SuiteResult r{"series.special-evaluations"};
    std::mt19937 rng(7151);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int n = 1; n <= n_max; ++n) {
        for (auto& lambda : partitions_of(n)) {
            Rational u(num(rng), 7);
            Rational lhs =
                evaluate_special(SpecialEvaluation::schur_at_t_u, lambda, u) *
                Rational(hook_product(lambda));
            r.check(lhs == pochhammer_partition(u, lambda),
                    [&] { return "lambda=" + lambda.to_string() + " u=" + to_string(u); });
            r.check(evaluate_special(SpecialEvaluation::schur_at_t_infinity, lambda) *
                            Rational(hook_product(lambda)) ==
                        1,
                    [&] { return "t_inf, lambda=" + lambda.to_string(); });
        }
    }
    return r;
}

inline SuiteResult corollary_double_hurwitz(int n_max, int k_max) {
    SuiteResult r{"corollary.double-hurwitz"};
    for (int n = 1; n <= n_max; ++n) {
        Integer nfact = factorial(n);
        for (auto& mu : partitions_of(n))
            for (auto& nu : partitions_of(n))
                for (int k = 0; k <= k_max; ++k) {
                    // all-strict bands of length 1 impose no monotonicity at all
                    BandSpec unconstrained;
                    for (int i = 0; i < k; ++i)
                        unconstrained.bands.push_back({1, BandSpec::Mode::strict});
                    Rational dh = double_hurwitz(mu, nu, k);
                    r.check(Rational(nfact) * dh ==
                                count_monotone_pairs(mu, nu, unconstrained),
                            [&] { return key_string({mu, nu, std::vector<int>(k, 1), {}}); });
                }
    }
    return r;
}

inline SuiteResult corollary_parity_split(int n_max, int d_max) {
    SuiteResult r{"corollary.parity-split"};
    for (int n = 1; n <= n_max; ++n)
        for (auto& mu : partitions_of(n))
            for (auto& nu : partitions_of(n))
                for (int d = 0; d <= d_max; ++d) {
                    auto [plus, minus] = parity_split_hurwitz(mu, nu, d);
                    Rational f = f_coefficient({mu, nu, {}, {d}});
                    int sign = (n + d) % 2 ? -1 : 1;
                    r.check(f == sign * (plus - minus), [&] {
                        return key_string({mu, nu, {}, {d}});
                    });
                }
    return r;
}

inline SuiteResult corollary_kp(int n_max) {
    SuiteResult r{"corollary.kp-restriction"};
    for (int l = 0; l <= 1; ++l)
        for (int m = 0; m <= 1; ++m) {
            auto tables = tau_expand(l, m, n_max, 3);
            for (auto& table : tables) {
                auto restricted = kp_restrict(table);
                for (auto& [key, value] : restricted) {
                    std::vector<int> c(key.second.begin() + 1, key.second.begin() + 1 + l);
                    std::vector<int> d(key.second.begin() + 1 + l, key.second.end());
                    bool admissible = true;
                    for (int v : c)
                        if (v > table.n - 1) admissible = false;
                    if (!admissible) continue;
                    r.check(value == kp_coefficient(key.first, c, d),
                            [&] { return "mu=" + key.first.to_string(); });
                }
            }
        }
    return r;
}

inline SuiteResult corollary_aggregated(int n_max, int c_max, int l_max) {
    SuiteResult r{"corollary.aggregated-strict"};
    for (int n = 1; n <= n_max; ++n)
        for (auto& mu : partitions_of(n))
            for (auto& nu : partitions_of(n))
                for (int c = 0; c <= c_max; ++c)
                    for (int l = 1; l <= l_max; ++l) {
                        // direct sum over compositions, independent loop
                        Rational direct = 0;
                        std::vector<int> comp(l, 0);
                        auto rec = [&](auto&& self, int pos, int rem) -> void {
                            if (pos == l - 1) {
                                comp[pos] = rem;
                                bool ok = true;
                                for (int v : comp)
                                    if (v > n - 1) ok = false;
                                if (ok) direct += f_coefficient({mu, nu, comp, {}});
                                return;
                            }
                            for (int v = 0; v <= rem; ++v) {
                                comp[pos] = v;
                                self(self, pos + 1, rem - v);
                            }
                        };
                        rec(rec, 0, c);
                        r.check(aggregated_strict(mu, nu, c, l) == direct, [&] {
                            return "mu=" + mu.to_string() + " nu=" + nu.to_string() +
                                   " c=" + std::to_string(c) + " l=" + std::to_string(l);
                        });
                    }
    return r;
}

}  // namespace selftest

/// Runs every invariant suite at quick (n <= 4 style) or full (acceptance
/// sweep) scale; failures are reported, never thrown.
inline std::vector<SuiteResult> run_selftest(SelftestScope scope) {
    bool full = scope == SelftestScope::full;
    std::vector<SuiteResult> results;
    results.push_back(selftest::class_size_sum(full ? 30 : 10));
    results.push_back(selftest::burnside(full ? 10 : 6));
    results.push_back(selftest::contents_closed_form(full ? 12 : 8));
    results.push_back(selftest::hook_dimension_product(full ? 10 : 6));
    results.push_back(selftest::character_orthogonality(full ? 8 : 5));
    results.push_back(selftest::conjugate_sign_rule(full ? 8 : 5));
    results.push_back(selftest::rho_telescoping(full ? 40 : 10));
    results.push_back(selftest::content_product_factorized(full ? 6 : 4));
    results.push_back(selftest::pochhammer_content_identity(full ? 6 : 4));
    results.push_back(selftest::n_shift_identity(4));
    results.push_back(selftest::content_symmetric_generating(full ? 6 : 4, 4));
    {
        SuiteResult equivalence{"coefficient.three-way-equivalence"};
        SuiteResult integrality{"coefficient.integrality"};
        SuiteResult symmetry{"coefficient.mu-nu-symmetry"};
        selftest::three_way_equivalence(full ? 5 : 4, 2, full ? 4 : 3, equivalence,
                                        integrality, symmetry);
        results.push_back(std::move(equivalence));
        results.push_back(std::move(integrality));
        results.push_back(std::move(symmetry));
    }
    results.push_back(selftest::band_order_independence(4));
    results.push_back(selftest::genus_parity_gate(4));
    results.push_back(selftest::frobenius_oracle(full ? 5 : 3, 4));
    results.push_back(selftest::jucys_murphy_eigenvalues(full ? 5 : 3, 4));
    results.push_back(selftest::idempotent_orthogonality(full ? 5 : 4));
    results.push_back(selftest::series_extraction(full ? 4 : 3, 3));
    results.push_back(selftest::frobenius_round_trip(6));
    results.push_back(selftest::special_evaluations(6));
    results.push_back(selftest::corollary_double_hurwitz(full ? 5 : 4, 3));
    results.push_back(selftest::corollary_parity_split(4, 3));
    results.push_back(selftest::corollary_kp(4));
    results.push_back(selftest::corollary_aggregated(4, 3, 3));
    return results;
}

}  // namespace hurwitz
