#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/series.hpp"

using namespace hurwitz;

TEST_CASE("TruncatedSeries arithmetic and caps") {
    TruncatedSeries s = TruncatedSeries::uniform(1, 1, 3, 2);
    s.add_term({1, 0, 0}, Rational(1, 2));
    s.add_term({1, 0, 0}, Rational(1, 2));
    CHECK(s.coefficient({1, 0, 0}) == 1);
    CHECK(s.coefficient({0, 1, 1}) == 0);

    // terms beyond the caps are silently pruned on entry ...
    s.add_term({4, 0, 0}, 7);
    // ... but asking for them is an error, not zero
    CHECK_THROWS_AS(s.coefficient({4, 0, 0}), UnderTruncationError);
    CHECK_THROWS_AS(s.coefficient({0, 3, 0}), UnderTruncationError);
    CHECK_THROWS_AS(s.coefficient({0, 0}), std::invalid_argument);

    TruncatedSeries t = TruncatedSeries::uniform(1, 1, 3, 2);
    t.add_term({1, 1, 0}, 3);
    TruncatedSeries p = s * t;
    CHECK(p.coefficient({2, 1, 0}) == 3);

    s *= Rational(0);
    CHECK(s.terms().empty());
}

TEST_CASE("schur_to_powersum") {
    auto s2 = schur_to_powersum(Partition({2}));
    REQUIRE(s2.size() == 2);
    CHECK(s2[Partition({2})] == Rational(1, 2));
    CHECK(s2[Partition({1, 1})] == Rational(1, 2));

    auto s11 = schur_to_powersum(Partition({1, 1}));
    CHECK(s11[Partition({2})] == Rational(-1, 2));
    CHECK(s11[Partition({1, 1})] == Rational(1, 2));

    CHECK(schur_to_powersum(Partition{}).empty());
}

TEST_CASE("tau_expand pinned coefficients") {
    auto tables = tau_expand(1, 1, 3, 3);
    REQUIRE(tables.size() == 3);

    auto at = [&](int n, const Partition& mu, const Partition& nu,
                  std::vector<int> exp) {
        return tables[n - 1].entries.at({mu, nu}).coefficient(exp);
    };

    CHECK(at(1, Partition({1}), Partition({1}), {1, 0, 0}) == 1);
    CHECK(at(2, Partition({2}), Partition({1, 1}), {2, 1, 0}) == Rational(1, 2));
    CHECK(at(3, Partition({3}), Partition({3}), {3, 0, 2}) == Rational(5, 3));
    CHECK_THROWS_AS(at(2, Partition({2}), Partition({2}), {2, 4, 0}),
                    UnderTruncationError);
    CHECK_THROWS_AS(tau_expand(1, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("tau_expand coefficients match the spectral formula") {
    const int n_max = 3, cap = 2;
    auto tables = tau_expand(2, 1, n_max, cap);
    for (auto& table : tables) {
        for (auto& mu : partitions_of(table.n))
            for (auto& nu : partitions_of(table.n))
                for (int c1 = 0; c1 <= cap; ++c1)
                    for (int c2 = 0; c2 <= cap; ++c2)
                        for (int d1 = 0; d1 <= cap; ++d1) {
                            Rational series_val = table.entries.at({mu, nu})
                                                      .coefficient({table.n, c1, c2, d1});
                            // e_c of n contents vanishes for c >= n, so the
                            // series has nothing beyond the c_a <= n-1 range
                            if (c1 > table.n - 1 || c2 > table.n - 1) {
                                CHECK(series_val == 0);
                                continue;
                            }
                            CHECK(series_val == f_coefficient({mu, nu, {c1, c2}, {d1}}));
                        }
    }
}

TEST_CASE("evaluate_special") {
    CHECK(evaluate_special(SpecialEvaluation::schur_at_t_infinity, Partition({2, 1})) ==
          Rational(1, 3));
    Rational u(3, 2);
    CHECK(evaluate_special(SpecialEvaluation::schur_at_t_u, Partition({2}), u) ==
          u * (u + 1) / 2);
    CHECK(evaluate_special(SpecialEvaluation::schur_at_t_u, Partition({1, 1}), Rational(1)) ==
          0);
    CHECK(evaluate_special(SpecialEvaluation::powersum_at_t_u, Partition({2, 1}), u) ==
          u * u);
    CHECK(evaluate_special(SpecialEvaluation::powersum_at_t_infinity, Partition({1, 1})) == 1);
    CHECK(evaluate_special(SpecialEvaluation::powersum_at_t_infinity, Partition({2})) == 0);
}

TEST_CASE("kp_restrict keeps the identity column") {
    auto tables = tau_expand(1, 0, 2, 2);
    auto restricted = kp_restrict(tables[1]);
    Partition id2({1, 1});
    for (auto& [key, val] : restricted) CHECK(key.first.weight() == 2);
    CHECK(restricted.at({Partition({2}), {2, 1}}) ==
          kp_coefficient(Partition({2}), {1}, {}));
    // F for mu = (1,1) with one strict point is 0, so kp_restrict drops it
    CHECK(kp_coefficient(id2, {1}, {}) == 0);
    CHECK(restricted.find({id2, {2, 1}}) == restricted.end());
    // every surviving entry matches the direct coefficient
    for (auto& [key, val] : restricted)
        CHECK(f_coefficient({key.first, id2, {key.second[1]}, {}}) == val);
}

TEST_CASE("power_sum_table_to_json shape") {
    auto tables = tau_expand(1, 1, 1, 1);
    auto j = power_sum_table_to_json(tables[0]);
    CHECK(j["n"] == 1);
    CHECK(j["l"] == 1);
    CHECK(j["m"] == 1);
    CHECK(j["caps"] == std::vector<int>{1, 1, 1});
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["mu"] == "1");
    CHECK(j["entries"][0]["nu"] == "1");
    bool found = false;
    for (auto& c : j["entries"][0]["coeffs"])
        if (c["exp"] == std::vector<int>{1, 0, 0}) {
            CHECK(c["val"] == "1");
            found = true;
        }
    CHECK(found);
}
