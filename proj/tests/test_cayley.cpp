#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/cayley.hpp"
#include "hurwitz/coefficients.hpp"

using namespace hurwitz;

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Perm::identity(3)) == Partition({1, 1, 1}));
    CHECK(cycle_type(Perm({1, 0, 2})) == Partition({2, 1}));
    CHECK(cycle_type(Perm({1, 2, 0})) == Partition({3}));
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("count_monotone_pairs pinned values") {
    CHECK(count_monotone_pairs(Partition({2}), Partition({1, 1}),
                               BandSpec::from_key({1}, {})) == 1);
    CHECK(count_monotone_pairs(Partition({3}), Partition({3}),
                               BandSpec::from_key({1, 1}, {})) == 12);
    CHECK(count_monotone_pairs(Partition({3}), Partition({3}),
                               BandSpec::from_key({}, {2})) == 10);
    // empty band structure: paths of length 0
    CHECK(count_monotone_pairs(Partition({2, 1}), Partition({2, 1}),
                               BandSpec::from_key({}, {})) == 3);
    CHECK(count_monotone_pairs(Partition({2, 1}), Partition({3}),
                               BandSpec::from_key({}, {})) == 0);
    CHECK_THROWS_AS(count_monotone_pairs(Partition({8}), Partition({8}),
                                         BandSpec::from_key({}, {})),
                    CapExceededError);
}

TEST_CASE("strict bands forbid repeated larger elements") {
    // in S_2 the only transposition is (1 2); a strict band of length 2 has no
    // valid sequence, a weak band does
    CHECK(count_monotone_pairs(Partition({2}), Partition({2}),
                               BandSpec::from_key({2}, {})) == 0);
    CHECK(count_monotone_pairs(Partition({2}), Partition({2}),
                               BandSpec::from_key({}, {2})) == 1);
}

TEST_CASE("count_cover_tuples pinned values") {
    CHECK(count_cover_tuples({Partition({2}), Partition({2})}) == 1);
    for (int n = 1; n <= 5; ++n)
        CHECK(count_cover_tuples({Partition(std::vector<int>(n, 1))}) == 1);
    CHECK(count_cover_tuples({Partition({3}), Partition({3}), Partition({2, 1})}) == 0);
    // three 2-cycles in S_3 multiplying to the identity: none (parity), but
    // (3),(3) pairs: inverse pairs
    CHECK(count_cover_tuples({Partition({3}), Partition({3})}) == 2);
}

TEST_CASE("idempotent structure") {
    CHECK(idempotent(Partition({1})) ==
          CenterElement{1, {{Partition({1}), 1}}});
    CHECK(idempotent(Partition({2})) ==
          CenterElement{2, {{Partition({2}), Rational(1, 2)}, {Partition({1, 1}), Rational(1, 2)}}});
    CHECK(idempotent(Partition({1, 1})) ==
          CenterElement{2, {{Partition({2}), Rational(-1, 2)}, {Partition({1, 1}), Rational(1, 2)}}});
}

TEST_CASE("idempotents are orthogonal") {
    for (int n = 1; n <= 4; ++n) {
        for (auto& a : partitions_of(n)) {
            CenterElement fa = idempotent(a);
            for (auto& b : partitions_of(n)) {
                CenterElement product = multiply_center_elements(fa, idempotent(b));
                if (a == b)
                    CHECK(product == fa);
                else
                    CHECK(product == CenterElement{n, {}});
            }
        }
    }
}

TEST_CASE("multiply_central by Jucys-Murphy symmetric functions") {
    // e_0 is the identity operator
    CenterElement c21{3, {{Partition({2, 1}), 1}}};
    CHECK(multiply_central(c21, SymmetricKind::elementary, 0) == c21);

    // e_1(J) in S_2 is the single transposition (1 2)
    CenterElement id2{2, {{Partition({1, 1}), 1}}};
    CenterElement swap2{2, {{Partition({2}), 1}}};
    CHECK(multiply_central(id2, SymmetricKind::elementary, 1) == swap2);
    CHECK(multiply_central(swap2, SymmetricKind::elementary, 1) == id2);
}

TEST_CASE("Jucys-Murphy eigenvalues on idempotents") {
    for (int n = 1; n <= 4; ++n) {
        for (auto& lambda : partitions_of(n)) {
            CenterElement f = idempotent(lambda);
            for (int k = 0; k <= 3; ++k) {
                for (auto kind : {SymmetricKind::elementary, SymmetricKind::complete}) {
                    CenterElement scaled = f;
                    Rational eigen = Rational(content_symmetric(lambda, k, kind));
                    for (auto& [p, v] : scaled.coefficients) v *= eigen;
                    for (auto it = scaled.coefficients.begin(); it != scaled.coefficients.end();)
                        it = it->second == 0 ? scaled.coefficients.erase(it) : std::next(it);
                    CHECK(multiply_central(f, kind, k) == scaled);
                }
            }
        }
    }
}

TEST_CASE("path count bridge to the spectral coefficient") {
    for (int n = 1; n <= 4; ++n) {
        Integer nfact = factorial(n);
        for (auto& mu : partitions_of(n))
            for (auto& nu : partitions_of(n)) {
                CHECK(Rational(nfact) * f_coefficient({mu, nu, {}, {2}}) ==
                      count_monotone_pairs(mu, nu, BandSpec::from_key({}, {2})));
                if (n >= 2)
                    CHECK(Rational(nfact) * f_coefficient({mu, nu, {1}, {1}}) ==
                          count_monotone_pairs(mu, nu, BandSpec::from_key({1}, {1})));
            }
    }
}

TEST_CASE("cover tuple bridge to the Frobenius formula") {
    for (int n = 2; n <= 4; ++n) {
        Integer nfact = factorial(n);
        auto parts = partitions_of(n);
        for (auto& a : parts)
            for (auto& b : parts)
                CHECK(Rational(nfact) * frobenius_hurwitz({a, b}, 0) ==
                      count_cover_tuples({a, b}));
    }
}
