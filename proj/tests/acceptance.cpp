// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All checks are exact rational identities at desk scale.

#include <iostream>
#include <string>
#include <vector>

#include "hurwitz/cayley.hpp"
#include "hurwitz/coefficients.hpp"
#include "hurwitz/selftest.hpp"

using namespace hurwitz;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

void report(const std::string& name, const std::vector<SuiteResult>& suites) {
    bool ok = true;
    std::string detail;
    for (auto& s : suites) {
        if (!s.passed()) {
            ok = false;
            if (detail.empty()) detail = s.name + ": " + s.first_counterexample;
        }
    }
    report(name, ok, detail);
}

}  // namespace

int main() {
    // 1 & 7: three-way equivalence and integrality over n <= 5, arity <= 2,
    // total weight <= 4; 10-minute single-thread budget.
    {
        SuiteResult equivalence{"equivalence"};
        SuiteResult integrality{"integrality"};
        SuiteResult symmetry{"symmetry"};
        selftest::three_way_equivalence(5, 2, 4, equivalence, integrality, symmetry);
        report("1. three-way equivalence (spectral = signed assembly = paths/n!)",
               {equivalence, symmetry});
        report("7. integrality sweep (n! F is a nonnegative integer)", {integrality});
    }

    // 2: Frobenius formula against direct tuple enumeration, <= 4 profiles of n <= 5.
    report("2. Frobenius oracle (n! H = cover tuple count)",
           {selftest::frobenius_oracle(5, 4)});

    // 3: series expansion coefficients match the direct coefficients, n <= 4,
    // l, m <= 2, caps 3.
    report("3. series consistency (tau expansion = direct coefficients)",
           {selftest::series_extraction(4, 3)});

    // 4: character table identities.
    report("4. character suite (orthogonality n<=8, Burnside n<=10, conjugate sign n<=8)",
           {selftest::character_orthogonality(8), selftest::burnside(10),
            selftest::conjugate_sign_rule(8)});

    // 5: Jucys-Murphy eigenvalues and idempotent orthogonality, n <= 5, k <= 4.
    report("5. Jucys-Murphy spectral suite",
           {selftest::jucys_murphy_eigenvalues(5, 4),
            selftest::idempotent_orthogonality(5)});

    // 6: corollaries.
    report("6. corollaries (double Hurwitz, parity split, KP restriction, aggregation)",
           {selftest::corollary_double_hurwitz(5, 3),
            selftest::corollary_parity_split(4, 3), selftest::corollary_kp(4),
            selftest::corollary_aggregated(4, 3, 3)});

    // 8: pinned spot values.
    {
        bool ok = true;
        ok &= f_coefficient({Partition({2}), Partition({1, 1}), {1}, {}}) == Rational(1, 2);
        ok &= f_coefficient({Partition({3}), Partition({3}), {}, {2}}) == Rational(5, 3);
        ok &= count_monotone_pairs(Partition({3}), Partition({3}),
                                   BandSpec::from_key({}, {2})) == 10;
        ok &= double_hurwitz(Partition({3}), Partition({3}), 2) == 2;
        ok &= count_monotone_pairs(Partition({3}), Partition({3}),
                                   BandSpec::from_key({1, 1}, {})) == 12;
        ok &= frobenius_hurwitz({Partition({3}), Partition({3}), Partition({2, 1})}, 0) == 0;
        ok &= aggregated_strict(Partition({3}), Partition({3}), 2, 2) == Rational(8, 3);
        report("8. pinned spot values", ok);
    }

    if (failures) std::cout << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
