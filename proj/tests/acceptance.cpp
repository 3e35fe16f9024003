// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// All arithmetic is exact; every comparison is equality, never a tolerance.

#include <chrono>
#include <iostream>
#include <string>

#include "voa/commutator.hpp"
#include "voa/extension.hpp"
#include "voa/suites.hpp"
#include "voa/vertex.hpp"
#include "voa/zhu.hpp"

using namespace voa;

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool pass, const std::string& note = "") {
    std::cout << "criterion " << criterion << " [" << (pass ? "PASS" : "FAIL") << "] " << what;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string suite_note(const VerificationReport& rep) {
    return std::to_string(rep.cases.size()) + " cases, " + std::to_string(rep.fail_count()) +
           " failures";
}

} // namespace

int main() {
    SuiteConfig cfg; // defaults: lambdas {1,3/2,1/2}, range 4, weight 8, cutoff 14, seed fixed

    // 1. closed forms of the quadratic generators, built in under a second
    auto t0 = std::chrono::steady_clock::now();
    QVector h4 = state(mono({3, 1}), rat(1, 3)) + state(mono({2, 2}), rat(-1, 3));
    QVector h6 = state(mono({5, 1}), rat(1, 5)) + state(mono({4, 2}), rat(-13, 10)) +
                 state(mono({3, 3}), rat(11, 10));
    bool c1 = build_H(2).vector == h4 && build_H(3).vector == h6;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    c1 = c1 && ms < 1000;
    line(1, "closed forms of H^4 and H^6", c1, std::to_string(ms) + " ms");

    // 2. [H~^{2r}(0), h(n)] = -n^{2r-1} h(n) for r <= 4 on full bases up to weight 8
    VerificationReport hcomm = run_suite("hcomm", cfg);
    line(2, "defining commutation for r <= 4, |n| <= 4, weight <= 8", hcomm.all_pass(),
         suite_note(hcomm));

    // 3. the fifteen grade-preserving eigenvalues, with the twisted ground
    //    constants emerging from the quadratic correction rather than a table
    VerificationReport table1 = run_suite("table1", cfg);
    bool c3 = table1.all_pass() && q_constant(2) == rat(-1, 128) && q_constant(3) == rat(1, 256);
    line(3, "eigenvalue table on the five top-level states", c3, suite_note(table1));

    // 4. commutator formula families at |m|,|n| <= 4 on weight-6 bases in three
    //    sectors, central terms re-derived by degree-8 interpolation, and both
    //    readings of the contested relation compared
    VerificationReport appendix = run_suite("appendix", cfg);
    line(4, "closed commutator formulas with interpolated central terms", appendix.all_pass(),
         suite_note(appendix));

    // 5. the quartic singular vector J (with the corrected -2 coefficient on
    //    h(-3)h(-1)1) equals -9 H^4 + 4 L(-2)^2 1 - 3 L(-4) 1 and is theta-fixed
    QVector J = quartic_singular_vector();
    QVector rhs = build_H(2).vector * rat(-9);
    rhs.axpy(rat(4),
             virasoro_apply(-2, virasoro_apply(-2, vacuum(), unit_profile()), unit_profile()));
    rhs.axpy(rat(-3), virasoro_apply(-4, vacuum(), unit_profile()));
    bool c5 = J == rhs && is_theta_fixed(J) && J.grade_doubled() == 8;
    line(5, "quartic singular vector identity and theta symmetry", c5);

    // 6. top-level algebra relations and projection idempotents, each with an
    //    exactly replayed span-membership certificate
    VerificationReport zhu = run_suite("zhu", cfg);
    VerificationReport idem = run_suite("idempotents", cfg);
    line(6, "relations and idempotents certified by circ-span membership",
         zhu.all_pass() && idem.all_pass(),
         suite_note(zhu) + "; idempotents: " + suite_note(idem));

    // 7. lattice checks: E*E = 4 omega at k = 1 and lowest weights r^2/4k
    VerificationReport lattice = run_suite("lattice", cfg);
    line(7, "lattice product and fractional-momentum lowest weights", lattice.all_pass(),
         suite_note(lattice));

    // 8. parametrized self-extensions: Jordan blocks over (t-c)^2,
    //    diagonalizability over t^2-1, and the sector-mixing identities
    VerificationReport ext = run_suite("ext", cfg);
    line(8, "Jordan block witnesses and sector-mixing identities", ext.all_pass(),
         suite_note(ext));

    // 9. seeded identity samples in both sectors, mutual commutation of the
    //    zero modes, and the eigenvalue-lattice gap search
    VerificationReport borcherds = run_suite("borcherds", cfg);
    VerificationReport gap = run_suite("gap", cfg);
    line(9, "property suites: identity samples, mutual commutation, spectral gap",
         borcherds.all_pass() && gap.all_pass(),
         suite_note(borcherds) + "; gap: " + suite_note(gap));

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
