#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include "voa/rational.hpp"
#include "voa/report.hpp"

namespace voa {

// Defaults for the verification suites; overridable from a flat key=value
// config file and from command-line flags.
struct SuiteConfig {
    std::vector<Rational> lambdas = {rat(1), rat(3, 2), rat(1, 2)}; // momentum samples
    std::vector<int> ks = {1, 2, 3};                                // lattice norms 2k
    int hcommR = 4;          // defining commutation up to H^{2r}
    int range = 4;           // mode index range |m|,|n| <= range
    Rational maxWeight = 8;  // state bases up to this weight
    int zhuCutoff = 14;      // membership certification bound
    int borcherdsSamples = 200;
    std::uint64_t seed = 20240501;
    long gapBound = 200;
    std::string cacheDir = "hvec-cache";
};

// Parse key=value lines (lambdas, ks, hcomm_r, range, max_weight, zhu_cutoff,
// borcherds_samples, seed, gap_bound, cache_dir); '#' starts a comment.
SuiteConfig load_config(const std::string& path, SuiteConfig base = {});

// Seeded random instances of the quintuple-sum identity behind the mode
// algebra, split evenly between the untwisted and twisted sectors.
VerificationReport verify_borcherds(int samples, std::uint64_t seed);

// [H~^{2r}(0), H~^{2s}(0)] = 0 for r < s <= maxR on full bases (momentum-0,
// momentum-lambda and twisted) up to maxWeight.
VerificationReport verify_mutual_commutation(int maxR, const Rational& maxWeight,
                                             const std::vector<Rational>& lambdas);

// Dispatch by suite name: hcomm, table1, appendix, borcherds, zhu,
// idempotents, lattice, ext, gap.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);
const std::vector<std::string>& all_suites();

// Build H^{2r} for r = 1..maxR and sync the text cache: on a miss the entry is
// written; on a hit the vector is rebuilt and compared byte-for-byte (a
// mismatch is a failing case). Returns a report with one case per r.
VerificationReport hvec_build(int maxR, const std::string& cacheDir);

} // namespace voa
