#pragma once

#include <string>
#include <vector>

namespace setsys {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // the compared values, or the first failure found
};

// Trace/section consistency: pair -> system -> pair is idempotent and every
// normalized system of weight <= max_n is hit.
std::vector<CheckResult> verify_roundtrip(int max_n);

// Equivalence classes partition the pair space; class sizes respect the
// factorial bound with equality exactly on simple traces. max_n <= 9.
std::vector<CheckResult> verify_classes(int max_n);

// The non-simple -> simple injection: well-defined, weight-preserving,
// injective, inverted exactly by recovery, and recovery rejects everything
// off the image. Implies count(all) <= 2 * count(simple).
std::vector<CheckResult> verify_injection(int max_n);

// Edge-shift bijection: expand/reduce are mutually inverse and the m-sparse
// partition count equals bell(n - m + 1).
std::vector<CheckResult> verify_sparse(int max_n);

// Exact two-sided bounds for degree-bounded counts, k = 1..4 and unbounded.
std::vector<CheckResult> verify_sandwich_suite(int max_n);

// Exhaustive generation vs. the inclusion-exclusion counter vs. the frozen
// reference values; basic inequalities between the families.
std::vector<CheckResult> verify_tables(int max_n);

// Window-distinct word counts: closed formula vs. direct generation; ordered
// set partitions vs. n! * interval coefficient.
std::vector<CheckResult> verify_words(int max_r, int max_k, int max_n);

// 0-1 matrix census vs. the two system counts it specializes to, plus flag
// monotonicity.
std::vector<CheckResult> verify_matrices(int max_n);

// Root solvers, smooth estimates and their convergence trends.
std::vector<CheckResult> verify_asymptotics();

// Everything above at defaults sized for interactive runs.
std::vector<CheckResult> verify_all();

}  // namespace setsys
