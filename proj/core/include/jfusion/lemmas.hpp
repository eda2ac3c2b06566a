#pragma once

// Exhaustive and sampled property checks behind `jfusion verify-lemmas`:
// positivity and leading terms of the Johnson constants, the vector degree
// bound, and the structural facts every valid fusion cell satisfies.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace jfusion {

struct CheckResult {
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> failures;  // capped, first few only
};

struct LemmaSuiteReport {
    unsigned seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Scalar constants, k = 1..max_k: positivity iff triangle inequality.
CheckResult check_scalar_positivity(int max_k);
/// Scalar constants, k = 1..max_k: closed-form leading term equals the
/// leading term of the computed polynomial.
CheckResult check_scalar_leading_terms(int max_k);
/// p^a_{b,c} == p^a_{c,b} as polynomials.
CheckResult check_symmetry(int max_k);
/// deg p^a_{b,c} <= wt(min(b,c)) with equality iff a <= max(b,c), and the
/// closed form for the leading term when deg = wt(b) = wt(c).
CheckResult check_vector_degree_bound(int max_k, int max_d);
/// Ring axioms and binomial_in_m against integer binomials, random samples.
CheckResult check_polynomial_ring(unsigned seed, int samples);
/// Every cell of every generic fusion at (k,d): the four structural facts,
/// N^beta_beta = 1, N^beta_alpha > 0 iff alpha precedes beta, the minimal
/// cell corollary, and generic validity implying validity at sampled m.
CheckResult check_fusion_structure(int k, int d, unsigned seed, unsigned workers);

LemmaSuiteReport run_lemma_suite(unsigned seed, unsigned workers = 1);

}  // namespace jfusion
