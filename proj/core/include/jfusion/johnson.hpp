#pragma once

// Structure constants of J(m,k) and of its tensor powers, as polynomials in m.
//
// The scalar constant p^a_{b,c}(m) counts, for a fixed pair (u,v) with
// |u \ v| = a, the k-sets w with |u \ w| = b and |w \ v| = c. It is a sum of
// products of binomials over an index i whose admissible range has an upper
// bound m - a - b - c in addition to k - a, k - b, k - c. For m >= 3k that
// extra bound never binds, so we drop it and the result is a single
// polynomial valid for all m >= 3k. Evaluating below 3k is meaningless.

#include "jfusion/index_vector.hpp"
#include "jfusion/polynomial.hpp"

namespace jfusion {

RationalPolynomial scalar_structure_constant(int k, int a, int b, int c);

/// |b - c| <= a <= b + c.
bool triangle_positive(int a, int b, int c) noexcept;
/// Componentwise triangle condition.
bool triangle_positive(const IndexVector& a, const IndexVector& b, const IndexVector& c);

/// Closed-form leading term of p^a_{b,c}(m). Requires the triangle condition;
/// b < c is handled by symmetry.
LeadingTerm scalar_leading_term(int k, int a, int b, int c);

RationalPolynomial vector_structure_constant(int k, const IndexVector& a, const IndexVector& b,
                                             const IndexVector& c);

/// C((k)^d - a, (k)^d - b) / b! * m^{wt(b)}, the leading term of p^a_{b,b}(m)
/// for a <= b.
LeadingTerm vector_leading_term_bc_equal(int k, const IndexVector& a, const IndexVector& b);

/// Memoised scalar constants for one k, indexed [a][b][c].
class ScalarTable {
public:
    explicit ScalarTable(int k);

    int k() const noexcept { return k_; }
    const RationalPolynomial& operator()(int a, int b, int c) const {
        return table_[index(a, b, c)];
    }

private:
    std::size_t index(int a, int b, int c) const noexcept {
        const auto n = static_cast<std::size_t>(k_ + 1);
        return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
               static_cast<std::size_t>(c);
    }

    int k_;
    std::vector<RationalPolynomial> table_;
};

}  // namespace jfusion
