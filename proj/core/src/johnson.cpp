#include "jfusion/johnson.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jfusion {

namespace {

void require_range(int k, int x, const char* name) {
    if (x < 0 || x > k) {
        throw std::out_of_range(std::string(name) + "=" + std::to_string(x) + " outside [0," +
                                std::to_string(k) + "]");
    }
}

void require_vectors(int k, const IndexVector& a, const IndexVector& b, const IndexVector& c) {
    if (a.size() != b.size() || a.size() != c.size()) {
        throw std::invalid_argument("index vectors of different length");
    }
    if (!a.in_cube(k) || !b.in_cube(k) || !c.in_cube(k)) {
        throw std::out_of_range("index vector entry outside [0,k]");
    }
}

}  // namespace

RationalPolynomial scalar_structure_constant(int k, int a, int b, int c) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    require_range(k, a, "a");
    require_range(k, b, "b");
    require_range(k, c, "c");

    const int lo = std::max({0, k - a - b, k - b - c, k - a - c});
    const int hi = std::min({k - a, k - b, k - c});
    RationalPolynomial out;
    for (int i = lo; i <= hi; ++i) {
        mpz_class coeff = binomial(k - a, i) * binomial(a, k - b - i) * binomial(a, k - c - i);
        if (coeff == 0) continue;
        out += RationalPolynomial::binomial_in_m(-k - a, b + c + i - k) * mpq_class(coeff);
    }
    return out;
}

bool triangle_positive(int a, int b, int c) noexcept {
    const int diff = b > c ? b - c : c - b;
    return diff <= a && a <= b + c;
}

bool triangle_positive(const IndexVector& a, const IndexVector& b, const IndexVector& c) {
    if (a.size() != b.size() || a.size() != c.size()) {
        throw std::invalid_argument("index vectors of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!triangle_positive(a[i], b[i], c[i])) return false;
    }
    return true;
}

LeadingTerm scalar_leading_term(int k, int a, int b, int c) {
    require_range(k, a, "a");
    require_range(k, b, "b");
    require_range(k, c, "c");
    if (!triangle_positive(a, b, c)) {
        throw std::domain_error("triangle inequality violated for (a,b,c)=(" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
    if (b < c) std::swap(b, c);

    auto high_branch = [&] {
        mpq_class coeff(binomial(a, b) * binomial(a, c), factorial(b + c - a));
        coeff.canonicalize();
        return LeadingTerm{coeff, b + c - a};
    };
    auto low_branch = [&] {
        mpq_class coeff(binomial(k - a, k - b) * binomial(a, b - c), factorial(c));
        coeff.canonicalize();
        return LeadingTerm{coeff, c};
    };

    if (a > b) return high_branch();
    if (a < b) return low_branch();
    LeadingTerm x = high_branch();
    if (!(x == low_branch())) {
        throw std::logic_error("leading-term branches disagree at a = b");
    }
    return x;
}

RationalPolynomial vector_structure_constant(int k, const IndexVector& a, const IndexVector& b,
                                             const IndexVector& c) {
    require_vectors(k, a, b, c);
    RationalPolynomial out(1L);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out *= scalar_structure_constant(k, a[i], b[i], c[i]);
        if (out.is_zero()) break;
    }
    return out;
}

LeadingTerm vector_leading_term_bc_equal(int k, const IndexVector& a, const IndexVector& b) {
    require_vectors(k, a, b, b);
    if (!dominates(b, a)) {
        throw std::domain_error("closed-form leading term needs a <= b, got a=" + a.to_string() +
                                " b=" + b.to_string());
    }
    const auto top = IndexVector::constant(static_cast<int>(a.size()), k);
    mpq_class coeff(vector_binomial(difference(top, a), difference(top, b)), vector_factorial(b));
    coeff.canonicalize();
    return {coeff, weight(b)};
}

ScalarTable::ScalarTable(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const auto n = static_cast<std::size_t>(k + 1);
    table_.resize(n * n * n);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int c = 0; c <= k; ++c) table_[index(a, b, c)] = scalar_structure_constant(k, a, b, c);
}

}  // namespace jfusion
