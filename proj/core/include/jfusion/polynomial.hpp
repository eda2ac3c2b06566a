#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jfusion {

struct LeadingTerm {
    mpq_class coefficient;
    int exponent = 0;

    friend bool operator==(const LeadingTerm& x, const LeadingTerm& y) {
        return x.exponent == y.exponent && x.coefficient == y.coefficient;
    }
};

/// Dense univariate polynomial in m with exact rational coefficients.
///
/// Canonical form: no trailing zero coefficient, so the zero polynomial has
/// no coefficients at all and equality is coefficientwise.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coefficients);
    RationalPolynomial(const mpq_class& constant);  // NOLINT: constants convert implicitly
    RationalPolynomial(long constant) : RationalPolynomial(mpq_class(constant)) {}  // NOLINT

    /// The polynomial m.
    static RationalPolynomial variable();

    /// C(m + shift, t) = prod_{j<t} (m + shift - j) / t! as a polynomial of degree t.
    static RationalPolynomial binomial_in_m(long shift, int t);

    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const noexcept;

    /// Throws std::domain_error on the zero polynomial.
    LeadingTerm leading_term() const;

    mpq_class evaluate(const mpq_class& m) const;

    /// Nonzero with positive leading coefficient, i.e. positive for all large m.
    bool eventually_positive() const noexcept;

    RationalPolynomial& operator+=(const RationalPolynomial& q);
    RationalPolynomial& operator-=(const RationalPolynomial& q);
    RationalPolynomial& operator*=(const RationalPolynomial& q);
    RationalPolynomial& operator*=(const mpq_class& s);

    friend RationalPolynomial operator+(RationalPolynomial p, const RationalPolynomial& q) { return p += q; }
    friend RationalPolynomial operator-(RationalPolynomial p, const RationalPolynomial& q) { return p -= q; }
    friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
    friend RationalPolynomial operator*(RationalPolynomial p, const mpq_class& s) { return p *= s; }
    friend RationalPolynomial operator*(const mpq_class& s, RationalPolynomial p) { return p *= s; }
    friend RationalPolynomial operator-(RationalPolynomial p);

    friend bool operator==(const RationalPolynomial& p, const RationalPolynomial& q) {
        return p.coeffs_ == q.coeffs_;
    }

    /// Human-readable form, highest power first, e.g. "1/2*m^2 - 1/2*m".
    std::string to_string() const;

    /// Coefficient strings "num/den" from the constant term upward.
    std::vector<std::string> serialize() const;
    static RationalPolynomial deserialize(const std::vector<std::string>& coefficients);

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

inline RationalPolynomial scale(RationalPolynomial p, const mpq_class& s) { return p *= s; }

}  // namespace jfusion
