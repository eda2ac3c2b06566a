#include "jfusion/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "jfusion/index_vector.hpp"

namespace jfusion {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPolynomial::RationalPolynomial(const mpq_class& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
        coeffs_.back().canonicalize();
    }
}

RationalPolynomial RationalPolynomial::variable() {
    return RationalPolynomial(std::vector<mpq_class>{0, 1});
}

RationalPolynomial RationalPolynomial::binomial_in_m(long shift, int t) {
    if (t < 0) throw std::invalid_argument("binomial_in_m needs t >= 0");
    RationalPolynomial out(1L);
    for (int j = 0; j < t; ++j) {
        out *= RationalPolynomial(std::vector<mpq_class>{mpq_class(shift - j), 1});
    }
    out *= mpq_class(mpz_class(1), factorial(t));
    return out;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> RationalPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

LeadingTerm RationalPolynomial::leading_term() const {
    if (coeffs_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return {coeffs_.back(), static_cast<int>(coeffs_.size()) - 1};
}

mpq_class RationalPolynomial::evaluate(const mpq_class& m) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= m;
        acc += *it;
    }
    return acc;
}

bool RationalPolynomial::eventually_positive() const noexcept {
    return !coeffs_.empty() && sgn(coeffs_.back()) > 0;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<mpq_class> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& q) {
    *this = *this * q;
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPolynomial operator-(RationalPolynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'm';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> RationalPolynomial::serialize() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    }
    return out;
}

RationalPolynomial RationalPolynomial::deserialize(const std::vector<std::string>& coefficients) {
    std::vector<mpq_class> out;
    out.reserve(coefficients.size());
    for (const auto& s : coefficients) {
        mpq_class c;
        if (c.set_str(s, 10) != 0 || c.get_den() == 0) {
            throw std::invalid_argument("bad rational coefficient: '" + s + "'");
        }
        c.canonicalize();
        out.push_back(std::move(c));
    }
    return RationalPolynomial(std::move(out));
}

}  // namespace jfusion
