#pragma once

// Vectors over the index cube [0,k]^d and the componentwise operations on them.
//
// A relation of J(m,k)^d is named by the vector (|u_1 \ v_1|, ..., |u_d \ v_d|),
// so every object in this library is ultimately indexed by such vectors.
// Coordinates are 0-based in the API; text and JSON output is 1-based where
// coordinate *positions* (not entries) are printed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jfusion {

/// Scheme parameters: subset size k, tensor power d, and an optional concrete
/// point count m. Without m the parameters are "generic" (m symbolic).
class Parameters {
public:
    Parameters(int k, int d, std::optional<long> m = std::nullopt);

    int k() const noexcept { return k_; }
    int d() const noexcept { return d_; }
    const std::optional<long>& m() const noexcept { return m_; }
    bool generic() const noexcept { return !m_.has_value(); }

private:
    int k_;
    int d_;
    std::optional<long> m_;
};

class IndexVector {
public:
    IndexVector() = default;
    explicit IndexVector(std::vector<int> entries);
    IndexVector(std::initializer_list<int> entries);

    /// (x)^d
    static IndexVector constant(int d, int x);
    /// e_i, with i 1-based to match the usual notation.
    static IndexVector unit(int d, int i);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }

    /// Checks every entry lies in [0,k].
    bool in_cube(int k) const noexcept;

    std::string to_string() const;

    friend bool operator==(const IndexVector&, const IndexVector&) = default;
    friend auto operator<=>(const IndexVector&, const IndexVector&) = default;

private:
    std::vector<int> entries_;
};

int weight(const IndexVector& a) noexcept;

/// 0-based indices with positive entry.
std::vector<int> support(const IndexVector& a);

/// True iff a_i <= b_i for all i.
bool dominates(const IndexVector& b, const IndexVector& a);

IndexVector abs_diff(const IndexVector& a, const IndexVector& b);
IndexVector pointwise_min(const IndexVector& a, const IndexVector& b);
IndexVector pointwise_max(const IndexVector& a, const IndexVector& b);
IndexVector sum(const IndexVector& a, const IndexVector& b);
IndexVector difference(const IndexVector& a, const IndexVector& b);

mpz_class vector_factorial(const IndexVector& a);

/// prod_i C(a_i, b_i); zero unless (0)^d <= b <= a.
mpz_class vector_binomial(const IndexVector& a, const IndexVector& b);

/// All b with b <= a, in lexicographic order.
std::vector<IndexVector> down_set(const IndexVector& a);

/// Ordinary binomial coefficient, zero outside 0 <= r <= n.
mpz_class binomial(long n, long r);
mpz_class factorial(long n);

/// The cube [0,k]^d with a dense mixed-radix numbering. Id order coincides
/// with lexicographic order on vectors (first coordinate most significant).
class Cube {
public:
    Cube(int k, int d);

    int k() const noexcept { return k_; }
    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return vectors_.size(); }

    const IndexVector& vector(std::size_t id) const { return vectors_.at(id); }
    std::size_t id(const IndexVector& a) const;
    int weight(std::size_t id) const { return weights_[id]; }

    std::size_t zero_id() const noexcept { return 0; }
    std::size_t top_id() const noexcept { return vectors_.size() - 1; }

    /// Ids sorted by (weight, lex).
    const std::vector<std::size_t>& weight_order() const noexcept { return weight_order_; }

    friend bool operator==(const Cube& x, const Cube& y) noexcept {
        return x.k_ == y.k_ && x.d_ == y.d_;
    }

private:
    int k_;
    int d_;
    std::vector<IndexVector> vectors_;
    std::vector<int> weights_;
    std::vector<std::size_t> weight_order_;
};

}  // namespace jfusion
