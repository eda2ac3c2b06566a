#include "jfusion/index_vector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jfusion {

namespace {

void require_same_length(const IndexVector& a, const IndexVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("index vectors of different length: " + a.to_string() +
                                    " vs " + b.to_string());
    }
}

template <typename Op>
IndexVector zip(const IndexVector& a, const IndexVector& b, Op op) {
    require_same_length(a, b);
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return IndexVector(std::move(out));
}

}  // namespace

Parameters::Parameters(int k, int d, std::optional<long> m) : k_(k), d_(d), m_(m) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (m && *m < 3L * k) {
        throw std::invalid_argument("m must be at least 3k (got m=" + std::to_string(*m) +
                                    ", k=" + std::to_string(k) + ")");
    }
}

IndexVector::IndexVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int x : entries_) {
        if (x < 0) throw std::invalid_argument("index vector entries must be nonnegative");
    }
}

IndexVector::IndexVector(std::initializer_list<int> entries)
    : IndexVector(std::vector<int>(entries)) {}

IndexVector IndexVector::constant(int d, int x) {
    return IndexVector(std::vector<int>(static_cast<std::size_t>(d), x));
}

IndexVector IndexVector::unit(int d, int i) {
    if (i < 1 || i > d) throw std::out_of_range("unit vector index out of range");
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return IndexVector(std::move(v));
}

bool IndexVector::in_cube(int k) const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [k](int x) { return x >= 0 && x <= k; });
}

std::string IndexVector::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ']';
    return os.str();
}

int weight(const IndexVector& a) noexcept {
    auto e = a.entries();
    return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<int> support(const IndexVector& a) {
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool dominates(const IndexVector& b, const IndexVector& a) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

IndexVector abs_diff(const IndexVector& a, const IndexVector& b) {
    return zip(a, b, [](int x, int y) { return x > y ? x - y : y - x; });
}

IndexVector pointwise_min(const IndexVector& a, const IndexVector& b) {
    return zip(a, b, [](int x, int y) { return std::min(x, y); });
}

IndexVector pointwise_max(const IndexVector& a, const IndexVector& b) {
    return zip(a, b, [](int x, int y) { return std::max(x, y); });
}

IndexVector sum(const IndexVector& a, const IndexVector& b) {
    return zip(a, b, [](int x, int y) { return x + y; });
}

IndexVector difference(const IndexVector& a, const IndexVector& b) {
    require_same_length(a, b);
    if (!dominates(a, b)) throw std::invalid_argument("difference would be negative");
    return zip(a, b, [](int x, int y) { return x - y; });
}

mpz_class factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

mpz_class vector_factorial(const IndexVector& a) {
    mpz_class out = 1;
    for (int x : a.entries()) out *= factorial(x);
    return out;
}

mpz_class vector_binomial(const IndexVector& a, const IndexVector& b) {
    require_same_length(a, b);
    mpz_class out = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out *= binomial(a[i], b[i]);
        if (out == 0) break;
    }
    return out;
}

std::vector<IndexVector> down_set(const IndexVector& a) {
    std::vector<IndexVector> out;
    std::vector<int> cur(a.size(), 0);
    while (true) {
        out.emplace_back(cur);
        // odometer, last coordinate fastest so output stays lexicographic
        std::size_t i = a.size();
        while (i > 0) {
            --i;
            if (cur[i] < a[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (a.size() == 0) return out;
    }
}

Cube::Cube(int k, int d) : k_(k), d_(d) {
    if (k < 1 || d < 1) throw std::invalid_argument("cube needs k >= 1 and d >= 1");
    vectors_ = down_set(IndexVector::constant(d, k));
    weights_.reserve(vectors_.size());
    for (const auto& v : vectors_) weights_.push_back(jfusion::weight(v));
    weight_order_.resize(vectors_.size());
    std::iota(weight_order_.begin(), weight_order_.end(), std::size_t{0});
    std::stable_sort(weight_order_.begin(), weight_order_.end(),
                     [this](std::size_t x, std::size_t y) { return weights_[x] < weights_[y]; });
}

std::size_t Cube::id(const IndexVector& a) const {
    if (a.size() != static_cast<std::size_t>(d_) || !a.in_cube(k_)) {
        throw std::invalid_argument("vector " + a.to_string() + " is not in [0," +
                                    std::to_string(k_) + "]^" + std::to_string(d_));
    }
    std::size_t id = 0;
    for (int x : a.entries()) id = id * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(x);
    return id;
}

}  // namespace jfusion
