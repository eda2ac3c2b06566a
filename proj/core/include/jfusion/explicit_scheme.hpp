#pragma once

// Concrete schemes on d-tuples of k-subsets of {1..m}: the brute-force ground
// truth that the symbolic side is checked against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jfusion/errors.hpp"
#include "jfusion/fusion.hpp"

namespace jfusion {

/// Largest vertex count build_explicit accepts.
inline constexpr std::size_t kExplicitVertexGuard = 5000;
/// Largest vertex count for which the n x n color table is materialised.
inline constexpr std::size_t kDenseColorLimit = 1500;

class ExplicitScheme {
public:
    /// Raw J(m,k)^d, or its fusion by `fusion` when given.
    ExplicitScheme(int k, int d, long m, std::optional<FusionPartition> fusion = std::nullopt);

    int k() const noexcept { return k_; }
    int d() const noexcept { return d_; }
    long m() const noexcept { return m_; }
    std::size_t vertex_count() const noexcept { return vertices_.size() / static_cast<std::size_t>(d_); }
    const Cube& cube() const noexcept { return *cube_; }
    bool fused() const noexcept { return fusion_.has_value(); }
    const std::optional<FusionPartition>& fusion() const noexcept { return fusion_; }

    /// k-subsets of {0..m-1} as bitmasks, one per coordinate.
    std::span<const std::uint32_t> vertex(std::size_t v) const {
        return {vertices_.data() + v * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
    }

    /// Cube id of (|u_1 \ v_1|, ..., |u_d \ v_d|).
    std::size_t raw_color(std::size_t u, std::size_t v) const;
    /// Cell id when fused, otherwise the raw color.
    std::size_t color(std::size_t u, std::size_t v) const;
    std::size_t color_count() const noexcept;

private:
    std::size_t compute_raw(std::size_t u, std::size_t v) const;

    int k_;
    int d_;
    long m_;
    std::shared_ptr<const Cube> cube_;
    std::optional<FusionPartition> fusion_;
    std::vector<std::uint32_t> vertices_;
    std::vector<std::uint16_t> dense_;  // raw colors, empty above kDenseColorLimit
};

ExplicitScheme build_explicit(int k, int d, long m, std::optional<FusionPartition> fusion = std::nullopt);

/// #{w : color(u,w) = b, color(w,v) = c} for pairs (u,v) of color a. Three
/// representative pairs are counted and must agree.
std::uint64_t count_structure_constant(const ExplicitScheme& scheme, const IndexVector& a,
                                       const IndexVector& b, const IndexVector& c);

/// True iff the graph of pairs colored `cell` is connected. Needs a fused scheme.
bool explicit_connectivity(const ExplicitScheme& scheme, std::size_t cell);
/// Number of connected components of that graph.
std::size_t explicit_components(const ExplicitScheme& scheme, std::size_t cell);

struct CrossValidationReport {
    int k = 0;
    int d = 0;
    long m = 0;
    std::size_t triples_checked = 0;
    std::size_t fusions_checked = 0;
    std::vector<std::string> mismatches;

    bool passed() const noexcept { return mismatches.empty(); }
};

/// Symbolic constants evaluated at m against brute-force counts for every
/// triple, plus index-level primitivity against BFS for each supplied fusion.
CrossValidationReport cross_validate(int k, int d, long m, const std::vector<FusionPartition>& fusions = {});

}  // namespace jfusion
