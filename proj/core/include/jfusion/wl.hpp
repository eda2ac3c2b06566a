#pragma once

// Two-dimensional Weisfeiler-Leman refinement of pair colorings.

#include <cstdint>
#include <functional>
#include <vector>

#include "jfusion/explicit_scheme.hpp"

namespace jfusion {

/// Practical vertex cap for wl_closure (one round is O(n^3 log n)).
inline constexpr std::size_t kWLVertexGuard = 700;

/// A coloring of the ordered pairs of an n-vertex set with dense color ids
/// 0..color_count()-1, numbered by first occurrence in row-major order.
class PairColoring {
public:
    PairColoring(std::size_t n, std::vector<std::uint32_t> colors);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t color_count() const noexcept { return color_count_; }
    std::uint32_t operator()(std::size_t u, std::size_t v) const { return colors_[u * n_ + v]; }
    const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

    /// Sizes of the color classes, by color id.
    std::vector<std::size_t> class_sizes() const;

    /// No color occurs both on and off the diagonal.
    bool separates_diagonal() const;
    /// color(u,v) == color(v,u) for all pairs.
    bool symmetric() const;

    /// Same partition of pairs (ids are canonical, so this is equality).
    friend bool operator==(const PairColoring& x, const PairColoring& y) {
        return x.n_ == y.n_ && x.colors_ == y.colors_;
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> colors_;
    std::size_t color_count_ = 0;
};

/// Every class of `finer` lies inside one class of `coarser`.
bool refines(const PairColoring& finer, const PairColoring& coarser);

/// One refinement round: the new color of (u,v) is its old color together
/// with the multiset {(color(u,w), color(w,v)) : w}.
PairColoring wl_round(const PairColoring& coloring);

struct WLResult {
    PairColoring coloring;
    int rounds = 0;  // rounds that split at least one class
};

/// Iterates wl_round until the partition stops changing. The result is a
/// coherent configuration; this is asserted before returning.
WLResult wl_closure(const PairColoring& coloring);

/// True iff every intersection count is independent of the representative
/// pair, i.e. one more round splits nothing.
bool is_coherent(const PairColoring& coloring);

/// Colors pairs by the scheme's own relation (raw or fused).
PairColoring scheme_coloring(const ExplicitScheme& scheme);

/// {diagonal, edges, non-edges} where (u,v) is an edge iff the raw color
/// satisfies `adjacent`.
PairColoring graph_coloring(const ExplicitScheme& scheme, const std::function<bool(const IndexVector&)>& adjacent);

/// Cameron graph: tuples differing by one element swap in one coordinate.
PairColoring cameron_graph_coloring(const ExplicitScheme& scheme);
/// Hamming graph H(d, M): tuples differing in exactly one coordinate.
PairColoring hamming_graph_coloring(const ExplicitScheme& scheme);

}  // namespace jfusion
