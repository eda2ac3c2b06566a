#include "jfusion/wl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace jfusion {

namespace {

struct SignatureHash {
    std::size_t operator()(const std::vector<std::uint64_t>& sig) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t x : sig) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Renumber colors by first occurrence so equal partitions have equal arrays.
std::size_t renumber(std::vector<std::uint32_t>& colors) {
    std::unordered_map<std::uint32_t, std::uint32_t> ids;
    for (auto& c : colors) {
        auto [it, inserted] = ids.try_emplace(c, static_cast<std::uint32_t>(ids.size()));
        c = it->second;
    }
    return ids.size();
}

}  // namespace

PairColoring::PairColoring(std::size_t n, std::vector<std::uint32_t> colors)
    : n_(n), colors_(std::move(colors)) {
    if (colors_.size() != n * n) throw std::invalid_argument("pair coloring needs n*n entries");
    color_count_ = renumber(colors_);
}

std::vector<std::size_t> PairColoring::class_sizes() const {
    std::vector<std::size_t> sizes(color_count_, 0);
    for (auto c : colors_) ++sizes[c];
    return sizes;
}

bool PairColoring::separates_diagonal() const {
    std::vector<int> where(color_count_, 0);  // bit 1: diagonal, bit 2: off-diagonal
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v) where[(*this)(u, v)] |= (u == v) ? 1 : 2;
    return std::none_of(where.begin(), where.end(), [](int w) { return w == 3; });
}

bool PairColoring::symmetric() const {
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if ((*this)(u, v) != (*this)(v, u)) return false;
    return true;
}

bool refines(const PairColoring& finer, const PairColoring& coarser) {
    if (finer.vertex_count() != coarser.vertex_count()) throw std::invalid_argument("colorings of different sizes");
    std::vector<std::int64_t> image(finer.color_count(), -1);
    for (std::size_t i = 0; i < finer.colors().size(); ++i) {
        auto& slot = image[finer.colors()[i]];
        const auto target = static_cast<std::int64_t>(coarser.colors()[i]);
        if (slot == -1) slot = target;
        else if (slot != target) return false;
    }
    return true;
}

PairColoring wl_round(const PairColoring& coloring) {
    const std::size_t n = coloring.vertex_count();
    const auto palette = static_cast<std::uint64_t>(coloring.color_count());
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, SignatureHash> ids;
    std::vector<std::uint32_t> next(n * n);
    std::vector<std::uint64_t> sig(n + 1);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            sig[0] = coloring(u, v);
            for (std::size_t w = 0; w < n; ++w) {
                sig[w + 1] = static_cast<std::uint64_t>(coloring(u, w)) * palette + coloring(w, v);
            }
            std::sort(sig.begin() + 1, sig.end());
            auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size()));
            next[u * n + v] = it->second;
        }
    }
    return PairColoring(n, std::move(next));
}

WLResult wl_closure(const PairColoring& coloring) {
    if (coloring.vertex_count() > kWLVertexGuard) {
        throw GuardError("wl_closure is capped at " + std::to_string(kWLVertexGuard) + " vertices");
    }
    if (!coloring.separates_diagonal()) {
        throw std::invalid_argument("wl_closure needs the diagonal colored apart from other pairs");
    }
    WLResult result{coloring, 0};
    while (true) {
        PairColoring next = wl_round(result.coloring);
        if (next.color_count() == result.coloring.color_count()) break;
        result.coloring = std::move(next);
        ++result.rounds;
    }
    if (!is_coherent(result.coloring)) throw std::logic_error("2-WL fixpoint is not coherent");
    return result;
}

bool is_coherent(const PairColoring& coloring) {
    return wl_round(coloring).color_count() == coloring.color_count();
}

PairColoring scheme_coloring(const ExplicitScheme& scheme) {
    const std::size_t n = scheme.vertex_count();
    std::vector<std::uint32_t> colors(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) colors[u * n + v] = static_cast<std::uint32_t>(scheme.color(u, v));
    return PairColoring(n, std::move(colors));
}

PairColoring graph_coloring(const ExplicitScheme& scheme, const std::function<bool(const IndexVector&)>& adjacent) {
    const std::size_t n = scheme.vertex_count();
    const Cube& cube = scheme.cube();
    std::vector<bool> edge(cube.size());
    for (std::size_t id = 0; id < cube.size(); ++id) edge[id] = adjacent(cube.vector(id));
    std::vector<std::uint32_t> colors(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            colors[u * n + v] = u == v ? 0u : (edge[scheme.raw_color(u, v)] ? 1u : 2u);
        }
    return PairColoring(n, std::move(colors));
}

PairColoring cameron_graph_coloring(const ExplicitScheme& scheme) {
    return graph_coloring(scheme, [](const IndexVector& a) { return weight(a) == 1; });
}

PairColoring hamming_graph_coloring(const ExplicitScheme& scheme) {
    return graph_coloring(scheme, [](const IndexVector& a) { return support(a).size() == 1; });
}

}  // namespace jfusion
