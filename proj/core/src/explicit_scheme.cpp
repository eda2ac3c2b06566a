#include "jfusion/explicit_scheme.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "jfusion/johnson.hpp"

namespace jfusion {

namespace {

std::vector<std::uint32_t> k_subsets(int m, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (std::popcount(mask) == k) out.push_back(mask);
    }
    return out;
}

}  // namespace

ExplicitScheme::ExplicitScheme(int k, int d, long m, std::optional<FusionPartition> fusion)
    : k_(k), d_(d), m_(m), cube_(std::make_shared<const Cube>(k, d)), fusion_(std::move(fusion)) {
    Parameters(k, d, m);
    if (m > 30) throw GuardError("explicit schemes need m <= 30");
    if (fusion_ && (fusion_->k() != k || fusion_->d() != d)) {
        throw std::invalid_argument("fusion partition is for a different (k,d)");
    }
    const auto subsets = k_subsets(static_cast<int>(m), k);
    double count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<double>(subsets.size());
    if (count > static_cast<double>(kExplicitVertexGuard)) {
        throw GuardError("C(m,k)^d = " + std::to_string(static_cast<long long>(count)) +
                         " vertices exceeds the guard of " + std::to_string(kExplicitVertexGuard));
    }
    const auto n = static_cast<std::size_t>(count);
    vertices_.resize(n * static_cast<std::size_t>(d));
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t rest = v;
        for (int i = d - 1; i >= 0; --i) {
            vertices_[v * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = subsets[rest % subsets.size()];
            rest /= subsets.size();
        }
    }
    if (n <= kDenseColorLimit) {
        dense_.resize(n * n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) dense_[u * n + v] = static_cast<std::uint16_t>(compute_raw(u, v));
    }
}

std::size_t ExplicitScheme::compute_raw(std::size_t u, std::size_t v) const {
    auto uv = vertex(u);
    auto vv = vertex(v);
    std::size_t id = 0;
    for (std::size_t i = 0; i < uv.size(); ++i) {
        id = id * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(std::popcount(uv[i] & ~vv[i]));
    }
    return id;
}

std::size_t ExplicitScheme::raw_color(std::size_t u, std::size_t v) const {
    if (!dense_.empty()) return dense_[u * vertex_count() + v];
    return compute_raw(u, v);
}

std::size_t ExplicitScheme::color(std::size_t u, std::size_t v) const {
    const std::size_t raw = raw_color(u, v);
    return fusion_ ? fusion_->cell_of(raw) : raw;
}

std::size_t ExplicitScheme::color_count() const noexcept {
    return fusion_ ? fusion_->cell_count() : cube_->size();
}

ExplicitScheme build_explicit(int k, int d, long m, std::optional<FusionPartition> fusion) {
    return ExplicitScheme(k, d, m, std::move(fusion));
}

std::uint64_t count_structure_constant(const ExplicitScheme& scheme, const IndexVector& a,
                                       const IndexVector& b, const IndexVector& c) {
    if (scheme.fused()) throw std::invalid_argument("count_structure_constant needs an unfused scheme");
    const Cube& cube = scheme.cube();
    const std::size_t ai = cube.id(a);
    const std::size_t bi = cube.id(b);
    const std::size_t ci = cube.id(c);
    const std::size_t n = scheme.vertex_count();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (scheme.raw_color(u, v) == ai) pairs.emplace_back(u, v);
    if (pairs.empty()) throw std::domain_error("color class " + a.to_string() + " is empty");

    const std::size_t picks[] = {0, pairs.size() / 2, pairs.size() - 1};
    std::optional<std::uint64_t> result;
    for (std::size_t p : picks) {
        const auto [u, v] = pairs[p];
        std::uint64_t count = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (scheme.raw_color(u, w) == bi && scheme.raw_color(w, v) == ci) ++count;
        }
        if (result && *result != count) {
            throw std::logic_error("intersection count depends on the representative pair");
        }
        result = count;
    }
    return *result;
}

std::size_t explicit_components(const ExplicitScheme& scheme, std::size_t cell) {
    if (!scheme.fused()) throw std::invalid_argument("explicit_connectivity needs a fused scheme");
    const std::size_t n = scheme.vertex_count();
    std::vector<bool> seen(n, false);
    std::size_t components = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        ++components;
        std::deque<std::size_t> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (!seen[v] && scheme.color(u, v) == cell) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    return components;
}

bool explicit_connectivity(const ExplicitScheme& scheme, std::size_t cell) {
    return explicit_components(scheme, cell) == 1;
}

CrossValidationReport cross_validate(int k, int d, long m, const std::vector<FusionPartition>& fusions) {
    CrossValidationReport report;
    report.k = k;
    report.d = d;
    report.m = m;

    const ExplicitScheme raw(k, d, m);
    const Cube& cube = raw.cube();
    const StructureTable generic(k, d);
    const StructureTable at_m(k, d, Mode::numeric(m));
    const mpq_class mq(m);
    for (std::size_t a = 0; a < cube.size(); ++a)
        for (std::size_t b = 0; b < cube.size(); ++b)
            for (std::size_t c = 0; c < cube.size(); ++c) {
                const auto counted = count_structure_constant(raw, cube.vector(a), cube.vector(b), cube.vector(c));
                const mpq_class symbolic = generic(a, b, c).evaluate(mq);
                ++report.triples_checked;
                if (symbolic != mpq_class(mpz_class(static_cast<unsigned long>(counted)))) {
                    report.mismatches.push_back("triple a=" + cube.vector(a).to_string() +
                                                " b=" + cube.vector(b).to_string() +
                                                " c=" + cube.vector(c).to_string() + ": counted " +
                                                std::to_string(counted) + ", symbolic " + symbolic.get_str());
                }
            }

    for (const auto& s : fusions) {
        ++report.fusions_checked;
        const ExplicitScheme fused(k, d, m, s);
        for (std::size_t alpha = 1; alpha < s.cell_count(); ++alpha) {
            const bool by_bfs = explicit_connectivity(fused, alpha);
            const auto reached = composition_closure(at_m, s, alpha);
            const bool by_index = std::all_of(reached.begin(), reached.end(), [](bool x) { return x; });
            if (by_bfs != by_index) {
                report.mismatches.push_back("fusion " + s.to_string() + " cell " + std::to_string(alpha) +
                                            ": index-level connected=" + (by_index ? "true" : "false") +
                                            ", BFS connected=" + (by_bfs ? "true" : "false"));
            }
        }
    }
    return report;
}

}  // namespace jfusion
