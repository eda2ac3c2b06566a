#include "jfusion/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace jfusion {

namespace {

// p^a_{b,c} sampled at L integer points. Two polynomials of degree <= kd agree
// iff they agree at kd + 1 points, so generic mode samples m = 3k..3k+kd and
// numeric mode samples the single m. Every sample is a vertex count, hence a
// nonnegative integer at most C(m,k)^d, and all partial sums stay below that.
class SampleTable {
public:
    explicit SampleTable(const StructureTable& table) : n_(table.cube().size()) {
        const int k = table.k();
        const int d = table.d();
        std::vector<long> points;
        if (table.mode().m()) {
            points.push_back(*table.mode().m());
        } else {
            for (long m = 3L * k; m <= 3L * k + static_cast<long>(k) * d; ++m) points.push_back(m);
        }
        mpz_class bound = 1;
        for (int i = 0; i < d; ++i) bound *= binomial(points.back(), k);
        if (bound >= mpz_class(1) << 62) throw GuardError("sample values would overflow 64-bit integers");

        width_ = points.size();
        values_.assign(n_ * n_ * n_ * width_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c) {
                    const auto& p = table(a, b, c);
                    if (p.is_zero()) continue;
                    std::int64_t* out = &values_[((a * n_ + b) * n_ + c) * width_];
                    for (std::size_t j = 0; j < width_; ++j) {
                        const mpq_class v = p.evaluate(mpq_class(points[j]));
                        if (v.get_den() != 1 || sgn(v) < 0) throw std::logic_error("structure constant is not a count");
                        out[j] = v.get_num().get_si();
                    }
                }
    }

    std::size_t width() const noexcept { return width_; }
    const std::int64_t* operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return &values_[((a * n_ + b) * n_ + c) * width_];
    }

private:
    std::size_t n_;
    std::size_t width_ = 0;
    std::vector<std::int64_t> values_;
};

class Search {
public:
    Search(const StructureTable& table, const SampleTable* samples, bool prune)
        : table_(table), samples_(samples), cube_(table.cube()), prune_(prune) {
        n_ = cube_.size();
        width_ = samples_ ? samples_->width() : 0;
        for (std::size_t id : cube_.weight_order()) {
            if (id != cube_.zero_id()) order_.push_back(id);
        }
        assigned_.assign(n_, false);
        assigned_[cube_.zero_id()] = true;
        push_cell({cube_.zero_id()});
    }

    const std::vector<std::size_t>& order() const noexcept { return order_; }

    /// Places `members` as a complete cell; returns false when pruning rejects it.
    bool push_cell(std::vector<std::size_t> members) {
        ++nodes_;
        for (std::size_t id : members) assigned_[id] = true;
        cells_.push_back(std::move(members));
        if (!prune_) return true;
        extend_caches();
        return check_new_cell();
    }

    void pop_cell() {
        for (std::size_t id : cells_.back()) assigned_[id] = false;
        cells_.pop_back();
        if (prune_) {
            rows_.pop_back();
            pairs_.pop_back();
        }
    }

    /// Continues the search below the current node.
    void descend() {
        auto next = std::find_if(order_.begin(), order_.end(), [&](std::size_t id) { return !assigned_[id]; });
        if (next == order_.end()) {
            leaf();
            return;
        }
        std::vector<std::size_t> cell{*next};
        assigned_[*next] = true;
        grow(cell, static_cast<std::size_t>(next - order_.begin()) + 1);
        assigned_[*next] = false;
    }

    /// Enumerates completions of `cell` using unassigned vectors at order
    /// positions >= pos, then recurses.
    void grow(std::vector<std::size_t>& cell, std::size_t pos) {
        while (pos < order_.size() && assigned_[order_[pos]]) ++pos;
        if (pos == order_.size()) {
            if (push_cell(cell)) descend();
            pop_cell();
            for (std::size_t id : cell) assigned_[id] = true;  // still being grown by the caller
            return;
        }
        const std::size_t id = order_[pos];
        grow(cell, pos + 1);
        cell.push_back(id);
        assigned_[id] = true;
        grow(cell, pos + 1);
        assigned_[id] = false;
        cell.pop_back();
    }

    std::vector<FusionPartition> take_results() { return std::move(results_); }
    std::uint64_t candidates() const noexcept { return candidates_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void leaf() {
        ++candidates_;
        FusionPartition s(table_.shared_cube(), cells_);
        if (prune_ || is_valid_fusion(table_, s).valid) results_.push_back(std::move(s));
    }

    // rows_[beta][(a * n + c) * L + j] = sum_{b in beta} p^a_{b,c}
    // pairs_[gamma][beta][a * L + j] = sum_{b in beta, c in gamma} p^a_{b,c}, beta <= gamma
    void extend_caches() {
        const auto& cell = cells_.back();
        const std::size_t L = width_;
        std::vector<std::int64_t> row(n_ * n_ * L, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t c = 0; c < n_; ++c) {
                std::int64_t* acc = &row[(a * n_ + c) * L];
                for (std::size_t b : cell) {
                    const std::int64_t* p = (*samples_)(a, b, c);
                    for (std::size_t j = 0; j < L; ++j) acc[j] += p[j];
                }
            }
        rows_.push_back(std::move(row));

        const std::size_t x = cells_.size() - 1;
        std::vector<std::vector<std::int64_t>> by_beta(x + 1, std::vector<std::int64_t>(n_ * L, 0));
        for (std::size_t beta = 0; beta <= x; ++beta) {
            const auto& r = rows_[beta];
            for (std::size_t a = 0; a < n_; ++a) {
                std::int64_t* acc = &by_beta[beta][a * L];
                for (std::size_t c : cell) {
                    const std::int64_t* p = &r[(a * n_ + c) * L];
                    for (std::size_t j = 0; j < L; ++j) acc[j] += p[j];
                }
            }
        }
        pairs_.push_back(std::move(by_beta));
    }

    bool constant_on(const std::vector<std::int64_t>& values, const std::vector<std::size_t>& cell) const {
        const std::int64_t* ref = &values[cell.front() * width_];
        for (std::size_t j = 1; j < cell.size(); ++j) {
            if (!std::equal(ref, ref + width_, &values[cell[j] * width_])) return false;
        }
        return true;
    }

    bool check_new_cell() const {
        const std::size_t x = cells_.size() - 1;
        // pairs (beta, x) on every complete cell
        for (std::size_t beta = 0; beta <= x; ++beta) {
            for (std::size_t alpha = 0; alpha <= x; ++alpha) {
                if (cells_[alpha].size() > 1 && !constant_on(pairs_[x][beta], cells_[alpha])) return false;
            }
        }
        // the new cell against every older pair
        if (cells_[x].size() > 1) {
            for (std::size_t gamma = 0; gamma < x; ++gamma)
                for (std::size_t beta = 0; beta <= gamma; ++beta)
                    if (!constant_on(pairs_[gamma][beta], cells_[x])) return false;
        }
        return true;
    }

    const StructureTable& table_;
    const SampleTable* samples_;
    const Cube& cube_;
    bool prune_;
    std::size_t n_ = 0;
    std::size_t width_ = 0;
    std::vector<std::size_t> order_;
    std::vector<bool> assigned_;
    std::vector<std::vector<std::size_t>> cells_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::vector<std::vector<std::int64_t>>> pairs_;
    std::vector<FusionPartition> results_;
    std::uint64_t candidates_ = 0;
    std::uint64_t nodes_ = 0;
};

// First-cell choices: the lightest nonidentity vector plus a subset of the rest.
std::vector<std::vector<std::size_t>> first_cells(const std::vector<std::size_t>& order) {
    std::vector<std::vector<std::size_t>> out;
    if (order.empty()) return out;
    const std::size_t rest = order.size() - 1;
    const std::uint64_t count = std::uint64_t{1} << rest;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::size_t> cell{order.front()};
        for (std::size_t i = 0; i < rest; ++i) {
            if (mask & (std::uint64_t{1} << i)) cell.push_back(order[i + 1]);
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace

mpz_class bell_number(unsigned n) {
    // Bell triangle
    std::vector<mpz_class> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<mpz_class> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

EnumerationReport enumerate_fusions(int k, int d, const EnumerationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const Cube probe(k, d);
    const std::size_t nonidentity = probe.size() - 1;
    if (nonidentity > kExhaustiveGuard && !options.force) {
        throw GuardError("(k+1)^d - 1 = " + std::to_string(nonidentity) + " exceeds the exhaustive guard of " +
                         std::to_string(kExhaustiveGuard) + "; pass force to run anyway");
    }
    if (nonidentity > 63) throw GuardError("cube too large to enumerate");

    const StructureTable table(k, d, options.mode);
    std::optional<SampleTable> samples;
    if (options.prune) samples.emplace(table);

    EnumerationReport report;
    report.k = k;
    report.d = d;
    report.mode = options.mode;
    report.pruned = options.prune;
    report.forced = options.force && nonidentity > kExhaustiveGuard;

    std::vector<FusionPartition> found;
    {
        Search root(table, samples ? &*samples : nullptr, options.prune);
        const auto tasks = first_cells(root.order());
        std::atomic<std::size_t> next{0};
        std::mutex sink;
        std::uint64_t candidates = 0;
        std::uint64_t nodes = 1;  // the identity cell

        auto worker = [&] {
            Search search(table, samples ? &*samples : nullptr, options.prune);
            for (std::size_t t = next++; t < tasks.size(); t = next++) {
                if (search.push_cell(tasks[t])) search.descend();
                search.pop_cell();
            }
            auto local = search.take_results();
            std::lock_guard lock(sink);
            candidates += search.candidates();
            nodes += search.nodes() - 1;
            found.insert(found.end(), std::make_move_iterator(local.begin()),
                         std::make_move_iterator(local.end()));
        };

        const unsigned workers = std::max(1u, options.workers);
        if (workers == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        report.candidates = candidates;
        report.nodes = nodes;
    }
    std::sort(found.begin(), found.end());

    report.valid_count = found.size();
    for (auto& s : found) {
        const bool primitive = is_primitive(table, s);
        if (primitive) ++report.primitive_count;
        if (options.primitive_only && !primitive) continue;
        EnumeratedFusion f{std::move(s), primitive, std::nullopt};
        if (primitive) f.classification = sandwich_memberships(f.partition);
        report.fusions.push_back(std::move(f));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

TheoremReport verify_theorem(int k, int d, unsigned workers, bool force) {
    EnumerationOptions options;
    options.workers = workers;
    options.force = force;
    TheoremReport report{enumerate_fusions(k, d, options), {}, {}};
    const auto& fusions = report.enumeration.fusions;
    for (std::size_t i = 0; i < fusions.size(); ++i) {
        if (!fusions[i].primitive) continue;
        if (fusions[i].classification->verdict() == Verdict::Outside) report.outside.push_back(i);
        for (const auto& r : verify_minimal_cell_structure(fusions[i].partition)) {
            if (!r.passed()) {
                report.structure_failures.push_back(i);
                break;
            }
        }
    }
    return report;
}

SmallMReport spot_check_small_m(int k, int d, long m, unsigned workers) {
    Parameters(k, d, m);  // rejects m < 3k
    SmallMReport out;
    out.k = k;
    out.d = d;
    out.m = m;

    EnumerationOptions options;
    options.workers = workers;
    for (auto& f : enumerate_fusions(k, d, options).fusions) out.generic.push_back(std::move(f.partition));
    options.mode = Mode::numeric(m);
    for (auto& f : enumerate_fusions(k, d, options).fusions) out.numeric.push_back(std::move(f.partition));

    out.generic_subset = std::includes(out.numeric.begin(), out.numeric.end(), out.generic.begin(),
                                       out.generic.end());
    std::set_difference(out.numeric.begin(), out.numeric.end(), out.generic.begin(), out.generic.end(),
                        std::back_inserter(out.numeric_only));
    return out;
}

}  // namespace jfusion
