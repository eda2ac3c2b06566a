#include "jfusion/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jfusion/johnson.hpp"

namespace jfusion {

std::string Mode::to_string() const {
    return m_ ? "numeric(m=" + std::to_string(*m_) + ")" : "generic";
}

StructureTable::StructureTable(int k, int d, Mode mode)
    : cube_(std::make_shared<const Cube>(k, d)), mode_(mode) {
    if (mode_.m()) Parameters(k, d, mode_.m());  // validates m >= 3k

    const ScalarTable scalar(k);
    const std::size_t n = cube_->size();
    if (n > 128) {
        throw std::invalid_argument("structure table for (k+1)^d = " + std::to_string(n) +
                                    " vectors is too large");
    }
    table_.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const IndexVector& av = cube_->vector(a);
        for (std::size_t b = 0; b < n; ++b) {
            const IndexVector& bv = cube_->vector(b);
            for (std::size_t c = 0; c < n; ++c) {
                const IndexVector& cv = cube_->vector(c);
                if (!triangle_positive(av, bv, cv)) continue;
                RationalPolynomial p(1L);
                for (int i = 0; i < d; ++i) {
                    const auto j = static_cast<std::size_t>(i);
                    p *= scalar(av[j], bv[j], cv[j]);
                }
                if (mode_.m()) p = RationalPolynomial(p.evaluate(mpq_class(*mode_.m())));
                table_[(a * n + b) * n + c] = std::move(p);
            }
        }
    }
}

bool StructureTable::positive(const RationalPolynomial& p) const {
    if (mode_.is_generic()) return p.eventually_positive();
    // numeric tables hold constants
    return !p.is_zero() && sgn(p.coefficients().front()) > 0 && p.coefficients().size() == 1;
}

// ---------------------------------------------------------------------------

FusionPartition::FusionPartition(int k, int d, const std::vector<std::vector<IndexVector>>& cells)
    : cube_(std::make_shared<const Cube>(k, d)) {
    cells_.reserve(cells.size());
    for (const auto& cell : cells) {
        std::vector<std::size_t> ids;
        ids.reserve(cell.size());
        for (const auto& v : cell) ids.push_back(cube_->id(v));
        cells_.push_back(std::move(ids));
    }
    canonicalize_and_check();
}

FusionPartition::FusionPartition(std::shared_ptr<const Cube> cube,
                                 std::vector<std::vector<std::size_t>> cells)
    : cube_(std::move(cube)), cells_(std::move(cells)) {
    canonicalize_and_check();
}

void FusionPartition::canonicalize_and_check() {
    const std::size_t n = cube_->size();
    for (auto& cell : cells_) {
        if (cell.empty()) throw std::invalid_argument("partition has an empty cell");
        std::sort(cell.begin(), cell.end());
    }
    std::sort(cells_.begin(), cells_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    cell_of_.assign(n, unassigned);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (std::size_t id : cells_[i]) {
            if (id >= n) throw std::invalid_argument("cell member outside the cube");
            if (cell_of_[id] != unassigned) {
                throw std::invalid_argument("cells overlap at " + cube_->vector(id).to_string());
            }
            cell_of_[id] = i;
        }
    }
    for (std::size_t id = 0; id < n; ++id) {
        if (cell_of_[id] == unassigned) {
            throw std::invalid_argument("cells do not cover " + cube_->vector(id).to_string());
        }
    }
    if (cells_.front().size() != 1 || cells_.front().front() != cube_->zero_id()) {
        throw std::invalid_argument("the zero vector must form a cell by itself");
    }
}

std::vector<IndexVector> FusionPartition::cell_vectors(std::size_t i) const {
    std::vector<IndexVector> out;
    for (std::size_t id : cell(i)) out.push_back(cube_->vector(id));
    return out;
}

int FusionPartition::cell_weight(std::size_t i) const {
    int w = 0;
    for (std::size_t id : cell(i)) w = std::max(w, cube_->weight(id));
    return w;
}

bool FusionPartition::refines(const FusionPartition& coarser) const {
    if (!(*cube_ == coarser.cube())) throw std::invalid_argument("partitions of different cubes");
    for (const auto& c : cells_) {
        const std::size_t target = coarser.cell_of(c.front());
        for (std::size_t id : c) {
            if (coarser.cell_of(id) != target) return false;
        }
    }
    return true;
}

FusionPartition FusionPartition::permuted(const std::vector<int>& perm) const {
    const int d = cube_->d();
    if (static_cast<int>(perm.size()) != d) throw std::invalid_argument("permutation length != d");
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < d; ++i) {
        if (check[static_cast<std::size_t>(i)] != i) throw std::invalid_argument("not a permutation");
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) {
        std::vector<std::size_t> image;
        for (std::size_t id : c) {
            const IndexVector& v = cube_->vector(id);
            std::vector<int> w(static_cast<std::size_t>(d));
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[static_cast<std::size_t>(perm[i])];
            image.push_back(cube_->id(IndexVector(std::move(w))));
        }
        out.push_back(std::move(image));
    }
    return FusionPartition(cube_, std::move(out));
}

std::string FusionPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i) os << ", ";
        os << '{';
        for (std::size_t j = 0; j < cells_[i].size(); ++j) {
            if (j) os << ',';
            os << cube_->vector(cells_[i][j]).to_string();
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------

RationalPolynomial fused_structure_constant(const StructureTable& table, const FusionPartition& s,
                                            std::size_t a, std::size_t beta, std::size_t gamma) {
    if (!(table.cube() == s.cube())) throw std::invalid_argument("table and partition disagree on (k,d)");
    if (beta >= s.cell_count() || gamma >= s.cell_count()) {
        throw std::out_of_range("unknown cell id");
    }
    if (a >= s.cube().size()) throw std::out_of_range("vector id outside the cube");
    RationalPolynomial out;
    for (std::size_t b : s.cell(beta))
        for (std::size_t c : s.cell(gamma)) {
            const auto& p = table(a, b, c);
            if (!p.is_zero()) out += p;
        }
    return out;
}

std::string FusionWitness::to_string() const {
    std::ostringstream os;
    os << "cell " << alpha << " members " << a.to_string() << " and " << a_prime.to_string()
       << " disagree for (beta,gamma)=(" << beta << "," << gamma << "): " << value_a.to_string()
       << " vs " << value_a_prime.to_string();
    return os.str();
}

namespace {

std::vector<std::size_t> cells_by_weight(const FusionPartition& s) {
    std::vector<std::size_t> order(s.cell_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return s.cell_weight(x) < s.cell_weight(y);
    });
    return order;
}

}  // namespace

FusionVerdict is_valid_fusion(const StructureTable& table, const FusionPartition& s) {
    if (!(table.cube() == s.cube())) throw std::invalid_argument("table and partition disagree on (k,d)");
    const auto order = cells_by_weight(s);
    for (std::size_t bi = 0; bi < order.size(); ++bi) {
        for (std::size_t gi = bi; gi < order.size(); ++gi) {
            const std::size_t beta = order[bi];
            const std::size_t gamma = order[gi];
            for (std::size_t alpha = 0; alpha < s.cell_count(); ++alpha) {
                const auto& members = s.cell(alpha);
                if (members.size() < 2) continue;
                const RationalPolynomial ref = fused_structure_constant(table, s, members.front(), beta, gamma);
                for (std::size_t j = 1; j < members.size(); ++j) {
                    RationalPolynomial val = fused_structure_constant(table, s, members[j], beta, gamma);
                    if (!(val == ref)) {
                        FusionWitness w{alpha, beta, gamma,
                                        s.cube().vector(members.front()), s.cube().vector(members[j]),
                                        ref, std::move(val)};
                        return {false, std::move(w)};
                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------

CellAnalysis analyze_cell(const FusionPartition& s, std::size_t beta) {
    const Cube& cube = s.cube();
    CellAnalysis out;
    out.cell = beta;
    out.weight = s.cell_weight(beta);
    for (std::size_t id : s.cell(beta)) {
        if (cube.weight(id) == out.weight) out.star.push_back(id);
    }
    std::set<std::size_t> closure;
    for (std::size_t top : out.star) {
        for (const auto& v : down_set(cube.vector(top))) closure.insert(cube.id(v));
    }
    out.down_closure.assign(closure.begin(), closure.end());

    out.n_constants.resize(s.cell_count());
    for (std::size_t alpha = 0; alpha < s.cell_count(); ++alpha) {
        const auto& members = s.cell(alpha);
        mpz_class first = dominator_sum(s, out, members.front());
        bool constant = true;
        for (std::size_t j = 1; j < members.size() && constant; ++j) {
            constant = dominator_sum(s, out, members[j]) == first;
        }
        if (constant) out.n_constants[alpha] = first;
    }
    return out;
}

mpz_class dominator_sum(const FusionPartition& s, const CellAnalysis& beta, std::size_t a) {
    const Cube& cube = s.cube();
    const IndexVector top = IndexVector::constant(cube.d(), cube.k());
    const IndexVector& av = cube.vector(a);
    mpz_class total = 0;
    for (std::size_t b : beta.star) {
        const IndexVector& bv = cube.vector(b);
        if (!dominates(bv, av)) continue;
        total += vector_binomial(difference(top, av), difference(top, bv));
    }
    return total;
}

KeyPropReport key_prop_report(const FusionPartition& s, std::size_t beta) {
    const Cube& cube = s.cube();
    const CellAnalysis cell = analyze_cell(s, beta);
    KeyPropReport r;
    r.cell = beta;

    auto fail = [&](std::string msg) {
        r.failures.push_back("cell " + std::to_string(beta) + ": " + std::move(msg));
    };

    // (1) D is a union of cells and everything in D outside beta is lighter.
    r.down_closure_is_union = true;
    std::vector<bool> in_d(cube.size(), false);
    for (std::size_t id : cell.down_closure) in_d[id] = true;
    for (std::size_t id : cell.down_closure) {
        for (std::size_t other : s.cell(s.cell_of(id))) {
            if (!in_d[other]) {
                r.down_closure_is_union = false;
                fail("D contains " + cube.vector(id).to_string() + " but not its cellmate " +
                     cube.vector(other).to_string());
                break;
            }
        }
        if (!r.down_closure_is_union) break;
    }
    int rest_weight = -1;  // weight of the empty set
    for (std::size_t id : cell.down_closure) {
        if (s.cell_of(id) != beta) rest_weight = std::max(rest_weight, cube.weight(id));
    }
    r.weight_drop = rest_weight < cell.weight;
    if (!r.weight_drop) {
        fail("wt(D \\ beta) = " + std::to_string(rest_weight) + " is not below wt(beta) = " +
             std::to_string(cell.weight));
    }

    // (2)
    r.constant_n = std::all_of(cell.n_constants.begin(), cell.n_constants.end(),
                               [](const auto& n) { return n.has_value(); });
    if (!r.constant_n) {
        for (std::size_t alpha = 0; alpha < cell.n_constants.size(); ++alpha) {
            if (!cell.n_constants[alpha]) fail("dominator sum not constant on cell " + std::to_string(alpha));
        }
    }
    r.n_self = cell.n_constants[beta];

    // (3)
    r.unique_dominator = true;
    for (std::size_t id : s.cell(beta)) {
        int count = 0;
        for (std::size_t top : cell.star) {
            if (dominates(cube.vector(top), cube.vector(id))) ++count;
        }
        if (count != 1) {
            r.unique_dominator = false;
            fail(cube.vector(id).to_string() + " has " + std::to_string(count) + " dominators in beta*");
        }
    }

    // (4)
    bool corners = std::all_of(cell.star.begin(), cell.star.end(), [&](std::size_t id) {
        for (int x : cube.vector(id).entries()) {
            if (x != 0 && x != cube.k()) return false;
        }
        return true;
    });
    r.weight_step_or_corner = corners || cell.weight == rest_weight + 1;
    if (!r.weight_step_or_corner) {
        fail("wt(beta) = " + std::to_string(cell.weight) + " but wt(D \\ beta) = " +
             std::to_string(rest_weight) + " and beta* leaves {0,k}^d");
    }

    r.star_factorials_equal = true;
    const mpz_class f0 = vector_factorial(cube.vector(cell.star.front()));
    for (std::size_t id : cell.star) {
        if (vector_factorial(cube.vector(id)) != f0) {
            r.star_factorials_equal = false;
            fail("members of beta* have different factorials");
            break;
        }
    }
    if (!r.n_self || *r.n_self != 1) {
        fail("N^beta_beta = " + (r.n_self ? r.n_self->get_str() : std::string("undefined")));
    }
    return r;
}

KeyPropReport verify_key_prop(const StructureTable& table, const FusionPartition& s, std::size_t beta) {
    if (beta >= s.cell_count()) throw std::out_of_range("unknown cell id");
    auto verdict = is_valid_fusion(table, s);
    if (!verdict.valid) {
        throw std::invalid_argument("not a valid fusion: " + verdict.witness->to_string());
    }
    return key_prop_report(s, beta);
}

DominationOrder domination_preorder(const FusionPartition& s) {
    const Cube& cube = s.cube();
    const std::size_t n = s.cell_count();
    DominationOrder out;
    out.precedes.assign(n, std::vector<bool>(n, false));
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        for (std::size_t beta = 0; beta < n; ++beta) {
            bool all = true;
            for (std::size_t a : s.cell(alpha)) {
                bool found = false;
                for (std::size_t b : s.cell(beta)) {
                    if (dominates(cube.vector(b), cube.vector(a))) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    all = false;
                    break;
                }
            }
            out.precedes[alpha][beta] = all;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (out.precedes[x][y] && out.precedes[y][x]) out.antisymmetric = false;

    for (std::size_t alpha = 1; alpha < n; ++alpha) {
        bool minimal = true;
        for (std::size_t beta = 1; beta < n && minimal; ++beta) {
            if (beta != alpha && out.precedes[beta][alpha]) minimal = false;
        }
        if (minimal) out.minimal.push_back(alpha);
    }
    return out;
}

std::vector<bool> composition_closure(const StructureTable& table, const FusionPartition& s,
                                      std::size_t alpha) {
    const std::size_t n = s.cell_count();
    std::vector<bool> reached(n, false);
    reached[FusionPartition::identity_cell] = true;
    reached.at(alpha) = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t delta = 0; delta < n; ++delta) {
            if (reached[delta]) continue;
            const std::size_t rep = s.cell(delta).front();
            for (std::size_t beta = 0; beta < n && !reached[delta]; ++beta) {
                if (!reached[beta]) continue;
                for (std::size_t gamma = beta; gamma < n; ++gamma) {
                    if (!reached[gamma]) continue;
                    if (table.positive(fused_structure_constant(table, s, rep, beta, gamma))) {
                        reached[delta] = true;
                        grew = true;
                        break;
                    }
                }
            }
        }
    }
    return reached;
}

bool is_primitive(const StructureTable& table, const FusionPartition& s) {
    for (std::size_t alpha = 1; alpha < s.cell_count(); ++alpha) {
        auto reached = composition_closure(table, s, alpha);
        if (!std::all_of(reached.begin(), reached.end(), [](bool x) { return x; })) return false;
    }
    return true;
}

}  // namespace jfusion
