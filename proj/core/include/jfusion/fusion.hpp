#pragma once

// Fusion partitions of the index cube and everything computed from them.
//
// A partition S of [0,k]^d induces the coarsening J(m,k)^S of J(m,k)^d whose
// relations are R_alpha = {(u,v) : (|u_1 \ v_1|, ..., |u_d \ v_d|) in alpha}.
// J(m,k)^S is an association scheme iff {(0)^d} is a cell and the fused
// constants p^a_{beta,gamma} = sum_{b in beta, c in gamma} p^a_{b,c} depend
// only on the cell containing a.
//
// Generic mode compares fused constants as polynomials in m ("m large enough");
// numeric mode compares their values at one concrete m >= 3k.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jfusion/index_vector.hpp"
#include "jfusion/polynomial.hpp"

namespace jfusion {

class Mode {
public:
    static Mode generic() { return Mode(std::nullopt); }
    static Mode numeric(long m) { return Mode(m); }

    bool is_generic() const noexcept { return !m_.has_value(); }
    const std::optional<long>& m() const noexcept { return m_; }
    std::string to_string() const;

    friend bool operator==(const Mode&, const Mode&) = default;

private:
    explicit Mode(std::optional<long> m) : m_(m) {}
    std::optional<long> m_;
};

/// All vector structure constants p^a_{b,c} of J(m,k)^d for one (k, d), as
/// polynomials (generic mode) or as constants evaluated at m (numeric mode).
class StructureTable {
public:
    StructureTable(int k, int d, Mode mode = Mode::generic());

    const Cube& cube() const noexcept { return *cube_; }
    std::shared_ptr<const Cube> shared_cube() const noexcept { return cube_; }
    const Mode& mode() const noexcept { return mode_; }
    int k() const noexcept { return cube_->k(); }
    int d() const noexcept { return cube_->d(); }

    const RationalPolynomial& operator()(std::size_t a, std::size_t b, std::size_t c) const {
        const std::size_t n = cube_->size();
        return table_[(a * n + b) * n + c];
    }

    /// Eventually positive in generic mode, positive in numeric mode.
    bool positive(const RationalPolynomial& p) const;

private:
    std::shared_ptr<const Cube> cube_;
    Mode mode_;
    std::vector<RationalPolynomial> table_;
};

/// A partition of [0,k]^d with {(0)^d} as a cell, kept in canonical form:
/// members sorted lexicographically, cells sorted by least member. The
/// identity cell is therefore always cell 0.
class FusionPartition {
public:
    FusionPartition(int k, int d, const std::vector<std::vector<IndexVector>>& cells);
    FusionPartition(std::shared_ptr<const Cube> cube, std::vector<std::vector<std::size_t>> cells);

    const Cube& cube() const noexcept { return *cube_; }
    std::shared_ptr<const Cube> shared_cube() const noexcept { return cube_; }
    int k() const noexcept { return cube_->k(); }
    int d() const noexcept { return cube_->d(); }

    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<std::size_t>& cell(std::size_t i) const { return cells_.at(i); }
    const std::vector<std::vector<std::size_t>>& cells() const noexcept { return cells_; }
    std::vector<IndexVector> cell_vectors(std::size_t i) const;
    std::size_t cell_of(std::size_t id) const { return cell_of_.at(id); }
    std::size_t cell_of(const IndexVector& a) const { return cell_of_.at(cube_->id(a)); }

    static constexpr std::size_t identity_cell = 0;

    /// Max weight over the cell.
    int cell_weight(std::size_t i) const;

    /// True iff every cell of *this lies inside one cell of `coarser`.
    bool refines(const FusionPartition& coarser) const;

    /// Image under the coordinate map a -> (a_{perm[0]}, ..., a_{perm[d-1]}).
    FusionPartition permuted(const std::vector<int>& perm) const;

    std::string to_string() const;

    friend bool operator==(const FusionPartition& x, const FusionPartition& y) {
        return *x.cube_ == *y.cube_ && x.cells_ == y.cells_;
    }
    friend bool operator<(const FusionPartition& x, const FusionPartition& y) {
        return x.cells_ < y.cells_;
    }

private:
    void canonicalize_and_check();

    std::shared_ptr<const Cube> cube_;
    std::vector<std::vector<std::size_t>> cells_;
    std::vector<std::size_t> cell_of_;
};

/// p^a_{beta,gamma}: sum over b in beta, c in gamma of p^a_{b,c}.
RationalPolynomial fused_structure_constant(const StructureTable& table, const FusionPartition& s,
                                            std::size_t a, std::size_t beta, std::size_t gamma);

struct FusionWitness {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    IndexVector a;
    IndexVector a_prime;
    RationalPolynomial value_a;
    RationalPolynomial value_a_prime;

    std::string to_string() const;
};

struct FusionVerdict {
    bool valid = false;
    std::optional<FusionWitness> witness;
};

/// Checks that fused constants are constant on every cell. Returns the first
/// disagreement found (low-weight beta, gamma are tried first).
FusionVerdict is_valid_fusion(const StructureTable& table, const FusionPartition& s);

struct CellAnalysis {
    std::size_t cell = 0;
    int weight = 0;
    std::vector<std::size_t> star;           // alpha*: maximal-weight members
    std::vector<std::size_t> down_closure;   // D_alpha, sorted ids
    /// N^beta_alpha indexed by alpha; nullopt where the defining sum is not
    /// constant on alpha.
    std::vector<std::optional<mpz_class>> n_constants;
};

CellAnalysis analyze_cell(const FusionPartition& s, std::size_t beta);

/// Sum over b in beta* with a <= b of C((k)^d - a, (k)^d - b).
mpz_class dominator_sum(const FusionPartition& s, const CellAnalysis& beta, std::size_t a);

struct KeyPropReport {
    std::size_t cell = 0;
    bool down_closure_is_union = false;   // part 1, first half
    bool weight_drop = false;             // part 1, wt(D \ beta) < wt(beta)
    bool constant_n = false;              // part 2
    bool unique_dominator = false;        // part 3
    bool weight_step_or_corner = false;   // part 4
    bool star_factorials_equal = false;
    std::optional<mpz_class> n_self;      // N^beta_beta
    std::vector<std::string> failures;

    bool part1() const noexcept { return down_closure_is_union && weight_drop; }
    bool passed() const noexcept {
        return part1() && constant_n && unique_dominator && weight_step_or_corner &&
               star_factorials_equal && n_self && *n_self == 1;
    }
};

/// Checks the four structural facts valid fusion cells must satisfy, for the
/// cell beta. Purely combinatorial; the caller is responsible for validity.
KeyPropReport key_prop_report(const FusionPartition& s, std::size_t beta);

/// As key_prop_report, but first confirms s is a valid fusion under `table`
/// and throws std::invalid_argument otherwise.
KeyPropReport verify_key_prop(const StructureTable& table, const FusionPartition& s, std::size_t beta);

struct DominationOrder {
    /// precedes[alpha][beta] == true iff every a in alpha is dominated by some b in beta.
    std::vector<std::vector<bool>> precedes;
    /// Minimal cells of S \ {identity}.
    std::vector<std::size_t> minimal;
    bool antisymmetric = true;
};

DominationOrder domination_preorder(const FusionPartition& s);

/// Cells reachable from {identity, alpha} by closing under composition, i.e.
/// the relations appearing in walks of R_alpha. Assumes s is valid.
std::vector<bool> composition_closure(const StructureTable& table, const FusionPartition& s,
                                      std::size_t alpha);

/// R_alpha is connected for every nonidentity alpha. Assumes s is valid.
bool is_primitive(const StructureTable& table, const FusionPartition& s);

}  // namespace jfusion
