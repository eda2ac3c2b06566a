#pragma once

// Named fusions of J(m,k)^d and the sandwich classifier for primitive fusions.
//
// With M = C(m,k) and a partition of the coordinates into d/e blocks of size e:
//   discrete        J(m,k)^d itself
//   cameron         C(m,k,d): orbits of coordinate permutations on [0,k]^d
//   trivial_block   T_{M^e}^{d/e}: a is classified by the set of blocks on
//                   which it is nonzero
//   hamming_block   H(d/e, M^e): a is classified by the number of such blocks
//
// A primitive fusion X is a Cameron sandwich when J^d <= X <= C(m,k,d) and a
// Hamming sandwich when T_{M^e}^{d/e} <= X <= H(d/e, M^e) for some blocks.

#include <string>
#include <vector>

#include "jfusion/fusion.hpp"

namespace jfusion {

/// A partition of the coordinates {0..d-1} into d/e blocks of size e.
class BlockStructure {
public:
    BlockStructure(int d, std::vector<std::vector<int>> blocks);

    int d() const noexcept { return d_; }
    int e() const noexcept { return e_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    /// Block index of each coordinate.
    int block_of(int coordinate) const { return block_of_.at(static_cast<std::size_t>(coordinate)); }

    /// Blocks in 1-based coordinates, e.g. "[[1,2],[3,4]]".
    std::string to_string() const;

    friend bool operator==(const BlockStructure& x, const BlockStructure& y) {
        return x.blocks_ == y.blocks_;
    }

private:
    int d_;
    int e_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// All equal-size block structures of {0..d-1} with block size e (e | d).
std::vector<BlockStructure> block_structures(int d, int e);
/// All equal-size block structures for every divisor e of d, by increasing e.
std::vector<BlockStructure> all_block_structures(int d);

FusionPartition discrete_partition(int k, int d);
FusionPartition cameron_partition(int k, int d);
FusionPartition trivial_block_partition(int k, int d, const BlockStructure& blocks);
FusionPartition hamming_block_partition(int k, int d, const BlockStructure& blocks);

enum class Verdict { CameronSandwich, HammingSandwich, Outside };

std::string to_string(Verdict v);

struct Classification {
    bool cameron = false;
    /// Every block structure witnessing a Hamming sandwich.
    std::vector<BlockStructure> hamming;

    /// Cameron first when both hold.
    Verdict verdict() const noexcept {
        if (cameron) return Verdict::CameronSandwich;
        if (!hamming.empty()) return Verdict::HammingSandwich;
        return Verdict::Outside;
    }
};

/// Interval memberships of any partition, without requiring primitivity.
Classification sandwich_memberships(const FusionPartition& s);

/// Classifies a valid primitive fusion; throws std::invalid_argument if s is
/// not valid or not primitive under `table`.
Classification classify(const StructureTable& table, const FusionPartition& s);

struct MinimalCellReport {
    std::size_t cell = 0;
    int weight = 0;
    std::vector<std::size_t> star;
    bool covers = false;              // supports of alpha* cover {0..d-1}
    bool disjoint_equal = false;      // supports pairwise disjoint, equal size
    bool weight_one_is_cameron = true;  // wt=1  =>  alpha* = all weight-1 vectors
    bool corners = true;              // wt>1  =>  alpha* inside {0,k}^d
    int e = 0;                        // common support size
    std::vector<std::vector<int>> supports;
    /// Every cell's beta* is made of sums of alpha* members.
    bool stars_are_sums = false;
    std::vector<std::string> failures;

    bool passed() const noexcept {
        return covers && disjoint_equal && weight_one_is_cameron && corners &&
               (weight == 1 || stars_are_sums);
    }
};

/// Examines every minimal cell of a valid primitive fusion: its top layer
/// must be an equipartition of the coordinates, either the weight-1 layer
/// (the Cameron graph) or corner vectors in {0,k}^d (a Hamming graph). In the
/// latter case every other cell's top layer consists of sums of those
/// corners.
std::vector<MinimalCellReport> verify_minimal_cell_structure(const FusionPartition& s);

}  // namespace jfusion
