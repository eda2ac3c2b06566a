#pragma once

// Exhaustive search over all partitions of [0,k]^d \ {(0)^d} for fusions.
//
// Partitions are generated one complete cell at a time: each new cell holds
// the lightest unassigned vector (by weight, then lex) plus any subset of the
// remaining unassigned ones. Every set partition is reached exactly once. With
// pruning on, the cell-constancy condition is tested as soon as all three
// cells of a triple (alpha, beta, gamma) are complete, which is sound because
// completed cells never change below that node.

#include <cstdint>
#include <optional>
#include <vector>

#include "jfusion/errors.hpp"
#include "jfusion/fusion.hpp"
#include "jfusion/schemes.hpp"

namespace jfusion {

/// Largest nonidentity cube size searched without --force (Bell(16) ~ 1e10).
inline constexpr std::size_t kExhaustiveGuard = 16;

struct EnumerationOptions {
    Mode mode = Mode::generic();
    bool primitive_only = false;
    bool prune = true;
    bool force = false;
    unsigned workers = 1;
};

struct EnumeratedFusion {
    FusionPartition partition;
    bool primitive = false;
    /// Present for primitive fusions.
    std::optional<Classification> classification;
};

struct EnumerationReport {
    int k = 0;
    int d = 0;
    Mode mode = Mode::generic();
    bool pruned = true;
    bool forced = false;
    std::uint64_t candidates = 0;  // complete partitions reached
    std::uint64_t nodes = 0;       // cells placed, including partial partitions
    std::size_t valid_count = 0;
    std::size_t primitive_count = 0;
    /// Canonically sorted; only primitive ones when primitive_only was set.
    std::vector<EnumeratedFusion> fusions;
    double seconds = 0.0;
};

EnumerationReport enumerate_fusions(int k, int d, const EnumerationOptions& options = {});

/// Bell number B(n), exact.
mpz_class bell_number(unsigned n);

struct TheoremReport {
    EnumerationReport enumeration;
    /// Indices into enumeration.fusions of primitive fusions classified Outside.
    std::vector<std::size_t> outside;
    /// Indices of primitive fusions whose minimal-cell structure check failed.
    std::vector<std::size_t> structure_failures;

    bool passed() const noexcept { return outside.empty() && structure_failures.empty(); }
};

/// Enumerates in generic mode and checks every primitive fusion is a Cameron
/// or Hamming sandwich.
TheoremReport verify_theorem(int k, int d, unsigned workers = 1, bool force = false);

struct SmallMReport {
    int k = 0;
    int d = 0;
    long m = 0;
    std::vector<FusionPartition> generic;
    std::vector<FusionPartition> numeric;
    bool generic_subset = false;
    /// Fusions valid at this m only (coincidences of the polynomials); unclassified.
    std::vector<FusionPartition> numeric_only;
};

/// Compares numeric-mode fusions at a concrete m >= 3k with the generic list.
SmallMReport spot_check_small_m(int k, int d, long m, unsigned workers = 1);

}  // namespace jfusion
