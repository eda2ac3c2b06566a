#include "jfusion/schemes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jfusion {

BlockStructure::BlockStructure(int d, std::vector<std::vector<int>> blocks)
    : d_(d), e_(0), blocks_(std::move(blocks)) {
    if (d < 1 || blocks_.empty()) throw std::invalid_argument("block structure needs d >= 1 and a block");
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
    e_ = static_cast<int>(blocks_.front().size());
    block_of_.assign(static_cast<std::size_t>(d), -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (static_cast<int>(blocks_[i].size()) != e_ || e_ == 0) {
            throw std::invalid_argument("blocks must be nonempty and of equal size");
        }
        for (int c : blocks_[i]) {
            if (c < 0 || c >= d) throw std::invalid_argument("block coordinate out of range");
            auto& slot = block_of_[static_cast<std::size_t>(c)];
            if (slot != -1) throw std::invalid_argument("blocks overlap");
            slot = static_cast<int>(i);
        }
    }
    if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
        throw std::invalid_argument("blocks do not cover all coordinates");
    }
}

std::string BlockStructure::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) os << ',';
            os << blocks_[i][j] + 1;
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<BlockStructure> block_structures(int d, int e) {
    if (e < 1 || d % e != 0) throw std::invalid_argument("block size must divide d");
    std::vector<BlockStructure> out;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<std::size_t>(d), false);

    // Each new block starts at the smallest unused coordinate, so every
    // structure is produced once.
    std::function<void()> open_block;
    std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& block, int next) {
        if (static_cast<int>(block.size()) == e) {
            blocks.push_back(block);
            open_block();
            blocks.pop_back();
            return;
        }
        for (int c = next; c < d; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = true;
            block.push_back(c);
            extend(block, c + 1);
            block.pop_back();
            used[static_cast<std::size_t>(c)] = false;
        }
    };
    open_block = [&] {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            out.emplace_back(d, blocks);
            return;
        }
        const int c = static_cast<int>(first - used.begin());
        *first = true;
        std::vector<int> block{c};
        extend(block, c + 1);
        *first = false;
    };
    open_block();
    return out;
}

std::vector<BlockStructure> all_block_structures(int d) {
    std::vector<BlockStructure> out;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        auto part = block_structures(d, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

template <typename Key>
FusionPartition partition_by_key(int k, int d, Key key) {
    auto cube = std::make_shared<const Cube>(k, d);
    std::map<decltype(key(cube->vector(0))), std::vector<std::size_t>> groups;
    for (std::size_t id = 1; id < cube->size(); ++id) groups[key(cube->vector(id))].push_back(id);
    std::vector<std::vector<std::size_t>> cells{{cube->zero_id()}};
    for (auto& [_, members] : groups) cells.push_back(std::move(members));
    return FusionPartition(cube, std::move(cells));
}

void require_blocks(int d, const BlockStructure& blocks) {
    if (blocks.d() != d) throw std::invalid_argument("block structure is for a different d");
}

}  // namespace

FusionPartition discrete_partition(int k, int d) {
    return partition_by_key(k, d, [](const IndexVector& a) { return a; });
}

FusionPartition cameron_partition(int k, int d) {
    return partition_by_key(k, d, [](const IndexVector& a) {
        std::vector<int> sorted(a.entries().begin(), a.entries().end());
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    });
}

FusionPartition trivial_block_partition(int k, int d, const BlockStructure& blocks) {
    require_blocks(d, blocks);
    return partition_by_key(k, d, [&](const IndexVector& a) {
        std::vector<bool> nonzero(blocks.blocks().size(), false);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > 0) nonzero[static_cast<std::size_t>(blocks.block_of(static_cast<int>(i)))] = true;
        }
        return nonzero;
    });
}

FusionPartition hamming_block_partition(int k, int d, const BlockStructure& blocks) {
    require_blocks(d, blocks);
    return partition_by_key(k, d, [&](const IndexVector& a) {
        std::vector<bool> nonzero(blocks.blocks().size(), false);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > 0) nonzero[static_cast<std::size_t>(blocks.block_of(static_cast<int>(i)))] = true;
        }
        return std::count(nonzero.begin(), nonzero.end(), true);
    });
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CameronSandwich: return "cameron";
        case Verdict::HammingSandwich: return "hamming";
        case Verdict::Outside: return "outside";
    }
    return "unknown";
}

Classification sandwich_memberships(const FusionPartition& s) {
    Classification out;
    out.cameron = s.refines(cameron_partition(s.k(), s.d()));
    for (auto& blocks : all_block_structures(s.d())) {
        if (trivial_block_partition(s.k(), s.d(), blocks).refines(s) &&
            s.refines(hamming_block_partition(s.k(), s.d(), blocks))) {
            out.hamming.push_back(std::move(blocks));
        }
    }
    return out;
}

Classification classify(const StructureTable& table, const FusionPartition& s) {
    auto verdict = is_valid_fusion(table, s);
    if (!verdict.valid) throw std::invalid_argument("not a valid fusion: " + verdict.witness->to_string());
    if (!is_primitive(table, s)) throw std::invalid_argument("fusion is not primitive");
    return sandwich_memberships(s);
}

std::vector<MinimalCellReport> verify_minimal_cell_structure(const FusionPartition& s) {
    const Cube& cube = s.cube();
    const int d = cube.d();
    const int k = cube.k();
    std::vector<MinimalCellReport> out;

    for (std::size_t alpha : domination_preorder(s).minimal) {
        const CellAnalysis cell = analyze_cell(s, alpha);
        MinimalCellReport r;
        r.cell = alpha;
        r.weight = cell.weight;
        r.star = cell.star;

        std::vector<int> owner(static_cast<std::size_t>(d), -1);
        r.disjoint_equal = true;
        for (std::size_t idx = 0; idx < cell.star.size(); ++idx) {
            auto supp = support(cube.vector(cell.star[idx]));
            for (int c : supp) {
                auto& slot = owner[static_cast<std::size_t>(c)];
                if (slot != -1) r.disjoint_equal = false;
                slot = static_cast<int>(idx);
            }
            if (!r.supports.empty() && supp.size() != r.supports.front().size()) r.disjoint_equal = false;
            r.supports.push_back(std::move(supp));
        }
        r.covers = std::find(owner.begin(), owner.end(), -1) == owner.end();
        r.e = r.supports.empty() ? 0 : static_cast<int>(r.supports.front().size());
        if (!r.covers) r.failures.push_back("supports of the top layer do not cover all coordinates");
        if (!r.disjoint_equal) r.failures.push_back("supports of the top layer are not a disjoint equipartition");

        if (r.weight == 1) {
            std::vector<std::size_t> layer;
            for (std::size_t id = 0; id < cube.size(); ++id) {
                if (cube.weight(id) == 1) layer.push_back(id);
            }
            r.weight_one_is_cameron = layer == r.star;
            if (!r.weight_one_is_cameron) r.failures.push_back("weight-1 top layer is not every unit vector");
        } else {
            for (std::size_t id : r.star) {
                for (int x : cube.vector(id).entries()) {
                    if (x != 0 && x != k) r.corners = false;
                }
            }
            if (!r.corners) r.failures.push_back("top layer leaves {0,k}^d");
        }

        r.stars_are_sums = true;
        for (std::size_t beta = 1; beta < s.cell_count(); ++beta) {
            for (std::size_t b : analyze_cell(s, beta).star) {
                const IndexVector& bv = cube.vector(b);
                IndexVector acc = IndexVector::constant(d, 0);
                for (std::size_t a : r.star) {
                    if (dominates(bv, cube.vector(a))) acc = sum(acc, cube.vector(a));
                }
                if (!(acc == bv)) {
                    r.stars_are_sums = false;
                    if (r.weight > 1) {
                        r.failures.push_back(bv.to_string() + " is not a sum of minimal-cell corners");
                    }
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace jfusion
