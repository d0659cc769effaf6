#pragma once

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace crossnest {

// Partition of {1..n}; blocks sorted by minimum, elements sorted within a block.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    SetPartition() = default;
    SetPartition(int n_, std::vector<std::vector<int>> blocks_);  // canonicalizes, validates

    int block_count() const { return (int)blocks.size(); }
    int block_of(int element) const;  // 0-based block index

    auto operator<=>(const SetPartition&) const = default;
};

// Arc diagram on {1..n}; arcs (i,j) with i <= j, loops only when enhanced.
struct ArcDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted
    bool enhanced = false;

    auto operator<=>(const ArcDiagram&) const = default;
};

// Standard representation: arcs between consecutive elements of each block.
ArcDiagram standard_rep(const SetPartition& p);
// Enhanced representation: standard arcs plus a loop (i,i) at each singleton.
ArcDiagram enhanced_rep(const SetPartition& p);

// Partition whose standard (or enhanced) representation is the given diagram.
SetPartition partition_from_arcs(const ArcDiagram& d);

std::set<int> min_set(const SetPartition& p);  // block minima
std::set<int> max_set(const SetPartition& p);  // block maxima

bool is_complete_matching(const SetPartition& p);  // all blocks of size 2

// All partitions of {1..n} in restricted-growth-string lexicographic order.
// Shards split the enumeration deterministically; (0,1) is the whole range.
std::vector<SetPartition> all_partitions(int n, int shard = 0, int num_shards = 1);
// Callback form to avoid materializing; stops early if fn returns false.
void for_each_partition(int n, const std::function<bool(const SetPartition&)>& fn,
                        int shard = 0, int num_shards = 1);

// All complete matchings on {1..2m}, smallest-unmatched-first order.
std::vector<SetPartition> all_matchings(int m, int shard = 0, int num_shards = 1);
void for_each_matching(int m, const std::function<bool(const SetPartition&)>& fn,
                       int shard = 0, int num_shards = 1);

// Text form: dash-separated digit blocks for n <= 9 ("1457-26-3"),
// dash-separated bracketed lists for n >= 10 ("[1,10]-[2,6]-[3]").
std::string format_partition(const SetPartition& p);
SetPartition parse_partition(const std::string& text);

std::string format_set(const std::set<int>& s);  // comma separated

}  // namespace crossnest
