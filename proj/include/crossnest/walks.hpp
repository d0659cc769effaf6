#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

enum class WalkKind { Vacillating, Hesitating, Oscillating };

std::string to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

// Walk on Young's lattice: shapes[0..length], shapes[0] = empty.
//  vacillating: odd steps remove a square or stand, even steps add or stand
//  hesitating:  step pairs (stand,add), (remove,stand), (add,remove)
//  oscillating: every step adds or removes exactly one square
struct TableauWalk {
    WalkKind kind = WalkKind::Vacillating;
    std::vector<Shape> shapes;

    int length() const { return (int)shapes.size() - 1; }

    auto operator<=>(const TableauWalk&) const = default;
};

// Throws with the first offending step index on malformed walks.
void validate_walk(const TableauWalk& w);
bool is_closed(const TableauWalk& w);

struct WalkTrace {
    std::vector<StandardTableau> tableaux;       // one per walk index
    std::vector<std::pair<int, int>> pair_events;  // arcs in creation order
};

struct WalkToPartition {
    SetPartition partition;
    StandardTableau tableau;  // final tableau, content inside max(partition)
    WalkTrace trace;
};

struct PartitionToWalk {
    TableauWalk walk;
    WalkTrace trace;
};

// Vacillating walk (any end shape) -> (partition, tableau).
WalkToPartition psi(const TableauWalk& w);
// Partition -> closed vacillating walk of length 2n; inverse of psi.
PartitionToWalk phi(const SetPartition& p);

// Enhanced pair: hesitating walks, via the enhanced representation.
PartitionToWalk phi_bar(const SetPartition& p);
WalkToPartition psi_bar(const TableauWalk& w);  // requires a closed hesitating walk

// Conjugate every shape; same kind.
TableauWalk conjugate_walk(const TableauWalk& w);

// Partition with the conjugated walk: swaps (cr, ne), preserves minima/maxima
// structure appropriate to the kind.
SetPartition conjugate_partition(const SetPartition& p);
SetPartition conjugate_partition_enhanced(const SetPartition& p);

// Complete matching on {1..2m} <-> closed oscillating walk of length 2m.
TableauWalk matching_to_oscillating(const SetPartition& matching);
WalkToPartition oscillating_to_matching(const TableauWalk& w);

// Matching M_w of a permutation w of [m]: arcs (w(i), 2m-i+1).
SetPartition permutation_matching(const std::vector<int>& w);

// RSK pair of w read off the oscillating walk of M_w; equals rsk(w).
std::pair<StandardTableau, StandardTableau> rsk_via_oscillating(const std::vector<int>& w);

// Block minima / maxima read directly from the walk (vacillating kind):
// i is a minimum iff the odd step stands still, a maximum iff the even step does.
std::set<int> vacillating_min_set(const TableauWalk& w);
std::set<int> vacillating_max_set(const TableauWalk& w);
// Hesitating walks determine only the differences min\max and max\min.
std::set<int> hesitating_min_minus_max(const TableauWalk& w);
std::set<int> hesitating_max_minus_min(const TableauWalk& w);

// Number of walks of the given kind from empty to end_shape with `length` steps.
BigInt count_walks(WalkKind kind, const Shape& end_shape, int length);
// All end shapes at once (the DP table's last layer).
std::map<Shape, BigInt> walk_shape_distribution(WalkKind kind, int length);
void clear_walk_count_cache();

}  // namespace crossnest
