#pragma once

#include <vector>

#include "crossnest/setpart.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

struct StatRecord {
    int cr = 0;
    int ne = 0;
    int enhanced_cr = 0;
    int enhanced_ne = 0;

    auto operator<=>(const StatRecord&) const = default;
};

// Largest k with arcs i_1<...<i_k<j_1<...<j_k (crossing) or
// i_1<...<i_k<j_k<...<j_1 (nesting) in the standard representation;
// enhanced variants relax the middle inequality to <= and use the
// enhanced representation (loops at singletons).
//
// Fast route: maximal row / column count over the walk of phi (phi_bar).
int crossing_number(const SetPartition& p);
int nesting_number(const SetPartition& p);
int enhanced_crossing_number(const SetPartition& p);
int enhanced_nesting_number(const SetPartition& p);
StatRecord stat_record(const SetPartition& p);

// Independent exhaustive search over arc subsets (chain condition checked
// directly). Size-limit error above ORACLE_MAX_ARCS arcs.
inline constexpr int ORACLE_MAX_ARCS = 16;
int oracle_crossing_number(const SetPartition& p);
int oracle_nesting_number(const SetPartition& p);
int oracle_enhanced_crossing_number(const SetPartition& p);
int oracle_enhanced_nesting_number(const SetPartition& p);
StatRecord oracle_stat_record(const SetPartition& p);

// Left endpoints of the standard representation ordered by right endpoint.
std::vector<int> alpha_sequence(const SetPartition& p);

// ne_r: maximal number of arcs in a union of r nestings; computed as the
// sum of the first r columns of the RSK shape of alpha_sequence(p).
int ne_r(const SetPartition& p, int r);

// Exhaustive union-of-r-cliques search in the nesting / crossing graphs.
// Size-limit error above ORACLE_UNION_MAX_ARCS arcs.
inline constexpr int ORACLE_UNION_MAX_ARCS = 12;
int oracle_ne_r(const SetPartition& p, int r);
int oracle_cr_r(const SetPartition& p, int r);

// Largest set of mutually crossing blocks (blocks B, B' cross when some
// a < b < c < d alternates between them). 0 only for the empty partition.
inline constexpr int KLAZAR_MAX_BLOCKS = 12;
int klazar_crossing_number(const SetPartition& p);

}  // namespace crossnest
