#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/poly.hpp"
#include "crossnest/setpart.hpp"

namespace crossnest {

enum class ObjectKind { Partitions, Matchings };

std::string to_string(ObjectKind k);
ObjectKind object_kind_from_string(const std::string& s);

// Restrict a distribution to fixed endpoint sets. For plain tables S and T
// are the block minima and maxima; for bar tables they are min\max and
// max\min, matching what hesitating walks determine.
struct TableFilter {
    std::set<int> s;
    std::set<int> t;

    auto operator<=>(const TableFilter&) const = default;
};

struct DistributionTable {
    ObjectKind object = ObjectKind::Partitions;
    int n = 0;           // ground set size (2m for matchings)
    bool bar = false;    // enhanced statistics
    std::optional<TableFilter> filter;
    std::map<std::pair<int, int>, BigInt> cells;  // (cr, ne) -> count

    BigInt total() const;
    bool symmetric() const;
};

inline constexpr int DISTRIBUTION_MAX_PARTITION_N = 10;
inline constexpr int DISTRIBUTION_MAX_MATCHING_N = 14;

// Joint (crossing, nesting) distribution; enumeration may be sharded.
// The builder checks the symmetry cells[(i,j)] == cells[(j,i)] unless a
// shard (a partial table) is requested.
DistributionTable distribution(ObjectKind object, int n, bool bar,
                               const std::optional<TableFilter>& filter,
                               int shard = 0, int num_shards = 1);
DistributionTable merge_tables(const std::vector<DistributionTable>& parts);

BigInt bell(int n);
BigInt stirling2(int n, int k);
// Partitions of {1..n} with k distinguished blocks; bnk(n,0) = bell(n).
BigInt bnk(int n, int k);

// Partitions of {1..n} with no k-crossing and no l-nesting
// (nullopt = unbounded).
BigInt ncn(std::optional<int> k, std::optional<int> l, int n);

enum class ChamberStepping { Vacillating, Free };

// Closed walks of the given length from the origin inside the chamber
// a_1 >= a_2 >= ... >= a_{k-1} >= 0 of Z^{k-1}. Vacillating stepping moves
// backward-or-stands on odd steps and forward-or-stands on even steps;
// free stepping moves one unit in any coordinate direction every step.
BigInt chamber_walk_count(int k, int length, ChamberStepping stepping);

// Closed height-bounded Dyck walk count by reflection (heights <= k).
BigInt gk1_reflection(int k, int m);

// Hyperbolic Bessel function I_m(2x) as an exact series in x.
RatSeries bessel_series(int m, int order);
// F_k(x) = det[ I_{i-j}(2x) - I_{i+j}(2x) ] over i,j in {1..k-1}.
RatSeries fk_series(int k, int order);
// f_k(m) = (2m)! [x^{2m}] F_k(x): matchings on [2m] with no k-crossing.
BigInt fk_coefficient(int k, int m);

}  // namespace crossnest
