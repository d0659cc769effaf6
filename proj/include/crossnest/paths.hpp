#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crossnest/setpart.hpp"

namespace crossnest {

enum class PathStep : char { Up = 'U', Down = 'D', Flat = 'F' };

// Lattice path starting at height 0; heights derived from the steps.
struct LatticePath {
    std::vector<PathStep> steps;

    std::vector<int> heights() const;            // length steps+1, heights[0] = 0
    bool nonnegative() const;
    bool closed() const;                         // ends at height 0
    bool is_motzkin() const { return nonnegative() && closed(); }
    bool is_dyck() const;                        // U/D only, nonnegative, closed

    auto operator<=>(const LatticePath&) const = default;
};

std::string format_path(const LatticePath& p);   // "UDF" letters
LatticePath parse_path(const std::string& s);

struct MotzkinProfile {
    LatticePath path;      // 2n steps
    bool motzkin = false;  // P_n(S,T) nonempty exactly when true
};

// Two steps per position i: (F,F) for i in S∩T, (F,U) for S\T, (D,F) for T\S,
// (D,U) otherwise. Never throws on non-Motzkin results; the flag reports it.
MotzkinProfile motzkin_profile(const std::set<int>& S, const std::set<int>& T, int n);

// The unique noncrossing (nonnesting) partition with block minima S and
// maxima T, recovered from the profile path. Requires a Motzkin profile.
SetPartition noncrossing_from_motzkin(const LatticePath& path, const std::set<int>& S,
                                      const std::set<int>& T);
SetPartition nonnesting_from_motzkin(const LatticePath& path, const std::set<int>& S,
                                     const std::set<int>& T);

// Matchings avoiding 2-crossings <-> Dyck paths (walk heights).
LatticePath dyck_from_matching_k2(const SetPartition& matching);
SetPartition matching_from_dyck_k2(const LatticePath& path);

// Matchings avoiding 3-crossings <-> noncrossing pairs of Dyck paths
// (P, Q) = (row1+row2, row1-row2) of the oscillating walk.
std::pair<LatticePath, LatticePath> dyck_pair_from_matching_k3(const SetPartition& matching);
SetPartition matching_from_dyck_pair_k3(const LatticePath& p, const LatticePath& q);

}  // namespace crossnest
