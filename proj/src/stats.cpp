#include "crossnest/stats.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "crossnest/walks.hpp"

namespace crossnest {

namespace {

int max_rows(const TableauWalk& w) {
    int m = 0;
    for (const auto& s : w.shapes) m = std::max(m, s.rows());
    return m;
}

int max_cols(const TableauWalk& w) {
    int m = 0;
    for (const auto& s : w.shapes) m = std::max(m, s.cols());
    return m;
}

using Arc = std::pair<int, int>;

// Chain condition on a set of arcs sorted by left endpoint.
bool is_crossing_chain(std::vector<Arc>& arcs, bool enhanced) {
    std::sort(arcs.begin(), arcs.end());
    for (size_t r = 0; r + 1 < arcs.size(); ++r) {
        if (arcs[r].first >= arcs[r + 1].first) return false;
        if (arcs[r].second >= arcs[r + 1].second) return false;
    }
    int middle_left = arcs.back().first;
    int middle_right = arcs.front().second;
    return enhanced ? middle_left <= middle_right : middle_left < middle_right;
}

bool is_nesting_chain(std::vector<Arc>& arcs, bool enhanced) {
    std::sort(arcs.begin(), arcs.end());
    for (size_t r = 0; r + 1 < arcs.size(); ++r) {
        if (arcs[r].first >= arcs[r + 1].first) return false;
        if (arcs[r].second <= arcs[r + 1].second) return false;
    }
    int innermost_left = arcs.back().first;
    int innermost_right = arcs.back().second;
    return enhanced ? innermost_left <= innermost_right : innermost_left < innermost_right;
}

int max_chain(const ArcDiagram& d, bool crossing) {
    int a = (int)d.arcs.size();
    if (a > ORACLE_MAX_ARCS)
        throw std::invalid_argument("oracle: size limit exceeded (" + std::to_string(a) +
                                    " arcs > " + std::to_string(ORACLE_MAX_ARCS) + ")");
    int best = 0;
    for (unsigned mask = 1; mask < (1u << a); ++mask) {
        int k = std::popcount(mask);
        if (k <= best) continue;
        std::vector<Arc> sub;
        for (int i = 0; i < a; ++i)
            if (mask >> i & 1) sub.push_back(d.arcs[i]);
        bool ok = crossing ? is_crossing_chain(sub, d.enhanced)
                           : is_nesting_chain(sub, d.enhanced);
        if (ok) best = k;
    }
    return best;
}

}  // namespace

int crossing_number(const SetPartition& p) { return max_rows(phi(p).walk); }
int nesting_number(const SetPartition& p) { return max_cols(phi(p).walk); }
int enhanced_crossing_number(const SetPartition& p) { return max_rows(phi_bar(p).walk); }
int enhanced_nesting_number(const SetPartition& p) { return max_cols(phi_bar(p).walk); }

StatRecord stat_record(const SetPartition& p) {
    StatRecord r;
    TableauWalk v = phi(p).walk;
    TableauWalk h = phi_bar(p).walk;
    r.cr = max_rows(v);
    r.ne = max_cols(v);
    r.enhanced_cr = max_rows(h);
    r.enhanced_ne = max_cols(h);
    return r;
}

int oracle_crossing_number(const SetPartition& p) { return max_chain(standard_rep(p), true); }
int oracle_nesting_number(const SetPartition& p) { return max_chain(standard_rep(p), false); }
int oracle_enhanced_crossing_number(const SetPartition& p) {
    return max_chain(enhanced_rep(p), true);
}
int oracle_enhanced_nesting_number(const SetPartition& p) {
    return max_chain(enhanced_rep(p), false);
}

StatRecord oracle_stat_record(const SetPartition& p) {
    StatRecord r;
    r.cr = oracle_crossing_number(p);
    r.ne = oracle_nesting_number(p);
    r.enhanced_cr = oracle_enhanced_crossing_number(p);
    r.enhanced_ne = oracle_enhanced_nesting_number(p);
    return r;
}

std::vector<int> alpha_sequence(const SetPartition& p) {
    auto arcs = standard_rep(p).arcs;
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.second < b.second; });
    std::vector<int> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) out.push_back(a.first);
    return out;
}

int ne_r(const SetPartition& p, int r) {
    if (r < 0) throw std::invalid_argument("ne_r: r must be nonnegative");
    Shape s = rsk(alpha_sequence(p)).first.shape();
    Shape c = conjugate(s);
    int total = 0;
    for (int i = 0; i < std::min(r, c.rows()); ++i) total += c.parts[i];
    return total;
}

namespace {

// Max vertices coverable by a union of r cliques of the graph given by
// adjacency bitmasks.
int max_union_of_cliques(const std::vector<unsigned>& adj, int r) {
    int a = (int)adj.size();
    unsigned full = a == 32 ? ~0u : (1u << a) - 1;
    std::vector<char> clique(full + 1, 0);
    clique[0] = 1;
    for (unsigned m = 1; m <= full; ++m) {
        int low = std::countr_zero(m);
        unsigned rest = m & (m - 1);
        clique[m] = clique[rest] && ((adj[low] & rest) == rest);
    }
    std::vector<char> cur(clique.begin(), clique.end());
    for (int step = 1; step < r; ++step) {
        std::vector<char> next(full + 1, 0);
        for (unsigned m = 0; m <= full; ++m) {
            if (cur[m]) { next[m] = 1; continue; }
            // split m into a clique submask and a smaller union
            for (unsigned t = m; t; t = (t - 1) & m) {
                if (clique[t] && cur[m & ~t]) { next[m] = 1; break; }
            }
        }
        cur = std::move(next);
    }
    int best = 0;
    for (unsigned m = 0; m <= full; ++m)
        if (cur[m]) best = std::max(best, std::popcount(m));
    return best;
}

int oracle_union(const SetPartition& p, int r, bool crossing) {
    if (r < 0) throw std::invalid_argument("oracle union: r must be nonnegative");
    if (r == 0) return 0;
    auto arcs = standard_rep(p).arcs;
    int a = (int)arcs.size();
    if (a > ORACLE_UNION_MAX_ARCS)
        throw std::invalid_argument("oracle: size limit exceeded (" + std::to_string(a) +
                                    " arcs > " + std::to_string(ORACLE_UNION_MAX_ARCS) + ")");
    std::vector<unsigned> adj(a, 0);
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < a; ++y) {
            if (x == y) continue;
            std::vector<Arc> pair{arcs[x], arcs[y]};
            bool related = crossing ? is_crossing_chain(pair, false)
                                    : is_nesting_chain(pair, false);
            if (related) adj[x] |= 1u << y;
        }
    return max_union_of_cliques(adj, r);
}

}  // namespace

int oracle_ne_r(const SetPartition& p, int r) { return oracle_union(p, r, false); }
int oracle_cr_r(const SetPartition& p, int r) { return oracle_union(p, r, true); }

namespace {

bool blocks_cross_oriented(const std::vector<int>& b, const std::vector<int>& c) {
    // looks for a < b1 < a2 < b2 alternating, starting in `b`
    size_t i = 0, j = 0;
    int stage = 0;  // how many of the four alternation points were found
    int last = 0;
    while (stage < 4) {
        if (stage % 2 == 0) {
            while (i < b.size() && b[i] <= last) ++i;
            if (i == b.size()) return false;
            last = b[i];
        } else {
            while (j < c.size() && c[j] <= last) ++j;
            if (j == c.size()) return false;
            last = c[j];
        }
        ++stage;
    }
    return true;
}

bool blocks_cross(const std::vector<int>& b, const std::vector<int>& c) {
    return blocks_cross_oriented(b, c) || blocks_cross_oriented(c, b);
}

}  // namespace

int klazar_crossing_number(const SetPartition& p) {
    int k = p.block_count();
    if (k == 0) return 0;
    if (k > KLAZAR_MAX_BLOCKS)
        throw std::invalid_argument("klazar_crossing_number: size limit exceeded (" +
                                    std::to_string(k) + " blocks > " +
                                    std::to_string(KLAZAR_MAX_BLOCKS) + ")");
    std::vector<unsigned> adj(k, 0);
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
            if (blocks_cross(p.blocks[x], p.blocks[y])) {
                adj[x] |= 1u << y;
                adj[y] |= 1u << x;
            }
    int best = 1;
    for (unsigned m = 1; m < (1u << k); ++m) {
        int sz = std::popcount(m);
        if (sz <= best) continue;
        bool ok = true;
        for (unsigned t = m; t && ok; t &= t - 1) {
            int v = std::countr_zero(t);
            if ((adj[v] & m & ~(1u << v)) != (m & ~(1u << v))) ok = false;
        }
        if (ok) best = sz;
    }
    return best;
}

}  // namespace crossnest
