#include "crossnest/walks.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace crossnest {

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::Vacillating: return "vacillating";
        case WalkKind::Hesitating: return "hesitating";
        case WalkKind::Oscillating: return "oscillating";
    }
    throw std::logic_error("unreachable");
}

WalkKind walk_kind_from_string(const std::string& s) {
    if (s == "vacillating") return WalkKind::Vacillating;
    if (s == "hesitating") return WalkKind::Hesitating;
    if (s == "oscillating") return WalkKind::Oscillating;
    throw std::invalid_argument("unknown walk kind: " + s);
}

namespace {

enum class StepMove { Stand, Add, Remove };

StepMove classify_step(const Shape& from, const Shape& to, int index) {
    if (from == to) return StepMove::Stand;
    if (to.size() == from.size() + 1 && to.contains(from)) return StepMove::Add;
    if (from.size() == to.size() + 1 && from.contains(to)) return StepMove::Remove;
    throw std::invalid_argument("walk: step violation at index " + std::to_string(index) +
                                " (shapes differ by more than one square)");
}

[[noreturn]] void step_violation(int index, const char* what) {
    throw std::invalid_argument("walk: step violation at index " + std::to_string(index) +
                                " (" + what + ")");
}

// The square in which `upper` exceeds `lower`, as a 1-based cell.
Cell added_cell(const Shape& lower, const Shape& upper) {
    for (int r = 0; r < upper.rows(); ++r)
        if (upper.parts[r] != lower.part(r)) return Cell{r + 1, upper.parts[r]};
    throw std::logic_error("added_cell: shapes equal");
}

StandardTableau place_max_entry(const StandardTableau& t, int v, Cell at) {
    StandardTableau out = t;
    if (at.row == (int)out.rows.size() + 1) out.rows.push_back({});
    out.rows[at.row - 1].push_back(v);
    return out;
}

// Remove the cell holding v; v must sit at a removable corner.
StandardTableau remove_entry(const StandardTableau& t, int v) {
    Cell c = t.find_entry(v);
    StandardTableau out = t;
    auto& row = out.rows[c.row - 1];
    if (c.col != (int)row.size() ||
        (c.row < (int)out.rows.size() && (int)out.rows[c.row].size() >= c.col))
        throw std::invalid_argument("remove_entry: entry not at a removable corner");
    row.pop_back();
    if (row.empty()) out.rows.pop_back();
    return out;
}

}  // namespace

void validate_walk(const TableauWalk& w) {
    const auto& s = w.shapes;
    if (s.empty()) throw std::invalid_argument("walk: must contain at least the initial shape");
    if (!s[0].empty()) step_violation(0, "walk must start at the empty shape");
    int len = w.length();
    if ((w.kind == WalkKind::Vacillating || w.kind == WalkKind::Hesitating) && len % 2 != 0)
        throw std::invalid_argument("walk: " + to_string(w.kind) +
                                    " walks have even length, got " + std::to_string(len));
    for (int i = 1; i <= len; ++i) {
        StepMove mv = classify_step(s[i - 1], s[i], i);
        switch (w.kind) {
            case WalkKind::Vacillating:
                if (i % 2 == 1 && mv == StepMove::Add)
                    step_violation(i, "odd steps may only remove or stand");
                if (i % 2 == 0 && mv == StepMove::Remove)
                    step_violation(i, "even steps may only add or stand");
                break;
            case WalkKind::Hesitating: {
                if (i % 2 == 0) {
                    StepMove prev = classify_step(s[i - 2], s[i - 1], i - 1);
                    bool ok = (prev == StepMove::Stand && mv == StepMove::Add) ||
                              (prev == StepMove::Remove && mv == StepMove::Stand) ||
                              (prev == StepMove::Add && mv == StepMove::Remove);
                    if (!ok) step_violation(i, "step pair not one of (stand,add), "
                                               "(remove,stand), (add,remove)");
                }
                break;
            }
            case WalkKind::Oscillating:
                if (mv == StepMove::Stand)
                    step_violation(i, "oscillating steps must add or remove");
                break;
        }
    }
}

bool is_closed(const TableauWalk& w) {
    return !w.shapes.empty() && w.shapes.back().empty();
}

WalkToPartition psi(const TableauWalk& w) {
    if (w.kind != WalkKind::Vacillating)
        throw std::invalid_argument("psi: expects a vacillating walk");
    validate_walk(w);
    int len = w.length();
    int n = len / 2;
    WalkToPartition out;
    out.trace.tableaux.reserve(len + 1);
    out.trace.tableaux.emplace_back();
    ArcDiagram arcs;
    arcs.n = n;
    for (int i = 1; i <= len; ++i) {
        const StandardTableau& prev = out.trace.tableaux.back();
        switch (classify_step(w.shapes[i - 1], w.shapes[i], i)) {
            case StepMove::Stand:
                out.trace.tableaux.push_back(prev);
                break;
            case StepMove::Add: {
                int k = i / 2;  // additions happen at even indices
                out.trace.tableaux.push_back(
                    place_max_entry(prev, k, added_cell(w.shapes[i - 1], w.shapes[i])));
                break;
            }
            case StepMove::Remove: {
                int k = (i + 1) / 2;  // removals happen at odd indices 2k-1
                Cell corner = added_cell(w.shapes[i], w.shapes[i - 1]);
                ReverseInsertResult rev = reverse_insert(prev, corner);
                out.trace.tableaux.push_back(std::move(rev.tableau));
                arcs.arcs.emplace_back(rev.ejected, k);
                out.trace.pair_events.emplace_back(rev.ejected, k);
                break;
            }
        }
    }
    std::sort(arcs.arcs.begin(), arcs.arcs.end());
    out.partition = partition_from_arcs(arcs);
    out.tableau = out.trace.tableaux.back();
    return out;
}

namespace {

struct Endpoints {
    std::vector<int> partner_right;  // partner_right[j] = i if arc (i,j), else 0
    std::vector<int> partner_left;   // partner_left[j] = k if arc (j,k), else 0
};

Endpoints endpoints_of(const ArcDiagram& d) {
    Endpoints e;
    e.partner_right.assign(d.n + 1, 0);
    e.partner_left.assign(d.n + 1, 0);
    for (auto [i, j] : d.arcs) {
        if (i == j) continue;  // loops handled separately by callers
        e.partner_left[i] = j;
        e.partner_right[j] = i;
    }
    return e;
}

PartitionToWalk build_walk(const SetPartition& p, bool enhanced) {
    ArcDiagram d = enhanced ? enhanced_rep(p) : standard_rep(p);
    Endpoints e = endpoints_of(d);
    int n = p.n;
    std::vector<StandardTableau> tabs(2 * n + 1);
    std::vector<std::pair<int, int>> events;
    // tabs[2n] is empty; walk is built right to left
    for (int j = n; j >= 1; --j) {
        int i = e.partner_right[j];
        int k = e.partner_left[j];
        bool loop = enhanced && !i && !k;  // enhanced_rep puts a loop at every singleton
        const StandardTableau& t2j = tabs[2 * j];
        if (i && !k) {  // right endpoint only: stand, then insert i
            tabs[2 * j - 1] = t2j;
            tabs[2 * j - 2] = row_insert(tabs[2 * j - 1], i).tableau;
            events.emplace_back(i, j);
        } else if (!i && k) {  // left endpoint only: remove j, then stand
            tabs[2 * j - 1] = remove_entry(t2j, j);
            tabs[2 * j - 2] = tabs[2 * j - 1];
        } else if (i && k) {  // both: in the enhanced case insert first
            if (enhanced) {
                tabs[2 * j - 1] = row_insert(t2j, i).tableau;
                tabs[2 * j - 2] = remove_entry(tabs[2 * j - 1], j);
            } else {
                tabs[2 * j - 1] = remove_entry(t2j, j);
                tabs[2 * j - 2] = row_insert(tabs[2 * j - 1], i).tableau;
            }
            events.emplace_back(i, j);
        } else if (loop) {  // isolated, enhanced: insert j, then delete it
            tabs[2 * j - 1] = row_insert(t2j, j).tableau;
            tabs[2 * j - 2] = remove_entry(tabs[2 * j - 1], j);
        } else {  // isolated, standard: stand twice
            tabs[2 * j - 1] = t2j;
            tabs[2 * j - 2] = t2j;
        }
    }
    PartitionToWalk out;
    out.walk.kind = enhanced ? WalkKind::Hesitating : WalkKind::Vacillating;
    out.walk.shapes.reserve(2 * n + 1);
    for (const auto& t : tabs) out.walk.shapes.push_back(t.shape());
    std::reverse(events.begin(), events.end());  // creation order of psi
    out.trace.tableaux = std::move(tabs);
    out.trace.pair_events = std::move(events);
    return out;
}

}  // namespace

PartitionToWalk phi(const SetPartition& p) { return build_walk(p, false); }

PartitionToWalk phi_bar(const SetPartition& p) { return build_walk(p, true); }

WalkToPartition psi_bar(const TableauWalk& w) {
    if (w.kind != WalkKind::Hesitating)
        throw std::invalid_argument("psi_bar: expects a hesitating walk");
    validate_walk(w);
    if (!is_closed(w))
        throw std::invalid_argument("psi_bar: walk must end at the empty shape");
    int n = w.length() / 2;
    WalkToPartition out;
    out.trace.tableaux.reserve(2 * n + 1);
    out.trace.tableaux.emplace_back();
    ArcDiagram arcs;
    arcs.n = n;
    arcs.enhanced = true;
    for (int k = 1; k <= n; ++k) {
        const Shape& a = w.shapes[2 * k - 2];
        const Shape& b = w.shapes[2 * k - 1];
        const Shape& c = w.shapes[2 * k];
        StepMove first = classify_step(a, b, 2 * k - 1);
        const StandardTableau& prev = out.trace.tableaux.back();
        if (first == StepMove::Stand) {  // (stand, add)
            out.trace.tableaux.push_back(prev);
            out.trace.tableaux.push_back(place_max_entry(prev, k, added_cell(b, c)));
        } else if (first == StepMove::Remove) {  // (remove, stand)
            ReverseInsertResult rev = reverse_insert(prev, added_cell(b, a));
            arcs.arcs.emplace_back(rev.ejected, k);
            out.trace.pair_events.emplace_back(rev.ejected, k);
            out.trace.tableaux.push_back(rev.tableau);
            out.trace.tableaux.push_back(std::move(rev.tableau));
        } else {  // (add, remove)
            StandardTableau mid = place_max_entry(prev, k, added_cell(a, b));
            out.trace.tableaux.push_back(mid);
            ReverseInsertResult rev = reverse_insert(mid, added_cell(c, b));
            if (rev.ejected == k) {
                arcs.arcs.emplace_back(k, k);  // k entered and left at once: isolated point
            } else {
                arcs.arcs.emplace_back(rev.ejected, k);
                out.trace.pair_events.emplace_back(rev.ejected, k);
            }
            out.trace.tableaux.push_back(std::move(rev.tableau));
        }
    }
    std::sort(arcs.arcs.begin(), arcs.arcs.end());
    out.partition = partition_from_arcs(arcs);
    out.tableau = out.trace.tableaux.back();
    return out;
}

TableauWalk conjugate_walk(const TableauWalk& w) {
    TableauWalk out;
    out.kind = w.kind;
    out.shapes.reserve(w.shapes.size());
    for (const auto& s : w.shapes) out.shapes.push_back(conjugate(s));
    return out;
}

SetPartition conjugate_partition(const SetPartition& p) {
    return psi(conjugate_walk(phi(p).walk)).partition;
}

SetPartition conjugate_partition_enhanced(const SetPartition& p) {
    return psi_bar(conjugate_walk(phi_bar(p).walk)).partition;
}

TableauWalk matching_to_oscillating(const SetPartition& matching) {
    if (!is_complete_matching(matching))
        throw std::invalid_argument("matching_to_oscillating: not a complete matching");
    PartitionToWalk v = phi(matching);
    TableauWalk out;
    out.kind = WalkKind::Oscillating;
    // each element moves exactly once, at its even step
    for (size_t i = 0; i < v.walk.shapes.size(); i += 2) out.shapes.push_back(v.walk.shapes[i]);
    return out;
}

WalkToPartition oscillating_to_matching(const TableauWalk& w) {
    if (w.kind != WalkKind::Oscillating)
        throw std::invalid_argument("oscillating_to_matching: expects an oscillating walk");
    validate_walk(w);
    if (!is_closed(w))
        throw std::invalid_argument("oscillating_to_matching: walk must end at the empty shape");
    int len = w.length();
    WalkToPartition out;
    out.trace.tableaux.emplace_back();
    ArcDiagram arcs;
    arcs.n = len;
    for (int i = 1; i <= len; ++i) {
        const StandardTableau& prev = out.trace.tableaux.back();
        if (classify_step(w.shapes[i - 1], w.shapes[i], i) == StepMove::Add) {
            out.trace.tableaux.push_back(
                place_max_entry(prev, i, added_cell(w.shapes[i - 1], w.shapes[i])));
        } else {
            ReverseInsertResult rev = reverse_insert(prev, added_cell(w.shapes[i], w.shapes[i - 1]));
            arcs.arcs.emplace_back(rev.ejected, i);
            out.trace.pair_events.emplace_back(rev.ejected, i);
            out.trace.tableaux.push_back(std::move(rev.tableau));
        }
    }
    std::sort(arcs.arcs.begin(), arcs.arcs.end());
    out.partition = partition_from_arcs(arcs);
    out.tableau = out.trace.tableaux.back();
    return out;
}

SetPartition permutation_matching(const std::vector<int>& w) {
    int m = (int)w.size();
    std::vector<char> seen(m + 1, 0);
    for (int x : w) {
        if (x < 1 || x > m || seen[x])
            throw std::invalid_argument("permutation_matching: not a permutation of {1..m}");
        seen[x] = 1;
    }
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({w[i - 1], 2 * m - i + 1});
    return SetPartition(2 * m, std::move(blocks));
}

std::pair<StandardTableau, StandardTableau> rsk_via_oscillating(const std::vector<int>& w) {
    int m = (int)w.size();
    TableauWalk o = matching_to_oscillating(permutation_matching(w));
    StandardTableau a, b;
    for (int i = 1; i <= m; ++i)
        a = place_max_entry(a, i, added_cell(o.shapes[i - 1], o.shapes[i]));
    for (int i = 1; i <= m; ++i)
        b = place_max_entry(b, i, added_cell(o.shapes[2 * m - i + 1], o.shapes[2 * m - i]));
    return {std::move(a), std::move(b)};
}

namespace {

std::set<int> stand_positions(const TableauWalk& w, bool odd_steps) {
    if (w.kind != WalkKind::Vacillating)
        throw std::invalid_argument("min/max detection: expects a vacillating walk");
    validate_walk(w);
    std::set<int> out;
    for (int i = 1; 2 * i <= w.length(); ++i) {
        int idx = odd_steps ? 2 * i - 1 : 2 * i;
        if (w.shapes[idx] == w.shapes[idx - 1]) out.insert(i);
    }
    return out;
}

}  // namespace

std::set<int> vacillating_min_set(const TableauWalk& w) { return stand_positions(w, true); }
std::set<int> vacillating_max_set(const TableauWalk& w) { return stand_positions(w, false); }

namespace {

std::set<int> hesitating_pure(const TableauWalk& w, StepMove first_move) {
    if (w.kind != WalkKind::Hesitating)
        throw std::invalid_argument("min/max detection: expects a hesitating walk");
    validate_walk(w);
    std::set<int> out;
    for (int i = 1; 2 * i <= w.length(); ++i)
        if (classify_step(w.shapes[2 * i - 2], w.shapes[2 * i - 1], 2 * i - 1) == first_move)
            out.insert(i);
    return out;
}

}  // namespace

std::set<int> hesitating_min_minus_max(const TableauWalk& w) {
    return hesitating_pure(w, StepMove::Stand);   // (stand, add): pure left endpoint
}

std::set<int> hesitating_max_minus_min(const TableauWalk& w) {
    return hesitating_pure(w, StepMove::Remove);  // (remove, stand): pure right endpoint
}

namespace {

std::mutex walk_cache_mutex;
std::map<std::pair<WalkKind, int>, std::map<Shape, BigInt>> walk_cache;

std::map<Shape, BigInt> compute_distribution(WalkKind kind, int length) {
    std::map<Shape, BigInt> cur;
    cur[Shape{}] = 1;
    auto spread_add = [](const std::map<Shape, BigInt>& from, std::map<Shape, BigInt>& to,
                         bool allow_stand) {
        for (const auto& [s, c] : from) {
            if (allow_stand) to[s] += c;
            for (const Shape& u : up_covers(s)) to[u] += c;
        }
    };
    auto spread_remove = [](const std::map<Shape, BigInt>& from, std::map<Shape, BigInt>& to,
                            bool allow_stand) {
        for (const auto& [s, c] : from) {
            if (allow_stand) to[s] += c;
            for (const Shape& d : down_covers(s)) to[d] += c;
        }
    };
    switch (kind) {
        case WalkKind::Vacillating:
            for (int i = 1; i <= length; ++i) {
                std::map<Shape, BigInt> next;
                if (i % 2 == 1) spread_remove(cur, next, true);
                else spread_add(cur, next, true);
                cur = std::move(next);
            }
            break;
        case WalkKind::Hesitating:
            for (int k = 1; 2 * k <= length; ++k) {
                std::map<Shape, BigInt> next;
                for (const auto& [s, c] : cur) {
                    for (const Shape& u : up_covers(s)) {
                        next[u] += c;  // (stand, add)
                        for (const Shape& d : down_covers(u)) next[d] += c;  // (add, remove)
                    }
                    for (const Shape& d : down_covers(s)) next[d] += c;  // (remove, stand)
                }
                cur = std::move(next);
            }
            break;
        case WalkKind::Oscillating:
            for (int i = 1; i <= length; ++i) {
                std::map<Shape, BigInt> next;
                spread_add(cur, next, false);
                spread_remove(cur, next, false);
                cur = std::move(next);
            }
            break;
    }
    return cur;
}

}  // namespace

std::map<Shape, BigInt> walk_shape_distribution(WalkKind kind, int length) {
    if (length < 0)
        throw std::invalid_argument("walk_shape_distribution: negative length");
    if ((kind == WalkKind::Vacillating || kind == WalkKind::Hesitating) && length % 2 != 0)
        throw std::invalid_argument("walk_shape_distribution: " + to_string(kind) +
                                    " walks have even length");
    {
        std::lock_guard<std::mutex> lock(walk_cache_mutex);
        auto it = walk_cache.find({kind, length});
        if (it != walk_cache.end()) return it->second;
    }
    auto dist = compute_distribution(kind, length);
    std::lock_guard<std::mutex> lock(walk_cache_mutex);
    return walk_cache.emplace(std::make_pair(kind, length), std::move(dist)).first->second;
}

BigInt count_walks(WalkKind kind, const Shape& end_shape, int length) {
    auto dist = walk_shape_distribution(kind, length);
    auto it = dist.find(end_shape);
    return it == dist.end() ? BigInt(0) : it->second;
}

void clear_walk_count_cache() {
    std::lock_guard<std::mutex> lock(walk_cache_mutex);
    walk_cache.clear();
}

}  // namespace crossnest
