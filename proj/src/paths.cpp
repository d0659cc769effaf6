#include "crossnest/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

std::vector<int> LatticePath::heights() const {
    std::vector<int> h(steps.size() + 1, 0);
    for (size_t i = 0; i < steps.size(); ++i) {
        int d = steps[i] == PathStep::Up ? 1 : steps[i] == PathStep::Down ? -1 : 0;
        h[i + 1] = h[i] + d;
    }
    return h;
}

bool LatticePath::nonnegative() const {
    int h = 0;
    for (PathStep s : steps) {
        h += s == PathStep::Up ? 1 : s == PathStep::Down ? -1 : 0;
        if (h < 0) return false;
    }
    return true;
}

bool LatticePath::closed() const {
    int h = 0;
    for (PathStep s : steps) h += s == PathStep::Up ? 1 : s == PathStep::Down ? -1 : 0;
    return h == 0;
}

bool LatticePath::is_dyck() const {
    for (PathStep s : steps)
        if (s == PathStep::Flat) return false;
    return nonnegative() && closed();
}

std::string format_path(const LatticePath& p) {
    std::string out;
    out.reserve(p.steps.size());
    for (PathStep s : p.steps) out += (char)s;
    return out;
}

LatticePath parse_path(const std::string& s) {
    LatticePath p;
    p.steps.reserve(s.size());
    for (char c : s) {
        if (c == 'U') p.steps.push_back(PathStep::Up);
        else if (c == 'D') p.steps.push_back(PathStep::Down);
        else if (c == 'F') p.steps.push_back(PathStep::Flat);
        else throw std::invalid_argument("parse_path: expected U, D or F");
    }
    return p;
}

namespace {

void check_subset(const std::set<int>& s, int n, const char* name) {
    for (int x : s)
        if (x < 1 || x > n)
            throw std::invalid_argument(std::string("motzkin_profile: ") + name +
                                        " must be a subset of {1..n}");
}

}  // namespace

MotzkinProfile motzkin_profile(const std::set<int>& S, const std::set<int>& T, int n) {
    if (n < 0) throw std::invalid_argument("motzkin_profile: n must be nonnegative");
    check_subset(S, n, "S");
    check_subset(T, n, "T");
    MotzkinProfile out;
    out.path.steps.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
        bool in_s = S.count(i), in_t = T.count(i);
        if (in_s && in_t) {
            out.path.steps.push_back(PathStep::Flat);
            out.path.steps.push_back(PathStep::Flat);
        } else if (in_s) {
            out.path.steps.push_back(PathStep::Flat);
            out.path.steps.push_back(PathStep::Up);
        } else if (in_t) {
            out.path.steps.push_back(PathStep::Down);
            out.path.steps.push_back(PathStep::Flat);
        } else {
            out.path.steps.push_back(PathStep::Down);
            out.path.steps.push_back(PathStep::Up);
        }
    }
    out.motzkin = out.path.is_motzkin();
    return out;
}

namespace {

struct RecoverySets {
    std::vector<int> a;  // [n] \ T: left endpoint candidates
    std::vector<int> b;  // [n] \ S: right endpoint candidates
    std::vector<int> heights;
    int n = 0;
};

RecoverySets recovery_sets(const LatticePath& path, const std::set<int>& S,
                           const std::set<int>& T) {
    if (path.steps.size() % 2 != 0)
        throw std::invalid_argument("recovery: profile path must have even length");
    RecoverySets r;
    r.n = (int)path.steps.size() / 2;
    MotzkinProfile expect = motzkin_profile(S, T, r.n);
    if (expect.path != path)
        throw std::invalid_argument("recovery: path is not the profile of (S, T)");
    if (!expect.motzkin)
        throw std::invalid_argument("recovery: profile is not a Motzkin path (empty class)");
    for (int i = 1; i <= r.n; ++i) {
        if (!T.count(i)) r.a.push_back(i);
        if (!S.count(i)) r.b.push_back(i);
    }
    r.heights = path.heights();
    return r;
}

}  // namespace

SetPartition noncrossing_from_motzkin(const LatticePath& path, const std::set<int>& S,
                                      const std::set<int>& T) {
    RecoverySets r = recovery_sets(path, S, T);
    ArcDiagram d;
    d.n = r.n;
    for (int j : r.b) {
        int pick = 0;
        for (int i : r.a) {
            if (i >= j) break;
            if (r.heights[2 * i] == r.heights[2 * j - 2]) pick = i;
        }
        if (!pick)
            throw std::invalid_argument("noncrossing_from_motzkin: no matching left endpoint");
        d.arcs.emplace_back(pick, j);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return partition_from_arcs(d);
}

SetPartition nonnesting_from_motzkin(const LatticePath& path, const std::set<int>& S,
                                     const std::set<int>& T) {
    RecoverySets r = recovery_sets(path, S, T);
    ArcDiagram d;
    d.n = r.n;
    for (size_t k = 0; k < r.b.size(); ++k) d.arcs.emplace_back(r.a[k], r.b[k]);
    std::sort(d.arcs.begin(), d.arcs.end());
    return partition_from_arcs(d);
}

LatticePath dyck_from_matching_k2(const SetPartition& matching) {
    TableauWalk w = matching_to_oscillating(matching);
    LatticePath out;
    for (int i = 1; i <= w.length(); ++i) {
        if (w.shapes[i].rows() > 1)
            throw std::invalid_argument("dyck_from_matching_k2: matching has a 2-crossing");
        out.steps.push_back(w.shapes[i].size() > w.shapes[i - 1].size() ? PathStep::Up
                                                                        : PathStep::Down);
    }
    return out;
}

SetPartition matching_from_dyck_k2(const LatticePath& path) {
    if (!path.is_dyck())
        throw std::invalid_argument("matching_from_dyck_k2: not a Dyck path");
    TableauWalk w;
    w.kind = WalkKind::Oscillating;
    for (int h : path.heights())
        w.shapes.push_back(h == 0 ? Shape{} : Shape({h}));
    return oscillating_to_matching(w).partition;
}

std::pair<LatticePath, LatticePath> dyck_pair_from_matching_k3(const SetPartition& matching) {
    TableauWalk w = matching_to_oscillating(matching);
    LatticePath p, q;
    for (int i = 1; i <= w.length(); ++i) {
        if (w.shapes[i].rows() > 2)
            throw std::invalid_argument("dyck_pair_from_matching_k3: matching has a 3-crossing");
        int x0 = w.shapes[i - 1].part(0), y0 = w.shapes[i - 1].part(1);
        int x1 = w.shapes[i].part(0), y1 = w.shapes[i].part(1);
        p.steps.push_back(x1 + y1 > x0 + y0 ? PathStep::Up : PathStep::Down);
        q.steps.push_back(x1 - y1 > x0 - y0 ? PathStep::Up : PathStep::Down);
    }
    return {std::move(p), std::move(q)};
}

SetPartition matching_from_dyck_pair_k3(const LatticePath& p, const LatticePath& q) {
    if (!p.is_dyck() || !q.is_dyck())
        throw std::invalid_argument("matching_from_dyck_pair_k3: both paths must be Dyck");
    if (p.steps.size() != q.steps.size())
        throw std::invalid_argument("matching_from_dyck_pair_k3: length mismatch");
    std::vector<int> hp = p.heights(), hq = q.heights();
    TableauWalk w;
    w.kind = WalkKind::Oscillating;
    for (size_t i = 0; i < hp.size(); ++i) {
        if ((hp[i] + hq[i]) % 2 != 0)
            throw std::invalid_argument("matching_from_dyck_pair_k3: parity mismatch at index " +
                                        std::to_string(i));
        if (hp[i] < hq[i])
            throw std::invalid_argument("matching_from_dyck_pair_k3: paths cross at index " +
                                        std::to_string(i));
        int x = (hp[i] + hq[i]) / 2, y = (hp[i] - hq[i]) / 2;
        std::vector<int> parts;
        if (x > 0) parts.push_back(x);
        if (y > 0) parts.push_back(y);
        w.shapes.push_back(Shape(std::move(parts)));
    }
    return oscillating_to_matching(w).partition;
}

}  // namespace crossnest
