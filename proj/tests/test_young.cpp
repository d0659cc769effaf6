#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/young.hpp"

using namespace crossnest;

namespace {

// Exhaustive SYT count by filling cells in content order.
long long count_syt_brute(const Shape& s) {
    int n = s.size();
    if (n == 0) return 1;
    long long total = 0;
    std::vector<std::vector<int>> rows(s.rows());
    auto fits = [&](int r, int c) {
        if (c != static_cast<int>(rows[r].size())) return false;
        if (c >= s.part(r)) return false;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) return false;
        return true;
    };
    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            ++total;
            return;
        }
        for (int r = 0; r < s.rows(); ++r)
            if (fits(r, static_cast<int>(rows[r].size()))) {
                rows[r].push_back(v);
                place(v + 1);
                rows[r].pop_back();
            }
    };
    place(1);
    return total;
}

std::vector<Shape> shapes_of_size(int n) {
    std::vector<Shape> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(rest - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int lis(const std::vector<int>& w) {
    std::vector<int> best;
    for (int x : w) {
        auto it = std::lower_bound(best.begin(), best.end(), x);
        if (it == best.end())
            best.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(best.size());
}

int lds(const std::vector<int>& w) {
    std::vector<int> neg(w.size());
    std::transform(w.begin(), w.end(), neg.begin(), [](int x) { return -x; });
    return lis(neg);
}

// Largest total length of k disjoint increasing (or decreasing) subsequences,
// by brute force over index subsets.
int greene_union(const std::vector<int>& w, int k, bool increasing) {
    int m = static_cast<int>(w.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) sub.push_back(w[i]);
        int runs = increasing ? lds(sub) : lis(sub);  // chains needed to cover
        if (runs <= k) best = std::max(best, static_cast<int>(sub.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("shapes are canonical and ordered") {
    CHECK(Shape{} == Shape{});
    CHECK(Shape({2, 1}).rows() == 2);
    CHECK(Shape({2, 1}).cols() == 2);
    CHECK(Shape({3, 1}).part(0) == 3);
    CHECK(Shape({3, 1}).part(1) == 1);
    CHECK(Shape({3, 1}).part(5) == 0);
    CHECK(Shape({2, 1}).contains(Shape({1, 1})));
    CHECK_FALSE(Shape({2}).contains(Shape({1, 1})));
    CHECK_THROWS(Shape({1, 2}));
    CHECK(Shape({2, 0}) == Shape({2}));  // trailing zeros stripped
    CHECK_THROWS(Shape({2, -1}));
}

TEST_CASE("conjugation transposes the diagram") {
    CHECK(conjugate(Shape{}) == Shape{});
    CHECK(conjugate(Shape({2, 1})) == Shape({2, 1}));
    CHECK(conjugate(Shape({3, 1})) == Shape({2, 1, 1}));
    for (const Shape& s : shapes_of_size(6)) CHECK(conjugate(conjugate(s)) == s);
}

TEST_CASE("cover lists are lexicographic and mutually inverse") {
    CHECK(up_covers(Shape{}) == std::vector<Shape>{Shape({1})});
    CHECK(down_covers(Shape{}).empty());
    CHECK(up_covers(Shape({2, 1})) ==
          std::vector<Shape>{Shape({3, 1}), Shape({2, 2}), Shape({2, 1, 1})});
    CHECK(down_covers(Shape({2, 1})) == std::vector<Shape>{Shape({1, 1}), Shape({2})});
    for (int n = 0; n <= 6; ++n)
        for (const Shape& s : shapes_of_size(n)) {
            auto ups = up_covers(s);
            CHECK(std::is_sorted(ups.begin(), ups.end(), std::greater<Shape>()));
            auto downs_of_s = down_covers(s);
            CHECK(std::is_sorted(downs_of_s.begin(), downs_of_s.end()));
            for (const Shape& u : ups) {
                CHECK(is_cover(s, u));
                auto downs = down_covers(u);
                CHECK(std::find(downs.begin(), downs.end(), s) != downs.end());
            }
        }
}

TEST_CASE("up then down minus down then up hits each shape once more") {
    for (int n = 0; n <= 6; ++n)
        for (const Shape& s : shapes_of_size(n)) {
            long long up_down = 0, down_up = 0;
            for (const Shape& u : up_covers(s)) {
                auto downs = down_covers(u);
                up_down += std::count(downs.begin(), downs.end(), s);
            }
            for (const Shape& d : down_covers(s)) {
                auto ups = up_covers(d);
                down_up += std::count(ups.begin(), ups.end(), s);
            }
            CHECK(up_down - down_up == 1);
        }
}

TEST_CASE("hook length formula matches exhaustive tableau fillings") {
    CHECK(syt_count(Shape{}) == 1);
    CHECK(syt_count(Shape({2, 1})) == 2);
    CHECK(syt_count(Shape({2, 2})) == 2);
    for (int n = 0; n <= 7; ++n)
        for (const Shape& s : shapes_of_size(n))
            CHECK(syt_count(s) == BigInt(count_syt_brute(s)));
}

TEST_CASE("row insertion golden examples") {
    auto [t1, path1] = row_insert(StandardTableau{}, 5);
    CHECK(t1 == StandardTableau(std::vector<std::vector<int>>{{5}}));
    CHECK(path1 == std::vector<Cell>{Cell{1, 1}});

    auto [t2, path2] = row_insert(StandardTableau({{1, 2}, {3}}), 4);
    CHECK(t2 == StandardTableau({{1, 2, 4}, {3}}));

    auto [t3, path3] = row_insert(StandardTableau({{2, 4}}), 1);
    CHECK(t3 == StandardTableau({{1, 4}, {2}}));
}

TEST_CASE("reverse insertion golden examples") {
    auto [t1, e1] = reverse_insert(StandardTableau({{1, 4}, {2}}), Cell{2, 1});
    CHECK(t1 == StandardTableau({{2, 4}}));
    CHECK(e1 == 1);

    auto [t2, e2] = reverse_insert(StandardTableau(std::vector<std::vector<int>>{{5}}), Cell{1, 1});
    CHECK(t2 == StandardTableau{});
    CHECK(e2 == 5);

    auto [t3, e3] = reverse_insert(StandardTableau({{1, 2, 4}, {3}}), Cell{1, 3});
    CHECK(t3 == StandardTableau({{1, 2}, {3}}));
    CHECK(e3 == 4);
}

TEST_CASE("reverse insertion inverts row insertion on every small tableau") {
    // All SYT with at most 8 cells, via walk over addable corners.
    std::function<void(const StandardTableau&)> visit = [&](const StandardTableau& t) {
        int n = t.shape().size();
        if (n >= 8) return;
        int v = n + 1;  // any value larger than the content works; pick the next
        auto [grown, path] = row_insert(t, v);
        auto [back, ejected] = reverse_insert(grown, path.back());
        CHECK(back == t);
        CHECK(ejected == v);
        visit(grown);
    };
    visit(StandardTableau{});
}

TEST_CASE("insertion tableau shape tracks longest monotone subsequences") {
    std::vector<int> w{1, 2, 3, 4, 5, 6};
    do {
        auto [a, b] = rsk(w);
        CHECK(a.shape() == b.shape());
        CHECK(a.shape().part(0) == lis(w));
        CHECK(conjugate(a.shape()).part(0) == lds(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("partial sums of the insertion shape obey the union bound") {
    std::vector<int> w{1, 2, 3, 4, 5};
    do {
        auto [a, b] = rsk(w);
        Shape s = a.shape();
        Shape sc = conjugate(s);
        for (int k = 1; k <= 5; ++k) {
            int rows = 0, cols = 0;
            for (int i = 0; i < k; ++i) {
                rows += s.part(i);
                cols += sc.part(i);
            }
            CHECK(rows == greene_union(w, k, true));
            CHECK(cols == greene_union(w, k, false));
        }
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("rsk golden examples") {
    auto [a, b] = rsk({2, 3, 1});
    CHECK(a == StandardTableau({{1, 3}, {2}}));
    CHECK(b == StandardTableau({{1, 2}, {3}}));

    auto [ae, be] = rsk({});
    CHECK(ae == StandardTableau{});
    CHECK(be == StandardTableau{});

    auto [ai, bi] = rsk({1, 2, 3});
    CHECK(ai == StandardTableau({{1, 2, 3}}));
    CHECK(ai.shape() == Shape({3}));
}

TEST_CASE("tableau validation rejects malformed rows") {
    CHECK_THROWS(StandardTableau({{2, 1}}));        // row not increasing
    CHECK_THROWS(StandardTableau({{1}, {1}}));      // duplicate entry
    CHECK_THROWS(StandardTableau({{1}, {2, 3}}));   // row lengths increase
    CHECK_THROWS(StandardTableau({{2}, {1}}));      // column not increasing
    CHECK_THROWS(reverse_insert(StandardTableau({{1, 2}}), Cell{1, 1}));  // not a corner
}
