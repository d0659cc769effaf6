#include <doctest.h>

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <vector>

#include "crossnest/render.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

using namespace crossnest;

namespace {

TableauWalk vac(const std::string& text) { return parse_walk(WalkKind::Vacillating, text); }
TableauWalk hes(const std::string& text) { return parse_walk(WalkKind::Hesitating, text); }

// Every closed walk of the given kind and length, by exhaustive step choice.
std::vector<TableauWalk> all_closed_walks(WalkKind kind, int length) {
    std::vector<TableauWalk> out;
    std::vector<Shape> shapes{Shape{}};
    std::function<void(int)> extend = [&](int step) {
        if (step == length) {
            if (shapes.back().empty()) {
                TableauWalk w{kind, shapes};
                validate_walk(w);
                out.push_back(w);
            }
            return;
        }
        const Shape cur = shapes.back();  // copy: push_back below may reallocate
        std::vector<Shape> nexts;
        bool can_stand = kind != WalkKind::Oscillating;
        bool first_half = step % 2 == 0;
        if (kind == WalkKind::Oscillating) {
            nexts = up_covers(cur);
            for (const Shape& d : down_covers(cur)) nexts.push_back(d);
        } else if (kind == WalkKind::Vacillating) {
            nexts = first_half ? down_covers(cur) : up_covers(cur);
        } else {  // hesitating: legal step pairs are checked by validate_walk
            nexts = up_covers(cur);
            for (const Shape& d : down_covers(cur)) nexts.push_back(d);
            // stand handled below; pair legality enforced at the pair boundary
        }
        if (can_stand) nexts.push_back(cur);
        for (const Shape& nxt : nexts) {
            if (kind == WalkKind::Hesitating && !first_half) {
                // (do nothing, do nothing) is not a hesitating step pair, and
                // the pair must be one of (stand,add), (remove,stand), (add,remove).
                const Shape& prev = shapes[shapes.size() - 2];
                const Shape& mid = cur;
                bool stand_add = mid == prev && is_cover(mid, nxt);
                bool remove_stand = is_cover(mid, prev) && nxt == mid;
                bool add_remove = is_cover(prev, mid) && is_cover(nxt, mid);
                if (!(stand_add || remove_stand || add_remove)) continue;
            }
            shapes.push_back(nxt);
            extend(step + 1);
            shapes.pop_back();
        }
    };
    extend(0);
    std::sort(out.begin(), out.end(),
              [](const TableauWalk& a, const TableauWalk& b) { return a.shapes < b.shapes; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TableauWalk& a, const TableauWalk& b) {
                              return a.shapes == b.shapes;
                          }),
              out.end());
    return out;
}

TableauWalk drop_stand_steps(const TableauWalk& w) {
    std::vector<Shape> shapes{w.shapes.front()};
    for (size_t i = 1; i < w.shapes.size(); ++i)
        if (w.shapes[i] != w.shapes[i - 1]) shapes.push_back(w.shapes[i]);
    return TableauWalk{WalkKind::Oscillating, shapes};
}

}  // namespace

TEST_CASE("walk validation accepts the worked examples and rejects bad steps") {
    CHECK_NOTHROW(validate_walk(vac("0,0,1,1,11,11,11,1,2,1,11,1,1,0,0")));
    CHECK_NOTHROW(validate_walk(vac("0,0,0")));
    CHECK_NOTHROW(validate_walk(vac("0,0,1")));    // open walks are fine
    CHECK_THROWS(validate_walk(vac("0,0")));       // length counts steps, must be even
    CHECK_THROWS(validate_walk(vac("0,1,0")));     // odd steps cannot add
    CHECK_THROWS(validate_walk(vac("0,0,1,1,0"))); // even steps cannot remove
    CHECK_THROWS(validate_walk(hes("0,0,0")));     // no (stand, stand) pair
    CHECK_NOTHROW(validate_walk(hes("0,0,1,1,11,21,11,21,2,21,11,1,1,0,0")));
    CHECK_NOTHROW(validate_walk(
        TableauWalk{WalkKind::Oscillating, {Shape{}, Shape({1}), Shape{}}}));
    CHECK_THROWS(validate_walk(
        TableauWalk{WalkKind::Oscillating, {Shape{}, Shape{}}}));  // no stand
}

TEST_CASE("psi golden examples") {
    WalkToPartition r = psi(vac("0,0,1,1,2,2,2,2,21,21,211,21,21,11,21"));
    CHECK(format_partition(r.partition) == "1-26-3-47-5");
    CHECK(r.tableau == StandardTableau({{1, 7}, {5}}));

    WalkToPartition all_empty = psi(vac("0,0,0,0,0,0,0,0,0"));
    CHECK(all_empty.partition == SetPartition(4, {{1}, {2}, {3}, {4}}));
    CHECK(all_empty.tableau == StandardTableau{});

    // Tracing the three rules by hand: add 1, eject 1 for the arc (1,2),
    // add 2, eject 2 for the arc (2,3); one block 123.
    WalkToPartition chain = psi(vac("0,0,1,0,1,0,0"));
    CHECK(format_partition(chain.partition) == "123");
}

TEST_CASE("phi golden examples") {
    CHECK(format_walk(phi(parse_partition("1457-26-3")).walk) ==
          "0,0,1,1,11,11,11,1,2,1,11,1,1,0,0");
    CHECK(format_walk(phi(SetPartition(2, {{1}, {2}})).walk) == "0,0,0,0,0");

    TableauWalk crossed = phi(parse_partition("13-24")).walk;
    int max_rows = 0, max_cols = 0;
    for (const Shape& s : crossed.shapes) {
        max_rows = std::max(max_rows, s.rows());
        max_cols = std::max(max_cols, s.cols());
    }
    CHECK(max_rows == 2);
    CHECK(max_cols == 1);

    CHECK(format_walk(phi(parse_partition("13-2")).walk) == "0,0,1,1,1,0,0");
}

TEST_CASE("phi bar golden examples") {
    CHECK(format_walk(phi_bar(parse_partition("1457-26-3")).walk) ==
          "0,0,1,1,11,21,11,21,2,21,11,1,1,0,0");
    CHECK(format_walk(phi_bar(SetPartition(1, {{1}})).walk) == "0,1,0");
}

TEST_CASE("closed walks of both parities round trip through the bijections") {
    for (int length = 0; length <= 12; length += 2) {
        auto walks = all_closed_walks(WalkKind::Vacillating, length);
        CHECK(BigInt(walks.size()) == count_walks(WalkKind::Vacillating, Shape{}, length));
        for (const TableauWalk& w : walks) {
            WalkToPartition r = psi(w);
            CHECK(phi(r.partition).walk.shapes == w.shapes);
        }
    }
    for (int length = 0; length <= 16; length += 2) {
        auto walks = all_closed_walks(WalkKind::Hesitating, length);
        CHECK(BigInt(walks.size()) == count_walks(WalkKind::Hesitating, Shape{}, length));
        if (length > 12) continue;  // round trip bound; counts checked above
        for (const TableauWalk& w : walks) {
            WalkToPartition r = psi_bar(w);
            CHECK(phi_bar(r.partition).walk.shapes == w.shapes);
        }
    }
}

TEST_CASE("walk positions reveal block minima and maxima") {
    for (int n = 0; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            TableauWalk w = phi(p).walk;
            CHECK(vacillating_min_set(w) == min_set(p));
            CHECK(vacillating_max_set(w) == max_set(p));
            return true;
        });
    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            TableauWalk w = phi_bar(p).walk;
            std::set<int> mins = min_set(p), maxs = max_set(p);
            std::set<int> min_only, max_only;
            std::set_difference(mins.begin(), mins.end(), maxs.begin(), maxs.end(),
                                std::inserter(min_only, min_only.end()));
            std::set_difference(maxs.begin(), maxs.end(), mins.begin(), mins.end(),
                                std::inserter(max_only, max_only.end()));
            CHECK(hesitating_min_minus_max(w) == min_only);
            CHECK(hesitating_max_minus_min(w) == max_only);
            return true;
        });
}

TEST_CASE("conjugating the walk swaps the statistics and keeps the extremes") {
    SetPartition crossed = parse_partition("13-24");
    SetPartition nested = psi(conjugate_walk(phi(crossed).walk)).partition;
    CHECK(format_partition(nested) == "14-23");

    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            TableauWalk w = phi(p).walk;
            TableauWalk cw = conjugate_walk(w);
            CHECK(conjugate_walk(cw).shapes == w.shapes);
            SetPartition q = conjugate_partition(p);
            CHECK(min_set(q) == min_set(p));
            CHECK(max_set(q) == max_set(p));
            CHECK(conjugate_partition(q) == p);
            return true;
        });
}

TEST_CASE("oscillating walks are vacillating walks without the pauses") {
    for (int m = 0; m <= 5; ++m)
        for_each_matching(m, [&](const SetPartition& match) {
            TableauWalk direct = matching_to_oscillating(match);
            TableauWalk squeezed = drop_stand_steps(phi(match).walk);
            CHECK(direct.shapes == squeezed.shapes);
            return true;
        });
    CHECK(format_walk(matching_to_oscillating(parse_partition("12"))) == "0,1,0");
    CHECK_THROWS(matching_to_oscillating(parse_partition("123")));
}

TEST_CASE("figure walk of the matching example") {
    SetPartition match(10, {{1, 8}, {2, 6}, {3, 10}, {4, 5}, {7, 9}});
    TableauWalk w = matching_to_oscillating(match);
    CHECK(format_walk(w) == "0,1,2,21,31,21,11,21,2,1,0");
    WalkToPartition back = oscillating_to_matching(w);
    CHECK(back.partition == match);
}

TEST_CASE("permutation embedding reproduces rsk") {
    SetPartition mw = permutation_matching({2, 3, 1});
    std::set<std::pair<int, int>> arcs;
    for (auto [a, b] : standard_rep(mw).arcs) arcs.insert({a, b});
    CHECK(arcs == std::set<std::pair<int, int>>{{2, 6}, {3, 5}, {1, 4}});
    CHECK(format_walk(matching_to_oscillating(mw)) == "0,1,11,21,2,1,0");

    auto [a231, b231] = rsk_via_oscillating({2, 3, 1});
    CHECK(a231 == StandardTableau({{1, 3}, {2}}));
    CHECK(b231 == StandardTableau({{1, 2}, {3}}));

    CHECK(permutation_matching({1, 2}) == SetPartition(4, {{1, 4}, {2, 3}}));
    CHECK(permutation_matching({2, 1}) == SetPartition(4, {{2, 4}, {1, 3}}));

    auto [a1, b1] = rsk_via_oscillating({1});
    CHECK(a1 == StandardTableau(std::vector<std::vector<int>>{{1}}));
    CHECK(b1 == StandardTableau(std::vector<std::vector<int>>{{1}}));

    std::vector<int> w{1, 2, 3, 4};
    do {
        CHECK(rsk_via_oscillating(w) == rsk(w));
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK_THROWS(permutation_matching({1, 3}));
}

TEST_CASE("walk counts match their golden values and the exhaustive generator") {
    CHECK(count_walks(WalkKind::Vacillating, Shape{}, 6) == 5);
    CHECK(count_walks(WalkKind::Vacillating, Shape({1}), 4) == 3);
    CHECK(count_walks(WalkKind::Hesitating, Shape{}, 6) == 5);
    CHECK(count_walks(WalkKind::Oscillating, Shape{}, 6) == 15);

    for (WalkKind kind :
         {WalkKind::Vacillating, WalkKind::Hesitating, WalkKind::Oscillating}) {
        int step = kind == WalkKind::Oscillating ? 1 : 2;
        for (int length = 0; length <= 8; length += step) {
            auto dist = walk_shape_distribution(kind, length);
            auto closed = all_closed_walks(kind, length);
            auto it = dist.find(Shape{});
            CHECK((it == dist.end() ? BigInt(0) : it->second) == BigInt(closed.size()));
        }
    }

    CHECK_THROWS(count_walks(WalkKind::Vacillating, Shape{}, 3));
    CHECK_THROWS(count_walks(WalkKind::Hesitating, Shape{}, -2));
    CHECK(count_walks(WalkKind::Oscillating, Shape({1}), 3) == 3);
}

TEST_CASE("concurrent counting sees one consistent memo") {
    clear_walk_count_cache();
    std::vector<std::future<BigInt>> jobs;
    for (int i = 0; i < 8; ++i)
        jobs.push_back(std::async(std::launch::async, [] {
            return count_walks(WalkKind::Vacillating, Shape{}, 16);
        }));
    for (auto& job : jobs) CHECK(job.get() == 4140);  // Bell(8)
}

TEST_CASE("general shape walks agree between the two step disciplines") {
    for (const Shape& s : {Shape{}, Shape({1}), Shape({2}), Shape({1, 1}), Shape({2, 1})})
        for (int n = 0; n <= 5; ++n)
            CHECK(count_walks(WalkKind::Hesitating, s, 2 * n) ==
                  count_walks(WalkKind::Vacillating, s, 2 * n));
}
