#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/setpart.hpp"

using namespace crossnest;

namespace {

const long long BELL[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};

int singleton_count(const SetPartition& p) {
    int s = 0;
    for (const auto& b : p.blocks)
        if (b.size() == 1) ++s;
    return s;
}

}  // namespace

TEST_CASE("partition construction canonicalizes blocks") {
    SetPartition p(7, {{7, 5, 4, 1}, {6, 2}, {3}});
    CHECK(p.blocks == std::vector<std::vector<int>>{{1, 4, 5, 7}, {2, 6}, {3}});
    CHECK(p.block_count() == 3);
    CHECK(p.block_of(6) == 1);
    CHECK_THROWS(SetPartition(3, {{1, 2}}));          // 3 missing
    CHECK_THROWS(SetPartition(3, {{1, 2}, {2, 3}}));  // 2 repeated
    CHECK_THROWS(SetPartition(2, {{1, 2, 3}}));       // 3 out of range
}

TEST_CASE("standard representation golden examples") {
    ArcDiagram d = standard_rep(parse_partition("1457-26-3"));
    CHECK(d.arcs == std::vector<std::pair<int, int>>{{1, 4}, {2, 6}, {4, 5}, {5, 7}});
    CHECK_FALSE(d.enhanced);

    CHECK(standard_rep(SetPartition(3, {{1}, {2}, {3}})).arcs.empty());

    ArcDiagram k = standard_rep(parse_partition("15-246-37"));
    std::set<std::pair<int, int>> arcs(k.arcs.begin(), k.arcs.end());
    CHECK(arcs == std::set<std::pair<int, int>>{{1, 5}, {2, 4}, {4, 6}, {3, 7}});
}

TEST_CASE("enhanced representation adds one loop per singleton") {
    ArcDiagram d = enhanced_rep(parse_partition("1457-26-3"));
    CHECK(d.enhanced);
    CHECK(std::count(d.arcs.begin(), d.arcs.end(), std::make_pair(3, 3)) == 1);
    CHECK(d.arcs.size() == 5);

    CHECK(enhanced_rep(SetPartition(1, {{1}})).arcs ==
          std::vector<std::pair<int, int>>{{1, 1}});
    ArcDiagram e = enhanced_rep(parse_partition("12-3"));
    std::set<std::pair<int, int>> arcs(e.arcs.begin(), e.arcs.end());
    CHECK(arcs == std::set<std::pair<int, int>>{{1, 2}, {3, 3}});
}

TEST_CASE("arc counts follow block structure") {
    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            ArcDiagram std_rep = standard_rep(p);
            CHECK(static_cast<int>(std_rep.arcs.size()) == n - p.block_count());
            int loops = 0;
            for (auto [a, b] : enhanced_rep(p).arcs)
                if (a == b) ++loops;
            CHECK(loops == singleton_count(p));

            // Standard arcs form vertex-disjoint chains: each vertex opens at
            // most one arc and closes at most one arc.
            std::map<int, int> opens, closes;
            for (auto [a, b] : std_rep.arcs) {
                CHECK(a < b);
                CHECK(++opens[a] <= 1);
                CHECK(++closes[b] <= 1);
            }
            return true;
        });
}

TEST_CASE("min and max sets match the block extremes") {
    SetPartition p = parse_partition("135-26-4");
    CHECK(min_set(p) == std::set<int>{1, 2, 4});
    CHECK(max_set(p) == std::set<int>{4, 5, 6});

    SetPartition singles(4, {{1}, {2}, {3}, {4}});
    CHECK(min_set(singles) == std::set<int>{1, 2, 3, 4});
    CHECK(max_set(singles) == std::set<int>{1, 2, 3, 4});

    SetPartition m(4, {{1, 2}, {3, 4}});
    CHECK(min_set(m) == std::set<int>{1, 3});
    CHECK(max_set(m) == std::set<int>{2, 4});
}

TEST_CASE("complete matchings are exactly the disjoint min max covers") {
    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            std::set<int> mins = min_set(p), maxs = max_set(p);
            std::set<int> both;
            std::set_union(mins.begin(), mins.end(), maxs.begin(), maxs.end(),
                           std::inserter(both, both.end()));
            std::set<int> meet;
            std::set_intersection(mins.begin(), mins.end(), maxs.begin(), maxs.end(),
                                  std::inserter(meet, meet.end()));
            bool criterion = static_cast<int>(both.size()) == p.n && meet.empty();
            CHECK(is_complete_matching(p) == criterion);
            return true;
        });
}

TEST_CASE("partition streams count Bell numbers") {
    for (int n = 0; n <= 9; ++n) {
        long long seen = 0;
        std::set<SetPartition> distinct;
        for_each_partition(n, [&](const SetPartition& p) {
            ++seen;
            if (n <= 5) distinct.insert(p);
            return true;
        });
        CHECK(seen == BELL[n]);
        if (n <= 5) CHECK(static_cast<long long>(distinct.size()) == BELL[n]);
    }
    CHECK(all_partitions(3).size() == 5);
    CHECK(all_partitions(0).size() == 1);
}

TEST_CASE("matching streams count double factorials") {
    CHECK(all_matchings(1) == std::vector<SetPartition>{SetPartition(2, {{1, 2}})});
    CHECK(all_matchings(3).size() == 15);
    std::set<SetPartition> two = {parse_partition("12-34"), parse_partition("13-24"),
                                  parse_partition("14-23")};
    auto got = all_matchings(2);
    CHECK(std::set<SetPartition>(got.begin(), got.end()) == two);
    for (int m = 0; m <= 6; ++m) {
        long long seen = 0;
        for_each_matching(m, [&](const SetPartition& p) {
            CHECK(is_complete_matching(p));
            ++seen;
            return true;
        });
        CHECK(BigInt(seen) == double_factorial_odd(m));
    }
}

TEST_CASE("sharded enumeration partitions the stream") {
    for (int shards : {2, 3, 5}) {
        std::vector<SetPartition> merged;
        for (int s = 0; s < shards; ++s)
            for_each_partition(
                6,
                [&](const SetPartition& p) {
                    merged.push_back(p);
                    return true;
                },
                s, shards);
        CHECK(static_cast<long long>(merged.size()) == BELL[6]);
        std::set<SetPartition> distinct(merged.begin(), merged.end());
        CHECK(distinct.size() == merged.size());
    }
}

TEST_CASE("text form round trips in both notations") {
    CHECK(format_partition(parse_partition("1457-26-3")) == "1457-26-3");
    CHECK(parse_partition("1457-26-3") ==
          SetPartition(7, {{1, 4, 5, 7}, {2, 6}, {3}}));
    CHECK(parse_partition("1") == SetPartition(1, {{1}}));
    for_each_partition(6, [&](const SetPartition& p) {
        CHECK(parse_partition(format_partition(p)) == p);
        return true;
    });
    SetPartition wide(11, {{1, 10, 11}, {2, 3, 4, 5, 6, 7, 8, 9}});
    std::string text = format_partition(wide);
    CHECK(text.find('[') != std::string::npos);
    CHECK(parse_partition(text) == wide);
    CHECK_THROWS(parse_partition(""));
    CHECK_THROWS(parse_partition("12--3"));
    CHECK_THROWS(parse_partition("1x2"));
}
