#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/paths.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/stats.hpp"

using namespace crossnest;

TEST_CASE("path primitives") {
    LatticePath dyck = parse_path("UUDD");
    CHECK(dyck.is_dyck());
    CHECK(dyck.closed());
    CHECK(dyck.nonnegative());
    CHECK(dyck.heights() == std::vector<int>{0, 1, 2, 1, 0});
    CHECK(format_path(dyck) == "UUDD");

    LatticePath motzkin = parse_path("UFDF");
    CHECK(motzkin.is_motzkin());
    CHECK_FALSE(motzkin.is_dyck());

    CHECK_FALSE(parse_path("UDD").nonnegative());
    CHECK_FALSE(parse_path("UDD").closed());
    CHECK_THROWS(parse_path("UXD"));
    CHECK(parse_path("").closed());
}

TEST_CASE("profile of a valid partition is a Motzkin path") {
    for (int n = 0; n <= 9; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            MotzkinProfile prof = motzkin_profile(min_set(p), max_set(p), p.n);
            CHECK(prof.motzkin);
            CHECK(static_cast<int>(prof.path.steps.size()) == 2 * p.n);
            return true;
        });
}

TEST_CASE("profiles of valid pairs exhaust the case-rule Motzkin paths") {
    // The profile spends one of (F,F), (F,U), (D,F), (D,U) per position, so
    // the image is the Motzkin paths assembled from those four step pairs.
    const std::array<std::pair<PathStep, PathStep>, 4> pairs = {{
        {PathStep::Flat, PathStep::Flat},
        {PathStep::Flat, PathStep::Up},
        {PathStep::Down, PathStep::Flat},
        {PathStep::Down, PathStep::Up},
    }};
    for (int n = 0; n <= 5; ++n) {
        std::set<std::string> profiles;
        for_each_partition(n, [&](const SetPartition& p) {
            profiles.insert(format_path(motzkin_profile(min_set(p), max_set(p), n).path));
            return true;
        });
        std::set<std::string> assembled;
        std::vector<PathStep> steps(2 * n);
        for (long mask = 0; mask < (1L << (2 * n)); ++mask) {
            for (int i = 0; i < n; ++i) {
                auto [first, second] = pairs[(mask >> (2 * i)) & 3];
                steps[2 * i] = first;
                steps[2 * i + 1] = second;
            }
            LatticePath path{steps};
            if (path.is_motzkin()) assembled.insert(format_path(path));
        }
        CHECK(profiles == assembled);
    }
}

TEST_CASE("motzkin flag matches nonemptiness of the filtered class") {
    for (int n = 0; n <= 6; ++n) {
        // Occupancy of every (S,T) pair over the full partition list.
        std::set<std::pair<std::set<int>, std::set<int>>> seen;
        for_each_partition(n, [&](const SetPartition& p) {
            seen.insert({min_set(p), max_set(p)});
            return true;
        });
        std::vector<int> ground(n);
        for (int i = 0; i < n; ++i) ground[i] = i + 1;
        for (int sm = 0; sm < (1 << n); ++sm)
            for (int tm = 0; tm < (1 << n); ++tm) {
                std::set<int> s, t;
                for (int i = 0; i < n; ++i) {
                    if (sm & (1 << i)) s.insert(i + 1);
                    if (tm & (1 << i)) t.insert(i + 1);
                }
                bool nonempty = seen.count({s, t}) > 0;
                CHECK(motzkin_profile(s, t, n).motzkin == nonempty);
            }
    }
}

TEST_CASE("noncrossing and nonnesting recovery golden example") {
    std::set<int> s{1, 2}, t{3, 4};
    MotzkinProfile prof = motzkin_profile(s, t, 4);
    REQUIRE(prof.motzkin);
    CHECK(format_partition(noncrossing_from_motzkin(prof.path, s, t)) == "14-23");
    CHECK(format_partition(nonnesting_from_motzkin(prof.path, s, t)) == "13-24");
}

TEST_CASE("recovery rebuilds the unique extreme partition of its class") {
    for (int n = 0; n <= 8; ++n) {
        BigInt noncrossing_count = 0, nonnesting_count = 0;
        for_each_partition(n, [&](const SetPartition& p) {
            StatRecord r = stat_record(p);
            std::set<int> s = min_set(p), t = max_set(p);
            MotzkinProfile prof = motzkin_profile(s, t, n);
            if (r.cr <= 1) {
                ++noncrossing_count;
                CHECK(noncrossing_from_motzkin(prof.path, s, t) == p);
            }
            if (r.ne <= 1) {
                ++nonnesting_count;
                CHECK(nonnesting_from_motzkin(prof.path, s, t) == p);
            }
            return true;
        });
        CHECK(noncrossing_count == catalan(n));
        CHECK(nonnesting_count == catalan(n));
    }
}

TEST_CASE("two noncrossing matchings embed into Dyck paths") {
    for (int m = 0; m <= 6; ++m) {
        std::set<std::string> images;
        long long domain = 0;
        for_each_matching(m, [&](const SetPartition& match) {
            if (crossing_number(match) > 1) return true;
            ++domain;
            LatticePath path = dyck_from_matching_k2(match);
            CHECK(path.is_dyck());
            CHECK(static_cast<int>(path.steps.size()) == 2 * m);
            CHECK(matching_from_dyck_k2(path) == match);
            images.insert(format_path(path));
            return true;
        });
        CHECK(BigInt(domain) == catalan(m));
        CHECK(BigInt(images.size()) == catalan(m));  // injective onto Dyck paths
    }
    CHECK_THROWS(dyck_from_matching_k2(parse_partition("13-24")));  // has a 2-crossing
}

TEST_CASE("three noncrossing matchings embed into noncrossing Dyck pairs") {
    for (int m = 0; m <= 6; ++m)
        for_each_matching(m, [&](const SetPartition& match) {
            if (crossing_number(match) > 2) return true;
            auto [p, q] = dyck_pair_from_matching_k3(match);
            CHECK(p.is_dyck());
            CHECK(q.is_dyck());
            auto hp = p.heights(), hq = q.heights();
            for (size_t i = 0; i < hp.size(); ++i) CHECK(hp[i] >= hq[i]);
            CHECK(matching_from_dyck_pair_k3(p, q) == match);
            return true;
        });

    SetPartition figure(10, {{1, 8}, {2, 6}, {3, 10}, {4, 5}, {7, 9}});
    auto [p, q] = dyck_pair_from_matching_k3(figure);
    CHECK(format_path(p) == "UUUUDDUDDD");
    CHECK(format_path(q) == "UUDUDDUUDD");

    // A crossing pair of Dyck paths is outside the image and must be refused.
    CHECK_THROWS(matching_from_dyck_pair_k3(parse_path("UDUD"), parse_path("UUDD")));
    // Length mismatch is corrupted input.
    CHECK_THROWS(matching_from_dyck_pair_k3(parse_path("UD"), parse_path("UUDD")));
}
