#include "crossnest/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "crossnest/counting.hpp"
#include "crossnest/numeric.hpp"
#include "crossnest/paths.hpp"
#include "crossnest/render.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/stats.hpp"
#include "crossnest/transfer.hpp"
#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            detail = msg;
        }
    }
    template <class A, class B>
    void eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) fail(what);
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

SuiteResult finish(const std::string& name, const Checker& c,
                   std::chrono::steady_clock::time_point start) {
    SuiteResult r;
    r.name = name;
    r.passed = c.ok;
    r.detail = c.detail;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

std::set<int> minus(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    for (int x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

bool table_symmetric(const std::map<std::pair<int, int>, BigInt>& cells) {
    for (const auto& [cell, count] : cells) {
        auto it = cells.find({cell.second, cell.first});
        if (it == cells.end() || it->second != count) return false;
    }
    return true;
}

}  // namespace

SuiteResult verify_golden_examples() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    SetPartition p = parse_partition("1457-26-3");
    c.eq(format_walk(phi(p).walk), "0,0,1,1,11,11,11,1,2,1,11,1,1,0,0",
         "vacillating walk of 1457-26-3");

    TableauWalk w =
        parse_walk(WalkKind::Vacillating, "0,0,1,1,2,2,2,2,21,21,211,21,21,11,21");
    WalkToPartition back = psi(w);
    c.eq(format_partition(back.partition), "1-26-3-47-5", "partition from the open walk");
    c.eq(back.tableau, StandardTableau({{1, 7}, {5}}), "tableau from the open walk");

    c.eq(format_walk(phi_bar(p).walk), "0,0,1,1,11,21,11,21,2,21,11,1,1,0,0",
         "hesitating walk of 1457-26-3");

    std::vector<int> w231{2, 3, 1};
    SetPartition mw = permutation_matching(w231);
    std::vector<std::pair<int, int>> arcs{{1, 4}, {2, 6}, {3, 5}};
    c.eq(standard_rep(mw).arcs, arcs, "matching of the permutation 231");
    c.eq(format_walk(matching_to_oscillating(mw)), "0,1,11,21,2,1,0",
         "oscillating walk of the permutation matching");
    auto [a, b] = rsk_via_oscillating(w231);
    c.eq(a, StandardTableau({{1, 3}, {2}}), "insertion tableau of 231");
    c.eq(b, StandardTableau({{1, 2}, {3}}), "recording tableau of 231");

    return finish("golden-examples", c, start);
}

SuiteResult verify_round_trips() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    for_each_partition(9, [&](const SetPartition& p) {
        if (psi(phi(p).walk).partition != p) {
            c.fail("vacillating round trip broke at " + format_partition(p));
            return false;
        }
        return true;
    });

    for_each_partition(8, [&](const SetPartition& p) {
        if (psi_bar(phi_bar(p).walk).partition != p) {
            c.fail("hesitating round trip broke at " + format_partition(p));
            return false;
        }
        return true;
    });

    for_each_matching(6, [&](const SetPartition& m) {
        if (oscillating_to_matching(matching_to_oscillating(m)).partition != m) {
            c.fail("oscillating round trip broke at " + format_partition(m));
            return false;
        }
        return true;
    });

    return finish("round-trips", c, start);
}

SuiteResult verify_stats_oracle() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    for (int n = 0; n <= 8 && c.ok; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            StatRecord fast = stat_record(p);
            StatRecord slow = oracle_stat_record(p);
            if (fast != slow) {
                c.fail("walk statistics disagree with search at " + format_partition(p));
                return false;
            }
            return true;
        });

    return finish("stats-oracle", c, start);
}

SuiteResult verify_symmetric_tables() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    using Key = std::pair<std::set<int>, std::set<int>>;
    for (int n = 0; n <= 8 && c.ok; ++n) {
        std::map<Key, std::map<std::pair<int, int>, BigInt>> tables;
        for_each_partition(n, [&](const SetPartition& p) {
            int cr = crossing_number(p), ne = nesting_number(p);
            tables[{min_set(p), max_set(p)}][{cr, ne}] += 1;

            SetPartition q = conjugate_partition(p);
            if (crossing_number(q) != ne || nesting_number(q) != cr) {
                c.fail("conjugation failed to swap statistics at " + format_partition(p));
                return false;
            }
            if (min_set(q) != min_set(p) || max_set(q) != max_set(p)) {
                c.fail("conjugation moved the endpoint sets at " + format_partition(p));
                return false;
            }
            if (conjugate_partition(q) != p) {
                c.fail("conjugation is not an involution at " + format_partition(p));
                return false;
            }
            return true;
        });
        for (const auto& [key, cells] : tables)
            if (!table_symmetric(cells)) {
                c.fail("asymmetric filtered table at n=" + std::to_string(n) +
                       " S=" + format_set(key.first) + " T=" + format_set(key.second));
                break;
            }
    }

    for (int m = 1; m <= 6 && c.ok; ++m) {
        std::map<Key, std::map<std::pair<int, int>, BigInt>> tables;
        for_each_matching(m, [&](const SetPartition& p) {
            tables[{min_set(p), max_set(p)}][{crossing_number(p), nesting_number(p)}] += 1;
            return true;
        });
        for (const auto& [key, cells] : tables)
            if (!table_symmetric(cells)) {
                c.fail("asymmetric matching table at 2m=" + std::to_string(2 * m));
                break;
            }
    }

    return finish("symmetric-tables", c, start);
}

SuiteResult verify_enhanced_tables() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    using Key = std::pair<std::set<int>, std::set<int>>;
    for (int n = 0; n <= 7 && c.ok; ++n) {
        std::map<Key, std::map<std::pair<int, int>, BigInt>> tables;
        for_each_partition(n, [&](const SetPartition& p) {
            std::set<int> mins = min_set(p), maxs = max_set(p);
            Key key{minus(mins, maxs), minus(maxs, mins)};
            tables[key][{enhanced_crossing_number(p), enhanced_nesting_number(p)}] += 1;
            return true;
        });
        for (const auto& [key, cells] : tables)
            if (!table_symmetric(cells)) {
                c.fail("asymmetric enhanced table at n=" + std::to_string(n) +
                       " S=" + format_set(key.first) + " T=" + format_set(key.second));
                break;
            }
    }

    return finish("enhanced-tables", c, start);
}

SuiteResult verify_walk_counts() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    for (int n = 0; n <= 10; ++n)
        if (count_walks(WalkKind::Vacillating, Shape{}, 2 * n) != bell(n)) {
            c.fail("closed vacillating walk count is not Bell(" + std::to_string(n) + ")");
            break;
        }

    for (int n = 0; n <= 8 && c.ok; ++n)
        for (int m = 0; n + m <= 8; ++m) {
            auto dn = walk_shape_distribution(WalkKind::Vacillating, 2 * n);
            auto dm = walk_shape_distribution(WalkKind::Vacillating, 2 * m);
            BigInt sum = 0;
            for (const auto& [shape, count] : dn) {
                auto it = dm.find(shape);
                if (it != dm.end()) sum += count * it->second;
            }
            if (sum != bell(n + m)) {
                c.fail("walk-number convolution missed Bell(" + std::to_string(n + m) +
                       ")");
                break;
            }
        }

    for (const Shape& shape : box_shapes(4, 4)) {
        if (!c.ok) break;
        if (shape.size() > 4) continue;
        for (int n = 0; n <= 5; ++n) {
            BigInt expect = bnk(n, shape.size()) * syt_count(shape);
            if (count_walks(WalkKind::Vacillating, shape, 2 * n) != expect) {
                c.fail("vacillating count to shape " + format_shape(shape) +
                       " at n=" + std::to_string(n) + " missed the product formula");
                break;
            }
            if (shape.size() <= 3 &&
                count_walks(WalkKind::Hesitating, shape, 2 * n) !=
                    count_walks(WalkKind::Vacillating, shape, 2 * n)) {
                c.fail("hesitating and vacillating counts differ at shape " +
                       format_shape(shape) + ", n=" + std::to_string(n));
                break;
            }
        }
    }

    return finish("walk-counts", c, start);
}

SuiteResult verify_matching_counts() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    auto f3_formula = [](int m) {
        return catalan(m) * catalan(m + 2) - catalan(m + 1) * catalan(m + 1);
    };

    for (int m = 0; m <= 8; ++m) {
        if (fk_coefficient(2, m) != catalan(m)) {
            c.fail("Bessel-determinant route missed Catalan at m=" + std::to_string(m));
            break;
        }
        if (chamber_walk_count(2, 2 * m, ChamberStepping::Free) != catalan(m)) {
            c.fail("chamber route missed Catalan at m=" + std::to_string(m));
            break;
        }
    }

    for (int m = 0; m <= 7 && c.ok; ++m) {
        if (fk_coefficient(3, m) != f3_formula(m)) {
            c.fail("Bessel-determinant route missed the Catalan 2x2 determinant at m=" +
                   std::to_string(m));
            break;
        }
        if (chamber_walk_count(3, 2 * m, ChamberStepping::Free) != f3_formula(m)) {
            c.fail("chamber route missed the Catalan 2x2 determinant at m=" +
                   std::to_string(m));
            break;
        }
    }

    for (int m = 0; m <= 7 && c.ok; ++m) {
        BigInt no2 = 0, no3 = 0;
        std::set<std::pair<std::string, std::string>> image;
        bool pair_ok = true;
        for_each_matching(m, [&](const SetPartition& match) {
            int cr = crossing_number(match);
            if (cr <= 1) no2 += 1;
            if (cr <= 2) {
                no3 += 1;
                if (m <= 6) {
                    auto [dp, dq] = dyck_pair_from_matching_k3(match);
                    image.insert({format_path(dp), format_path(dq)});
                    if (matching_from_dyck_pair_k3(dp, dq) != match) {
                        pair_ok = false;
                        return false;
                    }
                }
            }
            return true;
        });
        if (!pair_ok) {
            c.fail("Dyck-pair map failed to invert at m=" + std::to_string(m));
            break;
        }
        if (no2 != catalan(m)) {
            c.fail("search count of 2-noncrossing matchings off at m=" +
                   std::to_string(m));
            break;
        }
        if (no3 != f3_formula(m)) {
            c.fail("search count of 3-noncrossing matchings off at m=" +
                   std::to_string(m));
            break;
        }
        if (m <= 6 && BigInt(image.size()) != no3) {
            c.fail("Dyck-pair image is not faithful at m=" + std::to_string(m));
            break;
        }
    }

    return finish("matching-counts", c, start);
}

SuiteResult verify_transfer_matrices() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    struct Entry {
        int k, j;
        std::vector<std::vector<long long>> factors;  // constant term first
    };
    // Factored reference forms; the product is the comparison oracle.
    const std::vector<Entry> table{
        {1, 1, {{1, -1}}},
        {1, 2, {{1, -2}}},
        {1, 3, {{1, -3, 1}}},
        {1, 4, {{1, -1}, {1, -3}}},
        {2, 2, {{1, -1}, {1, -5}}},
        {2, 3, {{1, -1}, {1, -3}, {1, -8, 4}}},
        {2, 4, {{1, -14, 49, -49}, {1, -6, 5, -1}}},
        {3, 3, {{1, -1}, {1, -19, 83, -1}, {1, -5, 6, -1}, {1, -5, 6, -1}}},
        {3,
         4,
         {{1, -2},
          {1, -2},
          {1, -8, 8},
          {1, -4, 2},
          {1, -4, 2},
          {1, -16, 60, -32, 4},
          {1, -24, 136, -160, 16}}},
        {4,
         4,
         {{1, -1},
          {1, -1},
          {1, -18, 81, -81},
          {1, -18, 81, -81},
          {1, -27, 99, -9},
          {1, -9, 18, -9},
          {1, -9, 18, -9},
          {1, -27, 195, -361},
          {1, -6, 9, -1},
          {1, -6, 9, -1},
          {1, -9, 6, -1},
          {1, -9, 6, -1}}},
    };

    for (const Entry& e : table) {
        IntPoly expect{{1}};
        for (const auto& f : e.factors) {
            std::vector<BigInt> coeffs(f.begin(), f.end());
            expect = poly_mul(expect, IntPoly(coeffs));
        }
        IntPoly got = p_poly(e.k, e.j);
        if (got != expect) {
            c.fail("reduced characteristic polynomial off at k=" + std::to_string(e.k) +
                   " j=" + std::to_string(e.j));
            break;
        }
        if (p_poly(e.j, e.k) != expect) {
            c.fail("transposed-box polynomial differs at k=" + std::to_string(e.k) +
                   " j=" + std::to_string(e.j));
            break;
        }
    }

    for (int k = 1; k <= 3 && c.ok; ++k)
        for (int j = 1; j <= 3 && c.ok; ++j) {
            RatSeries s = gkj_series(k, j, 21);
            for (int m = 0; 2 * m <= 21; ++m)
                if (s.coeff(2 * m) != BigRat(gkj_count(k, j, m))) {
                    c.fail("series and walk counts disagree at k=" + std::to_string(k) +
                           " j=" + std::to_string(j) + " m=" + std::to_string(m));
                    break;
                }
            for (int i = 1; i <= 21; i += 2)
                if (s.coeff(i) != 0) {
                    c.fail("odd series coefficient survives at k=" + std::to_string(k) +
                           " j=" + std::to_string(j));
                    break;
                }
        }

    for (int k = 1; k <= 5 && c.ok; ++k)
        for (int m = 0; m <= 10; ++m)
            if (gk1_reflection(k, m) != gkj_count(k, 1, m)) {
                c.fail("reflection formula disagrees with walk counts at k=" +
                       std::to_string(k) + " m=" + std::to_string(m));
                break;
            }

    return finish("transfer-matrices", c, start);
}

SuiteResult verify_spectral_rank() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    const std::set<std::pair<int, int>> invertible{
        {1, 1}, {1, 3}, {1, 5}, {1, 7}, {1, 9}, {1, 11},
        {3, 3}, {3, 7}, {3, 9}, {5, 5}, {5, 7}};
    for (int k = 1; k <= 6 && c.ok; ++k)
        for (int j = k; k + j <= 12; ++j) {
            bool inv = is_invertible(k, j);
            if (inv != (invertible.count({k, j}) > 0)) {
                c.fail("invertibility verdict wrong at k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
                break;
            }
            auto [even, odd] = bipartite_balance(k, j);
            bool balanced = even == odd;
            if (balanced != (k % 2 == 1 && j % 2 == 1)) {
                c.fail("balance criterion wrong at k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
                break;
            }
            if (inv && !balanced) {
                c.fail("invertible but unbalanced at k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
                break;
            }
        }

    if (c.ok) {
        RankResult r = rank_corank(rect_lattice(3, 11).a);
        c.eq(r.corank, 6, "corank of the 3x11 box adjacency matrix");
        c.eq(r.rank, 358, "rank of the 3x11 box adjacency matrix");
    }

    for (int k = 1; k <= 3 && c.ok; ++k)
        for (int j = 1; j <= 3; ++j) {
            EigenvalueReport rep = eigenvalue_form_check(k, j, 1e-6);
            if (!rep.all_matched) {
                c.fail("eigenvalue outside the cosine family at k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
                break;
            }
        }

    return finish("spectral-rank", c, start);
}

SuiteResult verify_paths() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    for (int n = 0; n <= 7 && c.ok; ++n) {
        std::set<std::pair<unsigned, unsigned>> nonempty;
        for_each_partition(n, [&](const SetPartition& p) {
            unsigned sm = 0, tm = 0;
            for (int v : min_set(p)) sm |= 1u << (v - 1);
            for (int v : max_set(p)) tm |= 1u << (v - 1);
            nonempty.insert({sm, tm});
            return true;
        });
        for (unsigned sm = 0; sm < (1u << n) && c.ok; ++sm)
            for (unsigned tm = 0; tm < (1u << n); ++tm) {
                std::set<int> s, t;
                for (int v = 1; v <= n; ++v) {
                    if (sm & (1u << (v - 1))) s.insert(v);
                    if (tm & (1u << (v - 1))) t.insert(v);
                }
                bool expect = nonempty.count({sm, tm}) > 0;
                if (motzkin_profile(s, t, n).motzkin != expect) {
                    c.fail("emptiness criterion wrong at n=" + std::to_string(n) +
                           " S=" + format_set(s) + " T=" + format_set(t));
                    break;
                }
            }
    }

    for (int n = 0; n <= 9 && c.ok; ++n) {
        BigInt noncrossing = 0, nonnesting = 0;
        for_each_partition(n, [&](const SetPartition& p) {
            std::set<int> s = min_set(p), t = max_set(p);
            if (crossing_number(p) <= 1) {
                noncrossing += 1;
                MotzkinProfile prof = motzkin_profile(s, t, n);
                if (!prof.motzkin || noncrossing_from_motzkin(prof.path, s, t) != p) {
                    c.fail("noncrossing recovery failed at " + format_partition(p));
                    return false;
                }
            }
            if (nesting_number(p) <= 1) {
                nonnesting += 1;
                MotzkinProfile prof = motzkin_profile(s, t, n);
                if (!prof.motzkin || nonnesting_from_motzkin(prof.path, s, t) != p) {
                    c.fail("nonnesting recovery failed at " + format_partition(p));
                    return false;
                }
            }
            return true;
        });
        if (!c.ok) break;
        if (noncrossing != catalan(n) || nonnesting != catalan(n)) {
            c.fail("Catalan count missed at n=" + std::to_string(n));
            break;
        }
    }

    for (int m = 0; m <= 7 && c.ok; ++m)
        for_each_matching(m, [&](const SetPartition& match) {
            int cr = crossing_number(match);
            if (cr <= 1) {
                LatticePath path = dyck_from_matching_k2(match);
                if (!path.is_dyck() || matching_from_dyck_k2(path) != match) {
                    c.fail("single Dyck path map failed at " + format_partition(match));
                    return false;
                }
            }
            if (cr <= 2) {
                auto [dp, dq] = dyck_pair_from_matching_k3(match);
                if (matching_from_dyck_pair_k3(dp, dq) != match) {
                    c.fail("Dyck pair map failed at " + format_partition(match));
                    return false;
                }
            }
            return true;
        });

    return finish("paths", c, start);
}

SuiteResult verify_greene_analogue() {
    auto start = std::chrono::steady_clock::now();
    Checker c;

    for_each_partition(8, [&](const SetPartition& p) {
        for (int r = 1; r <= 3; ++r)
            if (ne_r(p, r) != oracle_ne_r(p, r)) {
                c.fail("nesting-union count off at " + format_partition(p) +
                       " r=" + std::to_string(r));
                return false;
            }
        return true;
    });

    return finish("greene-analogue", c, start);
}

std::vector<std::string> suite_names() {
    return {"golden-examples", "round-trips",     "stats-oracle",
            "symmetric-tables", "enhanced-tables", "walk-counts",
            "matching-counts",  "transfer-matrices", "spectral-rank",
            "paths",            "greene-analogue"};
}

namespace {

const std::map<std::string, SuiteResult (*)()>& suite_table() {
    static const std::map<std::string, SuiteResult (*)()> table{
        {"golden-examples", verify_golden_examples},
        {"round-trips", verify_round_trips},
        {"stats-oracle", verify_stats_oracle},
        {"symmetric-tables", verify_symmetric_tables},
        {"enhanced-tables", verify_enhanced_tables},
        {"walk-counts", verify_walk_counts},
        {"matching-counts", verify_matching_counts},
        {"transfer-matrices", verify_transfer_matrices},
        {"spectral-rank", verify_spectral_rank},
        {"paths", verify_paths},
        {"greene-analogue", verify_greene_analogue},
    };
    return table;
}

}  // namespace

SuiteResult run_suite(const std::string& name) {
    auto it = suite_table().find(name);
    if (it == suite_table().end())
        throw std::invalid_argument("unknown suite: " + name);
    return it->second();
}

std::vector<SuiteResult> run_all_suites(std::ostream& out) {
    std::vector<SuiteResult> results;
    for (const std::string& name : suite_names()) {
        SuiteResult r = run_suite(name);
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << std::fixed
            << std::setprecision(2) << r.seconds << " s)";
        if (!r.passed) out << ": " << r.detail;
        out << "\n" << std::flush;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace crossnest
