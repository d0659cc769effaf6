#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crossnest/cache.hpp"
#include "crossnest/counting.hpp"
#include "crossnest/json_io.hpp"
#include "crossnest/paths.hpp"
#include "crossnest/poly.hpp"
#include "crossnest/render.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/stats.hpp"
#include "crossnest/transfer.hpp"
#include "crossnest/verify.hpp"
#include "crossnest/walks.hpp"

namespace {

using namespace crossnest;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool timestamps = false;
    bool no_cache = false;

    void emit_timestamp() const {
        if (!timestamps) return;
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        std::cout << "# generated " << buf << "\n";
    }
    void forbid_csv(const std::string& command) const {
        if (format == "csv")
            throw UsageError("csv output is only available for 'table', not '" +
                             command + "'");
    }
    CountCache cache() const {
        return no_cache ? CountCache::disabled() : CountCache::open_default();
    }
};

std::set<int> parse_int_set(const std::string& text) {
    std::set<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

std::string pretty_poly(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        BigInt c = p.coeff(i);
        if (c == 0) continue;
        bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || i == 0) out += mag.str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

void print_walk_result(const Options& opts, const TableauWalk& walk) {
    if (opts.format == "json")
        std::cout << walk_to_json(walk).dump() << "\n";
    else
        std::cout << format_walk(walk) << "\n";
}

void print_partition_result(const Options& opts, const SetPartition& p,
                            const StandardTableau& t) {
    if (opts.format == "json") {
        Json j{{"partition", partition_to_json(p)}, {"tableau", tableau_to_json(t)}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "partition: " << format_partition(p) << "\n";
    std::cout << "tableau:\n" << format_tableau(t) << "\n";
}

void run_bijection(const Options& opts, const std::string& mode,
                   const std::string& input) {
    opts.forbid_csv("bijection");
    opts.emit_timestamp();
    if (mode == "phi") {
        print_walk_result(opts, phi(parse_partition(input)).walk);
    } else if (mode == "phibar") {
        print_walk_result(opts, phi_bar(parse_partition(input)).walk);
    } else if (mode == "psi") {
        WalkToPartition r = psi(parse_walk(WalkKind::Vacillating, input));
        print_partition_result(opts, r.partition, r.tableau);
    } else if (mode == "psibar") {
        WalkToPartition r = psi_bar(parse_walk(WalkKind::Hesitating, input));
        print_partition_result(opts, r.partition, r.tableau);
    } else {  // oscillate: closed walks start at the empty shape, partitions never do
        if (input == "0" || input.rfind("0,", 0) == 0) {
            WalkToPartition r = oscillating_to_matching(parse_walk(WalkKind::Oscillating, input));
            print_partition_result(opts, r.partition, r.tableau);
        } else {
            print_walk_result(opts, matching_to_oscillating(parse_partition(input)));
        }
    }
}

void run_stats(const Options& opts, const std::string& partition_text, bool enhanced,
               bool oracle) {
    opts.forbid_csv("stats");
    opts.emit_timestamp();
    SetPartition p = parse_partition(partition_text);
    StatRecord rec = oracle ? oracle_stat_record(p) : stat_record(p);
    if (opts.format == "json") {
        std::cout << stat_to_json(rec).dump() << "\n";
        return;
    }
    std::cout << "cr: " << rec.cr << "\nne: " << rec.ne << "\n";
    if (enhanced)
        std::cout << "enhanced_cr: " << rec.enhanced_cr
                  << "\nenhanced_ne: " << rec.enhanced_ne << "\n";
}

std::string table_grid(const DistributionTable& t) {
    int max_cr = 0, max_ne = 0;
    for (const auto& [cell, count] : t.cells) {
        max_cr = std::max(max_cr, cell.first);
        max_ne = std::max(max_ne, cell.second);
    }
    std::ostringstream out;
    out << "total: " << t.total().str() << "\n";
    out << "cr\\ne";
    for (int j = 0; j <= max_ne; ++j) out << " " << j;
    out << "\n";
    for (int i = 0; i <= max_cr; ++i) {
        out << i;
        for (int j = 0; j <= max_ne; ++j) {
            auto it = t.cells.find({i, j});
            out << " " << (it == t.cells.end() ? "0" : it->second.str());
        }
        out << "\n";
    }
    return out.str();
}

void run_table(const Options& opts, const std::string& object_text, int n,
               const std::string& min_text, const std::string& max_text, bool has_filter,
               bool bar, int shards) {
    opts.emit_timestamp();
    ObjectKind object = object_kind_from_string(object_text);
    std::optional<TableFilter> filter;
    if (has_filter) filter = TableFilter{parse_int_set(min_text), parse_int_set(max_text)};
    DistributionTable table;
    if (shards <= 1) {
        table = distribution(object, n, bar, filter);
    } else {
        std::vector<std::future<DistributionTable>> jobs;
        for (int s = 0; s < shards; ++s)
            jobs.push_back(std::async(std::launch::async, [&, s] {
                return distribution(object, n, bar, filter, s, shards);
            }));
        std::vector<DistributionTable> parts;
        for (auto& job : jobs) parts.push_back(job.get());
        table = merge_tables(parts);
        if (!table.symmetric())
            throw std::logic_error("merged table lost the joint symmetry");
    }
    if (opts.format == "json")
        std::cout << table_to_json(table).dump() << "\n";
    else if (opts.format == "csv")
        std::cout << table_to_csv(table);
    else
        std::cout << table_grid(table);
}

void run_walks(const Options& opts, const std::string& kind_text,
               const std::string& shape_text, int length) {
    opts.forbid_csv("walks");
    opts.emit_timestamp();
    WalkKind kind = walk_kind_from_string(kind_text);
    Shape shape = parse_shape(shape_text);
    BigInt count = count_walks(kind, shape, length);
    if (opts.format == "json") {
        Json j{{"kind", kind_text},
               {"shape", shape_to_json(shape)},
               {"length", length},
               {"count", count.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
}

void run_charpoly(const Options& opts, int k, int j, bool full) {
    opts.forbid_csv("charpoly");
    opts.emit_timestamp();
    if (full) {
        IntPoly cp = char_poly(rect_lattice(k, j).a);
        if (opts.format == "json")
            std::cout << poly_to_json(cp).dump() << "\n";
        else
            std::cout << pretty_poly(cp, "t") << "\n";
        return;
    }
    IntPoly p = p_poly(k, j);
    if (opts.format == "json")
        std::cout << poly_to_json(p).dump() << "\n";
    else
        std::cout << pretty_poly(p, "x") << "\n";
}

void run_rank(const Options& opts, int k, int j) {
    opts.forbid_csv("rank");
    opts.emit_timestamp();
    RectLattice lat = rect_lattice(k, j);
    RankResult r = rank_corank(lat.a);
    if (opts.format == "json") {
        Json out{{"dim", lat.a.dim},
                 {"rank", r.rank},
                 {"corank", r.corank},
                 {"invertible", r.corank == 0}};
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "dim: " << lat.a.dim << "\nrank: " << r.rank
              << "\ncorank: " << r.corank << "\n";
}

void run_gkj(const Options& opts, int k, int j, int m) {
    opts.forbid_csv("gkj");
    opts.emit_timestamp();
    CountCache cache = opts.cache();
    std::string key = gkj_cache_key(k, j, m);
    BigInt count;
    if (auto hit = cache.lookup(key)) {
        count = *hit;
    } else {
        count = gkj_count(k, j, m);
        cache.store(key, count);
    }
    if (opts.format == "json") {
        Json out{{"k", k}, {"j", j}, {"m", m}, {"count", count.str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
}

void run_fk(const Options& opts, int k, std::optional<int> order, std::optional<int> m) {
    opts.forbid_csv("fk");
    opts.emit_timestamp();
    if (order.has_value() == m.has_value())
        throw UsageError("fk needs exactly one of --order or --m");
    if (m) {
        CountCache cache = opts.cache();
        std::string key = fk_cache_key(k, *m);
        BigInt count;
        if (auto hit = cache.lookup(key)) {
            count = *hit;
        } else {
            count = fk_coefficient(k, *m);
            cache.store(key, count);
        }
        if (opts.format == "json") {
            Json out{{"k", k}, {"m", *m}, {"count", count.str()}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << count.str() << "\n";
        }
        return;
    }
    RatSeries s = fk_series(k, *order);
    if (opts.format == "json") {
        std::cout << series_to_json(s).dump() << "\n";
        return;
    }
    for (int i = 0; i <= s.order; ++i)
        std::cout << "[x^" << i << "] " << s.coeff(i).str() << "\n";
}

void run_paths_motzkin(const Options& opts, int n, const std::string& min_text,
                       const std::string& max_text, const std::string& recover) {
    opts.forbid_csv("paths");
    opts.emit_timestamp();
    std::set<int> s = parse_int_set(min_text), t = parse_int_set(max_text);
    MotzkinProfile prof = motzkin_profile(s, t, n);
    std::optional<SetPartition> recovered;
    if (recover == "noncrossing")
        recovered = noncrossing_from_motzkin(prof.path, s, t);
    else if (recover == "nonnesting")
        recovered = nonnesting_from_motzkin(prof.path, s, t);
    else if (!recover.empty())
        throw UsageError("unknown --recover mode: " + recover);
    if (opts.format == "json") {
        Json out{{"path", path_to_json(prof.path)}, {"motzkin", prof.motzkin}};
        if (recovered) out["partition"] = partition_to_json(*recovered);
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "path: " << format_path(prof.path) << "\n";
    std::cout << "motzkin: " << (prof.motzkin ? "yes" : "no") << "\n";
    if (recovered) std::cout << "partition: " << format_partition(*recovered) << "\n";
}

bool looks_like_path(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text)
        if (c != 'U' && c != 'D' && c != 'F') return false;
    return true;
}

void run_paths_dyck2(const Options& opts, const std::string& input) {
    opts.forbid_csv("paths");
    opts.emit_timestamp();
    if (looks_like_path(input)) {
        SetPartition m = matching_from_dyck_k2(parse_path(input));
        if (opts.format == "json")
            std::cout << Json{{"partition", partition_to_json(m)}}.dump() << "\n";
        else
            std::cout << "partition: " << format_partition(m) << "\n";
    } else {
        LatticePath path = dyck_from_matching_k2(parse_partition(input));
        if (opts.format == "json")
            std::cout << Json{{"path", path_to_json(path)}}.dump() << "\n";
        else
            std::cout << "path: " << format_path(path) << "\n";
    }
}

void run_paths_dyck3(const Options& opts, const std::string& input, const std::string& p,
                     const std::string& q) {
    opts.forbid_csv("paths");
    opts.emit_timestamp();
    if (!input.empty()) {
        auto [dp, dq] = dyck_pair_from_matching_k3(parse_partition(input));
        if (opts.format == "json") {
            Json out{{"p", path_to_json(dp)}, {"q", path_to_json(dq)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "P: " << format_path(dp) << "\nQ: " << format_path(dq) << "\n";
        }
        return;
    }
    if (p.empty() || q.empty())
        throw UsageError("dyck3 needs either --input or both --p and --q");
    SetPartition m = matching_from_dyck_pair_k3(parse_path(p), parse_path(q));
    if (opts.format == "json")
        std::cout << Json{{"partition", partition_to_json(m)}}.dump() << "\n";
    else
        std::cout << "partition: " << format_partition(m) << "\n";
}

int run_verify(const Options& opts, const std::string& suite) {
    opts.forbid_csv("verify");
    opts.emit_timestamp();
    if (suite == "all") {
        auto results = run_all_suites(std::cout);
        for (const SuiteResult& r : results)
            if (!r.passed) return 1;
        return 0;
    }
    SuiteResult r = run_suite(suite);
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bijections, statistics, and exact counts for crossings and "
                 "nestings of set partitions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--timestamps", opts.timestamps, "prefix output with a timestamp line");
    app.add_flag("--no-cache", opts.no_cache, "skip the count cache");

    int exit_code = 0;

    // bijection
    auto* bij = app.add_subcommand("bijection", "map between partitions and walks");
    bij->require_subcommand(1);
    static std::string bij_input;
    for (const char* mode : {"phi", "psi", "phibar", "psibar", "oscillate"}) {
        const char* desc =
            mode[0] == 'p' && mode[1] == 'h'
                ? "partition to walk"
                : (mode[0] == 'p' ? "walk to partition" : "matching <-> oscillating walk");
        auto* sub = bij->add_subcommand(mode, desc);
        sub->add_option("--input", bij_input, "partition or walk text")->required();
        std::string mode_name = mode;
        sub->callback([&opts, mode_name] { run_bijection(opts, mode_name, bij_input); });
    }

    // stats
    auto* stats = app.add_subcommand("stats", "crossing and nesting numbers");
    static std::string stats_partition;
    static bool stats_enhanced = false, stats_oracle = false;
    stats->add_option("--partition", stats_partition, "partition text")->required();
    stats->add_flag("--enhanced", stats_enhanced, "also print the enhanced statistics");
    stats->add_flag("--oracle", stats_oracle, "use the exhaustive-search route");
    stats->callback(
        [&opts] { run_stats(opts, stats_partition, stats_enhanced, stats_oracle); });

    // table
    auto* table = app.add_subcommand("table", "joint distribution table");
    static std::string table_object = "partitions", table_min, table_max;
    static int table_n = 0, table_shards = 1;
    static bool table_bar = false;
    table->add_option("--object", table_object, "partitions or matchings")
        ->check(CLI::IsMember({"partitions", "matchings"}))
        ->capture_default_str();
    table->add_option("--n", table_n, "ground set size")->required();
    auto* opt_min = table->add_option("--min", table_min, "comma list filtering minima");
    auto* opt_max = table->add_option("--max", table_max, "comma list filtering maxima");
    opt_min->needs(opt_max);
    opt_max->needs(opt_min);
    table->add_flag("--bar", table_bar, "enhanced statistics and difference filters");
    table->add_option("--shards", table_shards, "parallel enumeration shards")
        ->check(CLI::PositiveNumber);
    table->callback([&opts, opt_min] {
        run_table(opts, table_object, table_n, table_min, table_max,
                  opt_min->count() > 0, table_bar, table_shards);
    });

    // walks
    auto* walks = app.add_subcommand("walks", "count walks on Young's lattice");
    static std::string walks_kind, walks_shape = "0";
    static int walks_length = 0;
    walks->add_option("--kind", walks_kind, "vacillating, hesitating, or oscillating")
        ->required()
        ->check(CLI::IsMember({"vacillating", "hesitating", "oscillating"}));
    walks->add_option("--shape", walks_shape, "end shape, e.g. 21 or 0")
        ->capture_default_str();
    walks->add_option("--length", walks_length, "number of steps")->required();
    walks->callback([&opts] { run_walks(opts, walks_kind, walks_shape, walks_length); });

    // charpoly
    auto* charp = app.add_subcommand("charpoly", "reduced box-lattice polynomial");
    static int charp_k = 1, charp_j = 1;
    static bool charp_full = false;
    charp->add_option("--k", charp_k, "box rows")->required();
    charp->add_option("--j", charp_j, "box columns")->required();
    charp->add_flag("--full", charp_full, "print det(I - tA) instead of p(x)");
    charp->callback([&opts] { run_charpoly(opts, charp_k, charp_j, charp_full); });

    // rank
    auto* rank = app.add_subcommand("rank", "exact rank of the box adjacency matrix");
    static int rank_k = 1, rank_j = 1;
    rank->add_option("--k", rank_k, "box rows")->required();
    rank->add_option("--j", rank_j, "box columns")->required();
    rank->callback([&opts] { run_rank(opts, rank_k, rank_j); });

    // gkj
    auto* gkj = app.add_subcommand("gkj", "closed bounded walk count g_{k,j}(m)");
    static int gkj_k = 1, gkj_j = 1, gkj_m = 0;
    gkj->add_option("--k", gkj_k, "row bound")->required();
    gkj->add_option("--j", gkj_j, "column bound")->required();
    gkj->add_option("--m", gkj_m, "half length")->required();
    gkj->callback([&opts] { run_gkj(opts, gkj_k, gkj_j, gkj_m); });

    // fk
    auto* fk = app.add_subcommand("fk", "Bessel-determinant matching counts");
    static int fk_k = 2;
    static int fk_order_v = -1, fk_m_v = -1;
    fk->add_option("--k", fk_k, "crossing bound")->required();
    auto* fk_order = fk->add_option("--order", fk_order_v, "series truncation order");
    auto* fk_m = fk->add_option("--m", fk_m_v, "coefficient index: matchings on [2m]");
    fk->callback([&opts, fk_order, fk_m] {
        run_fk(opts, fk_k,
               fk_order->count() ? std::optional<int>(fk_order_v) : std::nullopt,
               fk_m->count() ? std::optional<int>(fk_m_v) : std::nullopt);
    });

    // paths
    auto* paths = app.add_subcommand("paths", "Motzkin and Dyck path bijections");
    paths->require_subcommand(1);
    auto* motzkin = paths->add_subcommand("motzkin", "profile of an endpoint pair");
    static int motzkin_n = 0;
    static std::string motzkin_min, motzkin_max, motzkin_recover;
    motzkin->add_option("--n", motzkin_n, "ground set size")->required();
    motzkin->add_option("--min", motzkin_min, "comma list of block minima");
    motzkin->add_option("--max", motzkin_max, "comma list of block maxima");
    motzkin->add_option("--recover", motzkin_recover, "noncrossing or nonnesting");
    motzkin->callback([&opts] {
        run_paths_motzkin(opts, motzkin_n, motzkin_min, motzkin_max, motzkin_recover);
    });
    auto* dyck2 = paths->add_subcommand("dyck2", "2-noncrossing matchings <-> Dyck paths");
    static std::string dyck2_input;
    dyck2->add_option("--input", dyck2_input, "matching or U/D path")->required();
    dyck2->callback([&opts] { run_paths_dyck2(opts, dyck2_input); });
    auto* dyck3 = paths->add_subcommand("dyck3",
                                        "3-noncrossing matchings <-> Dyck path pairs");
    static std::string dyck3_input, dyck3_p, dyck3_q;
    dyck3->add_option("--input", dyck3_input, "matching text");
    dyck3->add_option("--p", dyck3_p, "first Dyck path");
    dyck3->add_option("--q", dyck3_q, "second Dyck path");
    dyck3->callback([&opts] { run_paths_dyck3(opts, dyck3_input, dyck3_p, dyck3_q); });

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    static std::string verify_suite = "all";
    verify->add_option("--suite", verify_suite, "suite name or 'all'")
        ->capture_default_str();
    verify->callback([&opts, &exit_code] { exit_code = run_verify(opts, verify_suite); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
