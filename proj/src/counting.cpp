#include "crossnest/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossnest/stats.hpp"
#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

std::string to_string(ObjectKind k) {
    return k == ObjectKind::Partitions ? "partitions" : "matchings";
}

ObjectKind object_kind_from_string(const std::string& s) {
    if (s == "partitions") return ObjectKind::Partitions;
    if (s == "matchings") return ObjectKind::Matchings;
    throw std::invalid_argument("unknown object kind: " + s);
}

BigInt DistributionTable::total() const {
    BigInt t = 0;
    for (const auto& [cell, count] : cells) t += count;
    return t;
}

bool DistributionTable::symmetric() const {
    for (const auto& [cell, count] : cells) {
        auto it = cells.find({cell.second, cell.first});
        if (it == cells.end() || it->second != count) return false;
    }
    return true;
}

namespace {

std::set<int> set_difference(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    for (int x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

}  // namespace

DistributionTable distribution(ObjectKind object, int n, bool bar,
                               const std::optional<TableFilter>& filter,
                               int shard, int num_shards) {
    if (n < 0) throw std::invalid_argument("distribution: n must be nonnegative");
    if (object == ObjectKind::Partitions && n > DISTRIBUTION_MAX_PARTITION_N)
        throw std::invalid_argument("distribution: bound exceeded (n > " +
                                    std::to_string(DISTRIBUTION_MAX_PARTITION_N) +
                                    " for partitions)");
    if (object == ObjectKind::Matchings) {
        if (n % 2 != 0)
            throw std::invalid_argument("distribution: matchings need an even ground set");
        if (n > DISTRIBUTION_MAX_MATCHING_N)
            throw std::invalid_argument("distribution: bound exceeded (n > " +
                                        std::to_string(DISTRIBUTION_MAX_MATCHING_N) +
                                        " for matchings)");
    }
    DistributionTable table;
    table.object = object;
    table.n = n;
    table.bar = bar;
    table.filter = filter;
    auto visit = [&](const SetPartition& p) {
        if (filter) {
            std::set<int> mins = min_set(p), maxs = max_set(p);
            std::set<int> s = bar ? set_difference(mins, maxs) : mins;
            std::set<int> t = bar ? set_difference(maxs, mins) : maxs;
            if (s != filter->s || t != filter->t) return true;
        }
        int cr, ne;
        if (bar) {
            cr = enhanced_crossing_number(p);
            ne = enhanced_nesting_number(p);
        } else {
            cr = crossing_number(p);
            ne = nesting_number(p);
        }
        table.cells[{cr, ne}] += 1;
        return true;
    };
    if (object == ObjectKind::Partitions)
        for_each_partition(n, visit, shard, num_shards);
    else
        for_each_matching(n / 2, visit, shard, num_shards);
    if (num_shards == 1 && !table.symmetric())
        throw std::logic_error("distribution: joint symmetry violated");
    return table;
}

DistributionTable merge_tables(const std::vector<DistributionTable>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge_tables: nothing to merge");
    DistributionTable out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        const DistributionTable& p = parts[i];
        if (p.object != out.object || p.n != out.n || p.bar != out.bar ||
            p.filter != out.filter)
            throw std::invalid_argument("merge_tables: mismatched table parameters");
        for (const auto& [cell, count] : p.cells) out.cells[cell] += count;
    }
    return out;
}

BigInt bell(int n) {
    if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
    // Bell triangle
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
        row = std::move(next);
    }
    return row.front();
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    if (k == 0) return 0;
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;  // S(i,0) vanishes once i >= 1
    }
    return row[k];
}

BigInt bnk(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("bnk: negative argument");
    BigInt total = 0;
    for (int m = 0; m <= n; ++m) total += binomial(n, m) * stirling2(m, k) * bell(n - m);
    return total;
}

BigInt ncn(std::optional<int> k, std::optional<int> l, int n) {
    if (n < 0) throw std::invalid_argument("ncn: n must be nonnegative");
    if ((k && *k < 1) || (l && *l < 1))
        throw std::invalid_argument("ncn: bounds must be at least 1");
    int max_rows = k ? *k - 1 : -1;  // -1: unbounded
    int max_cols = l ? *l - 1 : -1;
    std::map<Shape, BigInt> cur;
    cur[Shape{}] = 1;
    for (int i = 1; i <= 2 * n; ++i) {
        std::map<Shape, BigInt> next;
        for (const auto& [s, c] : cur) {
            next[s] += c;
            if (i % 2 == 1) {
                for (const Shape& d : down_covers(s)) next[d] += c;
            } else {
                for (const Shape& u : up_covers(s)) {
                    if (max_rows >= 0 && u.rows() > max_rows) continue;
                    if (max_cols >= 0 && u.cols() > max_cols) continue;
                    next[u] += c;
                }
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(Shape{});
    return it == cur.end() ? BigInt(0) : it->second;
}

BigInt chamber_walk_count(int k, int length, ChamberStepping stepping) {
    if (k < 2) throw std::invalid_argument("chamber_walk_count: k must be at least 2");
    if (length < 0) throw std::invalid_argument("chamber_walk_count: negative length");
    if (stepping == ChamberStepping::Free && length % 2 != 0)
        throw std::invalid_argument("chamber_walk_count: free stepping needs even length");
    int dims = k - 1;
    std::map<std::vector<int>, BigInt> cur;
    cur[std::vector<int>(dims, 0)] = 1;
    auto in_chamber_after = [&](const std::vector<int>& a) {
        for (int r = 0; r < dims; ++r) {
            int lo = r + 1 < dims ? a[r + 1] : 0;
            if (a[r] < lo) return false;
        }
        return true;
    };
    for (int i = 1; i <= length; ++i) {
        std::map<std::vector<int>, BigInt> next;
        bool backward = stepping == ChamberStepping::Free || i % 2 == 1;
        bool forward = stepping == ChamberStepping::Free || i % 2 == 0;
        bool stand = stepping == ChamberStepping::Vacillating;
        for (const auto& [a, c] : cur) {
            if (stand) next[a] += c;
            for (int r = 0; r < dims; ++r) {
                std::vector<int> b = a;
                if (backward) {
                    --b[r];
                    if (in_chamber_after(b)) next[b] += c;
                    ++b[r];
                }
                if (forward) {
                    ++b[r];
                    if (in_chamber_after(b)) next[b] += c;
                }
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(std::vector<int>(dims, 0));
    return it == cur.end() ? BigInt(0) : it->second;
}

BigInt gk1_reflection(int k, int m) {
    if (k < 1 || m < 0) throw std::invalid_argument("gk1_reflection: bad arguments");
    BigInt total = 0;
    int period = k + 2;
    for (int i = -(2 * m / period + 2); i <= 2 * m / period + 2; ++i) {
        total += binomial(2 * m, m - i * period);
        total -= binomial(2 * m, m + i * period + k + 1);
    }
    return total;
}

RatSeries bessel_series(int m, int order) {
    if (order < 0) throw std::invalid_argument("bessel_series: negative order");
    m = std::abs(m);  // I_{-m} = I_m
    RatSeries s(order);
    for (int j = 0; m + 2 * j <= order; ++j)
        s.c[m + 2 * j] = BigRat(1) / BigRat(factorial(j) * factorial(m + j));
    return s;
}

namespace {

RatSeries series_det(const std::vector<std::vector<RatSeries>>& m) {
    size_t d = m.size();
    if (d == 0) {
        RatSeries one;
        one.c[0] = 1;
        return one;
    }
    if (d == 1) return m[0][0];
    RatSeries acc((int)m[0][0].order);
    for (size_t col = 0; col < d; ++col) {
        std::vector<std::vector<RatSeries>> minor;
        minor.reserve(d - 1);
        for (size_t i = 1; i < d; ++i) {
            std::vector<RatSeries> row;
            row.reserve(d - 1);
            for (size_t j = 0; j < d; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        RatSeries term = series_mul(m[0][col], series_det(minor));
        acc = col % 2 == 0 ? series_add(acc, term) : series_sub(acc, term);
    }
    return acc;
}

}  // namespace

RatSeries fk_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("fk_series: k must be at least 1");
    int d = k - 1;
    std::vector<std::vector<RatSeries>> m(d, std::vector<RatSeries>(d, RatSeries(order)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] =
                series_sub(bessel_series(i - j, order), bessel_series(i + j, order));
    if (d == 0) {
        RatSeries one(order);
        one.c[0] = 1;
        return one;
    }
    return series_det(m);
}

BigInt fk_coefficient(int k, int m) {
    if (m < 0) throw std::invalid_argument("fk_coefficient: m must be nonnegative");
    RatSeries f = fk_series(k, 2 * m);
    BigRat v = f.coeff(2 * m) * BigRat(factorial(2 * m));
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("fk_coefficient: non-integer coefficient");
    return boost::multiprecision::numerator(v);
}

}  // namespace crossnest
