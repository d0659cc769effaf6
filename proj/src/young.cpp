#include "crossnest/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crossnest {

Shape::Shape(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Shape: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Shape: parts must be weakly decreasing");
    }
}

int Shape::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Shape::contains(const Shape& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
        if (other.parts[i] > parts[i]) return false;
    return true;
}

Shape conjugate(const Shape& s) {
    std::vector<int> c(s.cols(), 0);
    for (int p : s.parts)
        for (int j = 0; j < p; ++j) ++c[j];
    return Shape(std::move(c));
}

std::vector<Shape> up_covers(const Shape& s) {
    std::vector<Shape> out;
    for (int r = 0; r <= s.rows(); ++r) {
        // a square is addable at row r iff the row stays no longer than the one above
        if (r == 0 || s.part(r) < s.part(r - 1)) {
            std::vector<int> p = s.parts;
            if (r == (int)p.size()) p.push_back(1); else ++p[r];
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

std::vector<Shape> down_covers(const Shape& s) {
    std::vector<Shape> out;
    for (int r = 0; r < s.rows(); ++r) {
        // a square is removable at row r iff the row is longer than the one below
        if (s.part(r) > s.part(r + 1)) {
            std::vector<int> p = s.parts;
            --p[r];
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

bool is_cover(const Shape& lower, const Shape& upper) {
    if (upper.size() != lower.size() + 1 || !upper.contains(lower)) return false;
    return true;
}

BigInt syt_count(const Shape& s) {
    if (s.empty()) return 1;
    Shape conj = conjugate(s);
    BigInt numer = factorial(s.size());
    BigInt denom = 1;
    for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < s.parts[r]; ++c) {
            int hook = (s.parts[r] - c) + (conj.parts[c] - r) - 1;
            denom *= hook;
        }
    return numer / denom;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<int> seen;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            throw std::invalid_argument("StandardTableau: empty row inside tableau");
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw std::invalid_argument("StandardTableau: row lengths must weakly decrease");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v <= 0) throw std::invalid_argument("StandardTableau: entries must be positive");
            if (j > 0 && rows[i][j - 1] >= v)
                throw std::invalid_argument("StandardTableau: rows must increase");
            if (i > 0 && rows[i - 1][j] >= v)
                throw std::invalid_argument("StandardTableau: columns must increase");
            seen.push_back(v);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("StandardTableau: duplicate entry");
}

Shape StandardTableau::shape() const {
    std::vector<int> p;
    p.reserve(rows.size());
    for (const auto& r : rows) p.push_back((int)r.size());
    return Shape(std::move(p));
}

int StandardTableau::cell_count() const {
    int n = 0;
    for (const auto& r : rows) n += (int)r.size();
    return n;
}

std::vector<int> StandardTableau::content() const {
    std::vector<int> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool StandardTableau::has_entry(int v) const {
    for (const auto& r : rows)
        for (int x : r)
            if (x == v) return true;
    return false;
}

Cell StandardTableau::find_entry(int v) const {
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == v) return Cell{(int)i + 1, (int)j + 1};
    throw std::invalid_argument("find_entry: entry " + std::to_string(v) + " not present");
}

InsertResult row_insert(const StandardTableau& t, int v) {
    if (v <= 0) throw std::invalid_argument("row_insert: entry must be positive");
    if (t.has_entry(v))
        throw std::invalid_argument("row_insert: entry " + std::to_string(v) + " already present");
    InsertResult res;
    res.tableau = t;
    auto& rows = res.tableau.rows;
    int cur = v;
    for (size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({cur});
            res.path.push_back(Cell{(int)i + 1, 1});
            return res;
        }
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            res.path.push_back(Cell{(int)i + 1, (int)row.size()});
            return res;
        }
        res.path.push_back(Cell{(int)i + 1, (int)(it - row.begin()) + 1});
        std::swap(cur, *it);
    }
}

ReverseInsertResult reverse_insert(const StandardTableau& t, Cell corner) {
    Shape s = t.shape();
    int r = corner.row, c = corner.col;
    if (r < 1 || r > s.rows() || c != s.parts[r - 1] ||
        (r < s.rows() && s.parts[r] >= c))
        throw std::invalid_argument("reverse_insert: invalid corner (" + std::to_string(r) +
                                    "," + std::to_string(c) + ")");
    ReverseInsertResult res;
    res.tableau = t;
    auto& rows = res.tableau.rows;
    int cur = rows[r - 1].back();
    rows[r - 1].pop_back();
    if (rows[r - 1].empty()) rows.pop_back();
    for (int i = r - 2; i >= 0; --i) {
        auto& row = rows[i];
        // rightmost entry smaller than cur; exists since the column above cur is smaller
        auto it = std::lower_bound(row.begin(), row.end(), cur);
        --it;
        std::swap(cur, *it);
    }
    res.ejected = cur;
    return res;
}

std::pair<StandardTableau, StandardTableau> rsk(const std::vector<int>& word) {
    StandardTableau a, b;
    for (size_t i = 0; i < word.size(); ++i) {
        InsertResult ins = row_insert(a, word[i]);
        a = std::move(ins.tableau);
        Cell created = ins.path.back();
        while ((int)b.rows.size() < created.row) b.rows.push_back({});
        b.rows[created.row - 1].push_back((int)i + 1);
    }
    return {std::move(a), std::move(b)};
}

}  // namespace crossnest
