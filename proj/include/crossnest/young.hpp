#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "crossnest/numeric.hpp"

namespace crossnest {

// Integer partition, weakly decreasing positive parts, no trailing zeros stored.
struct Shape {
    std::vector<int> parts;

    Shape() = default;
    explicit Shape(std::vector<int> p);  // strips trailing zeros, validates

    int size() const;                               // number of cells
    int rows() const { return (int)parts.size(); }
    int cols() const { return parts.empty() ? 0 : parts[0]; }
    bool empty() const { return parts.empty(); }
    int part(int row) const { return row < rows() ? parts[row] : 0; }  // 0-based row

    bool contains(const Shape& other) const;

    auto operator<=>(const Shape&) const = default;  // lexicographic on part lists
};

Shape conjugate(const Shape& s);

// Covers in Young's lattice, ordered by the index of the changed row
// (descending lex for up_covers, ascending lex for down_covers).
std::vector<Shape> up_covers(const Shape& s);
std::vector<Shape> down_covers(const Shape& s);

// Shapes differing by exactly one square.
bool is_cover(const Shape& lower, const Shape& upper);

// Number of standard Young tableaux of shape s (hook length formula).
BigInt syt_count(const Shape& s);

// 1-based cell coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Rows increase left to right, columns increase top down; entries distinct
// positive integers (content need not be an initial segment).
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r);  // validates

    Shape shape() const;
    int cell_count() const;
    bool empty() const { return rows.empty(); }
    std::vector<int> content() const;         // sorted entries
    bool has_entry(int v) const;
    Cell find_entry(int v) const;             // throws if absent

    auto operator<=>(const StandardTableau&) const = default;
};

struct InsertResult {
    StandardTableau tableau;
    std::vector<Cell> path;  // visited cells, ending at the newly created cell
};

// RSK row insertion of v; v must not be present.
InsertResult row_insert(const StandardTableau& t, int v);

struct ReverseInsertResult {
    StandardTableau tableau;
    int ejected = 0;
};

// Exact inverse of row_insert: corner must be a removable corner of t's shape.
ReverseInsertResult reverse_insert(const StandardTableau& t, Cell corner);

// RSK of a sequence of distinct entries: insertion tableau A, recording tableau B.
std::pair<StandardTableau, StandardTableau> rsk(const std::vector<int>& word);

}  // namespace crossnest
