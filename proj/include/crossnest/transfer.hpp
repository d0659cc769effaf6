#pragma once

#include <utility>
#include <vector>

#include "crossnest/numeric.hpp"
#include "crossnest/poly.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

// Square matrix of exact integers with an optional vertex-order legend.
struct IntMatrix {
    int dim = 0;
    std::vector<BigInt> a;      // row-major, dim * dim
    std::vector<Shape> legend;  // vertex order when built from a lattice

    BigInt& at(int r, int c) { return a[(size_t)r * dim + c]; }
    const BigInt& at(int r, int c) const { return a[(size_t)r * dim + c]; }
    bool symmetric() const;
};

// Shapes with at most k rows and parts at most j, lexicographic,
// the empty shape first. Count: binomial(k+j, j).
std::vector<Shape> box_shapes(int k, int j);

// Hasse-diagram adjacency of the box-shape lattice, plus the submatrix
// with the empty shape's row and column removed.
struct RectLattice {
    IntMatrix a;
    IntMatrix a0;
};
RectLattice rect_lattice(int k, int j);

// det(I - tA) by the division-free Berkowitz recurrence.
IntPoly char_poly(const IntMatrix& m);

// p with det(I - xA_{k,j}) = p(x^2); bipartiteness kills the odd
// coefficients, checked here.
IntPoly p_poly(int k, int j);

// Closed walks of length 2m at the empty shape, stepping along covers
// inside the k x j box.
BigInt gkj_count(int k, int j, int m);
// det(I - xA0) / det(I - xA) expanded to the given order; the x^{2m}
// coefficient is gkj_count(k, j, m).
RatSeries gkj_series(int k, int j, int order);

struct RankResult {
    int rank = 0;
    int corank = 0;
};
// Exact rank over the rationals, fraction-free elimination with full
// pivoting.
RankResult rank_corank(const IntMatrix& m);

// Counts of even-size and odd-size shapes in the k x j box. Equality is
// necessary for invertibility of the adjacency matrix; it holds exactly
// when k and j are both odd.
std::pair<BigInt, BigInt> bipartite_balance(int k, int j);

// det(A_{k,j}) != 0, decided exactly: an unbalanced bipartition forces
// singularity; otherwise modular determinants certify a nonzero value or,
// past the Hadamard bound, a zero one.
bool is_invertible(int k, int j);

struct EigenvalueWitness {
    double eigenvalue = 0.0;
    std::vector<int> r;  // theta = 2 sum_i cos(pi r_i / m), m = k+j+1
    double theta = 0.0;
    bool matched = false;
};
struct EigenvalueReport {
    bool all_matched = false;
    double tolerance = 0.0;
    std::vector<EigenvalueWitness> witnesses;  // one per eigenvalue
};
inline constexpr int EIGEN_CHECK_MAX_DIM = 256;
// Every numeric eigenvalue of the box adjacency matrix must lie within
// tolerance of some theta in the cosine family. One-directional: no claim
// that every theta occurs.
EigenvalueReport eigenvalue_form_check(int k, int j, double tolerance = 1e-6);

}  // namespace crossnest
