#include "crossnest/transfer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace crossnest {

bool IntMatrix::symmetric() const {
    for (int r = 0; r < dim; ++r)
        for (int c = r + 1; c < dim; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

namespace {

void gen_box_shapes(int rows_left, int max_part, std::vector<int>& parts,
                    std::vector<Shape>& out) {
    out.push_back(Shape{parts});
    if (rows_left == 0) return;
    for (int p = std::min(max_part, parts.empty() ? max_part : parts.back());
         p >= 1; --p) {
        parts.push_back(p);
        gen_box_shapes(rows_left - 1, max_part, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Shape> box_shapes(int k, int j) {
    if (k < 1 || j < 1) throw std::invalid_argument("box_shapes: k, j must be positive");
    std::vector<Shape> out;
    std::vector<int> parts;
    gen_box_shapes(k, j, parts, out);
    std::sort(out.begin(), out.end());
    if (BigInt(out.size()) != binomial(k + j, j))
        throw std::logic_error("box_shapes: vertex count mismatch");
    return out;
}

RectLattice rect_lattice(int k, int j) {
    std::vector<Shape> shapes = box_shapes(k, j);
    int dim = (int)shapes.size();
    std::map<Shape, int> index;
    for (int i = 0; i < dim; ++i) index[shapes[i]] = i;
    RectLattice lat;
    lat.a.dim = dim;
    lat.a.a.assign((size_t)dim * dim, 0);
    lat.a.legend = shapes;
    for (int i = 0; i < dim; ++i)
        for (const Shape& u : up_covers(shapes[i])) {
            auto it = index.find(u);
            if (it == index.end()) continue;  // cover leaves the box
            lat.a.at(i, it->second) = 1;
            lat.a.at(it->second, i) = 1;
        }
    lat.a0.dim = dim - 1;
    lat.a0.a.assign((size_t)(dim - 1) * (dim - 1), 0);
    lat.a0.legend.assign(shapes.begin() + 1, shapes.end());
    for (int r = 1; r < dim; ++r)
        for (int c = 1; c < dim; ++c) lat.a0.at(r - 1, c - 1) = lat.a.at(r, c);
    return lat;
}

IntPoly char_poly(const IntMatrix& m) {
    int n = m.dim;
    if ((size_t)n * n != m.a.size())
        throw std::invalid_argument("char_poly: matrix storage is not square");
    if (n == 0) return IntPoly{{BigInt(1)}};
    // Berkowitz: C holds det(sI - M_r) leading-coefficient first, which read
    // index-as-power is exactly det(I - tM_r).
    std::vector<BigInt> C{1, -m.at(0, 0)};
    for (int r = 1; r < n; ++r) {
        std::vector<BigInt> t(r + 2);
        t[0] = 1;
        t[1] = -m.at(r, r);
        std::vector<BigInt> w(r);
        for (int i = 0; i < r; ++i) w[i] = m.at(i, r);
        for (int i = 2; i <= r + 1; ++i) {
            if (i > 2) {
                std::vector<BigInt> w2(r);
                for (int x = 0; x < r; ++x) {
                    BigInt acc = 0;
                    for (int y = 0; y < r; ++y)
                        if (m.at(x, y) != 0 && w[y] != 0) acc += m.at(x, y) * w[y];
                    w2[x] = std::move(acc);
                }
                w = std::move(w2);
            }
            BigInt acc = 0;
            for (int y = 0; y < r; ++y)
                if (m.at(r, y) != 0 && w[y] != 0) acc += m.at(r, y) * w[y];
            t[i] = -acc;
        }
        std::vector<BigInt> next(r + 2);
        for (int i = 0; i < r + 2; ++i) {
            BigInt acc = 0;
            for (int jj = std::max(0, i - r - 1); jj <= std::min(i, r); ++jj)
                acc += t[i - jj] * C[jj];
            next[i] = std::move(acc);
        }
        C = std::move(next);
    }
    return IntPoly(std::move(C));
}

IntPoly p_poly(int k, int j) {
    IntPoly cp = char_poly(rect_lattice(k, j).a);
    std::vector<BigInt> even;
    for (int i = 0; i <= cp.degree(); ++i) {
        if (i % 2 == 1 && cp.coeff(i) != 0)
            throw std::logic_error("p_poly: odd coefficient survived");
        if (i % 2 == 0) even.push_back(cp.coeff(i));
    }
    return IntPoly(std::move(even));
}

BigInt gkj_count(int k, int j, int m) {
    if (m < 0) throw std::invalid_argument("gkj_count: m must be nonnegative");
    std::map<Shape, BigInt> cur;
    cur[Shape{}] = 1;
    for (int step = 0; step < 2 * m; ++step) {
        std::map<Shape, BigInt> next;
        for (const auto& [s, c] : cur) {
            for (const Shape& u : up_covers(s)) {
                if (u.rows() > k || u.cols() > j) continue;
                next[u] += c;
            }
            for (const Shape& d : down_covers(s)) next[d] += c;
        }
        cur = std::move(next);
    }
    auto it = cur.find(Shape{});
    return it == cur.end() ? BigInt(0) : it->second;
}

RatSeries gkj_series(int k, int j, int order) {
    RectLattice lat = rect_lattice(k, j);
    RatSeries num = series_from_poly(char_poly(lat.a0), order);
    RatSeries den = series_from_poly(char_poly(lat.a), order);
    return series_div(num, den);
}

RankResult rank_corank(const IntMatrix& m) {
    int n = m.dim;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    BigInt prev = 1;
    int rank = 0;
    for (int r = 0; r < n; ++r) {
        int pr = -1, pc = -1;
        for (int i = r; i < n && pr < 0; ++i)
            for (int jj = r; jj < n; ++jj)
                if (a[i][jj] != 0) {
                    pr = i;
                    pc = jj;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[r], a[pr]);
        if (pc != r)
            for (int i = 0; i < n; ++i) std::swap(a[i][r], a[i][pc]);
        const BigInt& piv = a[r][r];
        for (int i = r + 1; i < n; ++i) {
            const BigInt& lead = a[i][r];
            for (int jj = r + 1; jj < n; ++jj) {
                // Fraction-free update; the division by the previous pivot
                // is exact (entries stay (r+1)-minors of the input).
                BigInt v = piv * a[i][jj];
                if (lead != 0 && a[r][jj] != 0) v -= lead * a[r][jj];
                a[i][jj] = v / prev;
            }
            a[i][r] = 0;
        }
        prev = piv;
        ++rank;
    }
    return {rank, n - rank};
}

std::pair<BigInt, BigInt> bipartite_balance(int k, int j) {
    BigInt even = 0, odd = 0;
    for (const Shape& s : box_shapes(k, j)) (s.size() % 2 == 0 ? even : odd) += 1;
    return {even, odd};
}

namespace {

bool small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint32_t prime_below(uint32_t p) {
    while (!small_prime(--p)) {
    }
    return p;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Gaussian elimination mod p, p < 2^31 so products fit in 64 bits.
uint64_t det_mod(const IntMatrix& m, uint64_t p) {
    int n = m.dim;
    std::vector<std::vector<uint64_t>> a(n, std::vector<uint64_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            BigInt v = m.at(r, c) % (long long)p;
            if (v < 0) v += (long long)p;
            a[r][c] = v.convert_to<uint64_t>();
        }
    uint64_t det = 1;
    for (int r = 0; r < n; ++r) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a[i][r] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != r) {
            std::swap(a[r], a[piv]);
            det = p - det;
        }
        det = det * a[r][r] % p;
        uint64_t inv = mod_pow(a[r][r], p - 2, p);
        for (int i = r + 1; i < n; ++i) {
            if (a[i][r] == 0) continue;
            uint64_t f = a[i][r] * inv % p;
            for (int c = r; c < n; ++c)
                a[i][c] = (a[i][c] + (p - f) * a[r][c]) % p;
        }
    }
    return det % p;
}

}  // namespace

bool is_invertible(int k, int j) {
    auto [even, odd] = bipartite_balance(k, j);
    if (even != odd) return false;
    IntMatrix a = rect_lattice(k, j).a;
    // Hadamard: det^2 <= prod of row norms squared (vertex degrees here).
    BigInt hadamard_sq = 1;
    for (int r = 0; r < a.dim; ++r) {
        BigInt deg = 0;
        for (int c = 0; c < a.dim; ++c) deg += a.at(r, c) * a.at(r, c);
        if (deg == 0) return false;  // zero row
        hadamard_sq *= deg;
    }
    uint32_t p = 1u << 31;
    BigInt product = 1;
    while (product * product <= 4 * hadamard_sq) {
        p = prime_below(p);
        if (det_mod(a, p) != 0) return true;
        product *= p;
    }
    return false;  // zero mod more than the Hadamard bound allows
}

EigenvalueReport eigenvalue_form_check(int k, int j, double tolerance) {
    IntMatrix a = rect_lattice(k, j).a;
    if (a.dim > EIGEN_CHECK_MAX_DIM)
        throw std::invalid_argument("eigenvalue_form_check: dimension bound exceeded");
    Eigen::MatrixXd m(a.dim, a.dim);
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c)
            m(r, c) = a.at(r, c).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue_form_check: eigensolver failed");

    int mm = k + j + 1;
    // Sorted tuples 0 <= r_1 <= ... <= r_j <= 2m-1; unsorted tuples give the
    // same theta values.
    std::vector<std::pair<double, std::vector<int>>> thetas;
    std::vector<int> tuple(j, 0);
    while (true) {
        double theta = 0;
        for (int r : tuple) theta += 2.0 * std::cos(M_PI * r / mm);
        thetas.push_back({theta, tuple});
        int pos = j - 1;
        while (pos >= 0 && tuple[pos] == 2 * mm - 1) --pos;
        if (pos < 0) break;
        int v = tuple[pos] + 1;
        for (int q = pos; q < j; ++q) tuple[q] = v;
    }

    EigenvalueReport report;
    report.tolerance = tolerance;
    report.all_matched = true;
    for (int i = 0; i < a.dim; ++i) {
        double ev = solver.eigenvalues()[i];
        EigenvalueWitness w;
        w.eigenvalue = ev;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [theta, r] : thetas) {
            double d = std::abs(theta - ev);
            if (d < best) {
                best = d;
                w.theta = theta;
                w.r = r;
            }
        }
        w.matched = best <= tolerance;
        if (!w.matched) report.all_matched = false;
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

}  // namespace crossnest
