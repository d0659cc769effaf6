#pragma once

#include <vector>

#include "crossnest/numeric.hpp"

namespace crossnest {

// Polynomial with exact integer coefficients, c[i] the coefficient of x^i.
// Normalized: no trailing zero coefficients; the zero polynomial is empty.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    BigInt coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : 0; }
    bool is_zero() const { return c.empty(); }

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
BigInt poly_eval(const IntPoly& p, const BigInt& x);

// Truncated power series with exact rational coefficients up to x^order.
struct RatSeries {
    int order = 0;
    std::vector<BigRat> c;  // size order + 1

    RatSeries() : c(1, BigRat(0)) {}
    explicit RatSeries(int order_) : order(order_), c(order_ + 1, BigRat(0)) {}

    BigRat coeff(int i) const { return i >= 0 && i <= order ? c[i] : BigRat(0); }

    bool operator==(const RatSeries&) const = default;
};

RatSeries series_from_poly(const IntPoly& p, int order);
RatSeries series_add(const RatSeries& a, const RatSeries& b);
RatSeries series_sub(const RatSeries& a, const RatSeries& b);
RatSeries series_mul(const RatSeries& a, const RatSeries& b);
// Requires a nonzero constant term in the denominator.
RatSeries series_div(const RatSeries& num, const RatSeries& den);

}  // namespace crossnest
