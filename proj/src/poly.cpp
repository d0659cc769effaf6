#include "crossnest/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossnest {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff((int)i) + b.coeff((int)i);
    return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff((int)i) - b.coeff((int)i);
    return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<BigInt> out(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(out));
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

RatSeries series_from_poly(const IntPoly& p, int order) {
    RatSeries s(order);
    for (int i = 0; i <= order; ++i) s.c[i] = BigRat(p.coeff(i));
    return s;
}

namespace {

int common_order(const RatSeries& a, const RatSeries& b) {
    return std::min(a.order, b.order);
}

}  // namespace

RatSeries series_add(const RatSeries& a, const RatSeries& b) {
    RatSeries out(common_order(a, b));
    for (int i = 0; i <= out.order; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

RatSeries series_sub(const RatSeries& a, const RatSeries& b) {
    RatSeries out(common_order(a, b));
    for (int i = 0; i <= out.order; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
    RatSeries out(common_order(a, b));
    for (int i = 0; i <= out.order; ++i)
        for (int j = 0; i + j <= out.order; ++j) {
            if (j > b.order || i > a.order) continue;
            out.c[i + j] += a.c[i] * b.c[j];
        }
    return out;
}

RatSeries series_div(const RatSeries& num, const RatSeries& den) {
    if (den.c[0] == 0)
        throw std::invalid_argument("series_div: denominator has zero constant term");
    RatSeries out(common_order(num, den));
    for (int i = 0; i <= out.order; ++i) {
        BigRat acc = num.c[i];
        for (int j = 1; j <= i; ++j) acc -= den.c[j] * out.c[i - j];
        out.c[i] = acc / den.c[0];
    }
    return out;
}

}  // namespace crossnest
