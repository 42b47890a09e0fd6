#pragma once

#include "dbr/grading.hpp"

#include <vector>

namespace dbr {

// Truncated formal power series in t. The truncation order N travels with
// the value; binary operations demand equal orders, mixing is an error and
// never a silent coercion. Coefficient types: Rat, Vec, LinMap.
template <class T>
struct Series {
    int order = 0;
    std::vector<T> c; // size order + 1

    Series() : order(0), c(1) {}
    explicit Series(int n) : order(n), c(n + 1)
    {
        if (n < 0)
            throw input_error("negative series order");
    }
    static Series constant(const T& v, int n)
    {
        Series s(n);
        s.c[0] = v;
        return s;
    }

    const T& at(int k) const
    {
        if (k < 0 || k > order)
            throw input_error("series coefficient out of range");
        return c[k];
    }
    T& at(int k)
    {
        if (k < 0 || k > order)
            throw input_error("series coefficient out of range");
        return c[k];
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.order == b.order && a.c == b.c;
    }
};

namespace detail {
inline void require_same_order(int a, int b)
{
    if (a != b)
        throw input_error("formal series truncation order mismatch");
}
} // namespace detail

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b)
{
    detail::require_same_order(a.order, b.order);
    Series<T> out(a.order);
    for (int k = 0; k <= a.order; ++k)
        out.c[k] = a.c[k] + b.c[k];
    return out;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b)
{
    detail::require_same_order(a.order, b.order);
    Series<T> out(a.order);
    for (int k = 0; k <= a.order; ++k)
        out.c[k] = a.c[k] - b.c[k];
    return out;
}

template <class T>
Series<T> operator*(const Rat& s, const Series<T>& a)
{
    Series<T> out(a.order);
    for (int k = 0; k <= a.order; ++k)
        out.c[k] = s * a.c[k];
    return out;
}

template <class T>
Series<T> truncate(const Series<T>& a, int n)
{
    if (n > a.order)
        throw input_error("cannot raise series truncation order");
    Series<T> out(n);
    for (int k = 0; k <= n; ++k)
        out.c[k] = a.c[k];
    return out;
}

template <class T>
Series<T> lift(const Series<T>& a, int n)
{
    if (n < a.order)
        throw input_error("lift would drop series coefficients");
    Series<T> out(n);
    for (int k = 0; k <= a.order; ++k)
        out.c[k] = a.c[k];
    return out;
}

template <class T>
bool series_is_zero(const Series<T>& a)
{
    for (auto& v : a.c)
        if (!(v == T{}))
            return false;
    return true;
}

// d/dt lowers the known order by one; the derivative of an order-0 series
// is the zero series of order 0.
template <class T>
Series<T> differentiate_in_t(const Series<T>& a)
{
    Series<T> out(a.order > 0 ? a.order - 1 : 0);
    for (int k = 1; k <= a.order; ++k)
        out.c[k - 1] = Rat(k) * a.c[k];
    return out;
}

// Antiderivative with zero constant term; raises the order by one.
template <class T>
Series<T> integrate_in_t(const Series<T>& a)
{
    Series<T> out(a.order + 1);
    for (int k = 0; k <= a.order; ++k)
        out.c[k + 1] = Rat(1, k + 1) * a.c[k];
    return out;
}

// Generic convolution; the combiner supplies the coefficient product.
template <class T, class Mul>
Series<T> convolve(const Series<T>& a, const Series<T>& b, Mul mul)
{
    detail::require_same_order(a.order, b.order);
    Series<T> out(a.order);
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; i + j <= a.order; ++j)
            out.c[i + j] = out.c[i + j] + mul(a.c[i], b.c[j]);
    return out;
}

inline Series<Rat> operator*(const Series<Rat>& a, const Series<Rat>& b)
{
    return convolve(a, b, [](const Rat& x, const Rat& y) { return x * y; });
}

// Series of maps composed coefficientwise, (f.g)(x) = f(g(x)).
inline Series<LinMap> compose(const Series<LinMap>& f, const Series<LinMap>& g)
{
    return convolve(f, g, [](const LinMap& x, const LinMap& y) { return compose(x, y); });
}

inline Series<Vec> apply(const Series<LinMap>& f, const Series<Vec>& v)
{
    detail::require_same_order(f.order, v.order);
    Series<Vec> out(f.order);
    for (int i = 0; i <= f.order; ++i)
        for (int j = 0; i + j <= f.order; ++j)
            out.c[i + j] += f.c[i].apply(v.c[j]);
    return out;
}

inline Series<Vec> apply(const Series<LinMap>& f, const Vec& v)
{
    Series<Vec> out(f.order);
    for (int i = 0; i <= f.order; ++i)
        out.c[i] = f.c[i].apply(v);
    return out;
}

// Multiplicative inverse mod t^{N+1}. The leading coefficient must be a
// unit: nonzero for scalars, the identity map for LinMap series.
Series<Rat> invert(const Series<Rat>& a);
Series<LinMap> invert(const Series<LinMap>& a, int dim);

} // namespace dbr
