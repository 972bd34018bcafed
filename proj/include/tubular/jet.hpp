#pragma once

#include <array>
#include <cmath>

namespace tubular {

/// Truncated Taylor series in one variable: c[k] is the k-th Taylor
/// coefficient, so derivative m equals c[m] * m!. Order N-1 is enough for
/// the C^4 bounds the smoothing certificates track.
template <int N>
struct Jet {
    std::array<double, N> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double v) {
        Jet j;
        j.c[0] = v;
        if constexpr (N > 1) j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    double derivative(int m) const {
        double f = 1.0;
        for (int i = 2; i <= m; ++i) f *= i;
        return c[m] * f;
    }

    Jet operator-() const {
        Jet r;
        for (int i = 0; i < N; ++i) r.c[i] = -c[i];
        return r;
    }
};

template <int N>
Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; i + j < N; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, double s) {
    Jet<N> r;
    for (int i = 0; i < N; ++i) r.c[i] = a.c[i] * s;
    return r;
}

template <int N>
Jet<N> operator*(double s, const Jet<N>& a) {
    return a * s;
}

template <int N>
Jet<N> operator+(const Jet<N>& a, double s) {
    Jet<N> r = a;
    r.c[0] += s;
    return r;
}

template <int N>
Jet<N> operator-(double s, const Jet<N>& a) {
    Jet<N> r = -a;
    r.c[0] += s;
    return r;
}

/// 1/a, requires a.c[0] != 0. Coefficients from the standard recurrence
/// b0 = 1/a0, b_k = -(sum_{j=1..k} a_j b_{k-j}) / a0.
template <int N>
Jet<N> recip(const Jet<N>& a) {
    Jet<N> b;
    b.c[0] = 1.0 / a.c[0];
    for (int k = 1; k < N; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += a.c[j] * b.c[k - j];
        b.c[k] = -s / a.c[0];
    }
    return b;
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
    return a * recip(b);
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
    // exp(a0 + g) = e^{a0} * sum g^n / n! with g the nilpotent part
    Jet<N> g = a;
    g.c[0] = 0.0;
    Jet<N> term = Jet<N>::constant(1.0);
    Jet<N> sum = term;
    for (int n = 1; n < N; ++n) {
        term = term * g * (1.0 / n);
        sum = sum + term;
    }
    return sum * std::exp(a.c[0]);
}

using Jet5 = Jet<5>;

}  // namespace tubular
