#pragma once

#include <optional>
#include <vector>

#include "ghost/rational.hpp"

namespace ghost {

// Element of Q(sqrt(2)): a + b*sqrt(2).  Exact arithmetic; the conjugator
// below needs sqrt(2) on its middle block to pair the split form correctly.
struct Q2 {
    Rational a, b;

    Q2() = default;
    Q2(Rational a_) : a(a_) {}
    Q2(Rational a_, Rational b_) : a(a_), b(b_) {}

    static Q2 sqrt2() { return Q2(Rational(0), Rational(1)); }

    bool is_rational() const { return b == Rational(0); }
    bool is_zero() const { return a == Rational(0) && b == Rational(0); }

    friend Q2 operator+(const Q2& x, const Q2& y) { return Q2(x.a + y.a, x.b + y.b); }
    friend Q2 operator-(const Q2& x, const Q2& y) { return Q2(x.a - y.a, x.b - y.b); }
    friend Q2 operator*(const Q2& x, const Q2& y) {
        return Q2(x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend bool operator==(const Q2& x, const Q2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Q2& x, const Q2& y) { return !(x == y); }
};

using Q2Matrix = std::vector<std::vector<Q2>>;

inline Q2Matrix zero_matrix(int size) {
    return Q2Matrix(size, std::vector<Q2>(size, Q2()));
}

// diag(1, 1, -1, ..., -1) of size n + 2: the signature (2, n) form.
inline Q2Matrix signature_form(int n) {
    Q2Matrix m = zero_matrix(n + 2);
    for (int i = 0; i < n + 2; ++i) m[i][i] = Q2(Rational(i < 2 ? 1 : -1));
    return m;
}

// Split form with two hyperbolic pairs on the outside and the identity on
// the middle block.
inline Q2Matrix split_form(int n) {
    Q2Matrix m = zero_matrix(n + 2);
    m[0][n + 1] = Q2(Rational(1));
    m[1][n] = Q2(Rational(1));
    for (int i = 2; i <= n - 1; ++i) m[i][i] = Q2(Rational(1));
    m[n][1] = Q2(Rational(1));
    m[n + 1][0] = Q2(Rational(1));
    return m;
}

// Base change taking the signature form to a multiple of the split form.
// The outer 2x2 blocks pair the definite plane with the last coordinates;
// the middle block carries sqrt(2) so that all diagonal pairings come out to
// the same scalar.
inline Q2Matrix conjugator_matrix(int n) {
    Q2Matrix x = zero_matrix(n + 2);
    x[0][0] = Q2(Rational(1));
    x[0][n + 1] = Q2(Rational(-1));
    x[1][1] = Q2(Rational(1));
    x[1][n] = Q2(Rational(-1));
    for (int i = 2; i <= n - 1; ++i) x[i][i] = Q2::sqrt2();
    x[n][1] = Q2(Rational(1));
    x[n][n] = Q2(Rational(1));
    x[n + 1][0] = Q2(Rational(1));
    x[n + 1][n + 1] = Q2(Rational(1));
    return x;
}

inline Q2Matrix transpose(const Q2Matrix& m) {
    int size = static_cast<int>(m.size());
    Q2Matrix t = zero_matrix(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) t[j][i] = m[i][j];
    return t;
}

inline Q2Matrix multiply(const Q2Matrix& x, const Q2Matrix& y) {
    int size = static_cast<int>(x.size());
    Q2Matrix out = zero_matrix(size);
    for (int i = 0; i < size; ++i)
        for (int k = 0; k < size; ++k) {
            if (x[i][k].is_zero()) continue;
            for (int j = 0; j < size; ++j) out[i][j] = out[i][j] + x[i][k] * y[k][j];
        }
    return out;
}

// The scalar mu with  X^t I X = mu J, if one exists (it does, and equals -2,
// for every n >= 3; the computation is exact, nothing is asserted).
inline std::optional<Rational> form_conjugation_scalar(int n) {
    if (n < 3) return std::nullopt;
    Q2Matrix x = conjugator_matrix(n);
    Q2Matrix m = multiply(multiply(transpose(x), signature_form(n)), x);
    Q2Matrix j = split_form(n);
    Q2 mu = m[0][n + 1];  // j[0][n+1] == 1
    if (!mu.is_rational()) return std::nullopt;
    for (int r = 0; r < n + 2; ++r)
        for (int s = 0; s < n + 2; ++s)
            if (m[r][s] != mu * j[r][s]) return std::nullopt;
    return mu.a;
}

}  // namespace ghost
