#pragma once

// Oracles and helpers shared by the test binaries. Nothing here calls the code under test
// except where a test explicitly feeds its output in.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "hocd/linalg.hpp"

namespace testing {

/// Fixed-seed generator; the same seed gives the same sequence on every run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

private:
    std::mt19937_64 engine_;
};

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double rel_diff(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

/// Exact rational arithmetic for small coefficient derivations.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational(long long n = 0, long long d = 1) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

/// Dense matrix in plain row-major form for oracle systems.
struct Dense {
    std::size_t n;
    std::vector<double> a;
    explicit Dense(std::size_t order) : n(order), a(order * order, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Gaussian elimination with partial pivoting, written independently of the library.
inline std::vector<double> gauss_solve(Dense m, std::vector<double> b) {
    const std::size_t n = m.n;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

inline Dense dense_of(const hocd::Tridiagonal& t) {
    Dense d(t.order());
    for (std::size_t i = 0; i < t.order(); ++i) {
        d(i, i) = t.diag[i];
        if (i + 1 < t.order()) {
            d(i, i + 1) = t.upper[i];
            d(i + 1, i) = t.lower[i];
        }
    }
    return d;
}

inline Dense dense_of(const hocd::BlockTridiagonal& b) {
    const std::size_t m = b.block_order();
    Dense d(b.order());
    const Dense diag = dense_of(b.diag_block);
    const Dense off = dense_of(b.off_block);
    for (std::size_t k = 0; k < b.n_blocks; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                d(k * m + i, k * m + j) = diag(i, j);
                if (k + 1 < b.n_blocks) {
                    d(k * m + i, (k + 1) * m + j) = b.sign_off * off(i, j);
                    d((k + 1) * m + i, k * m + j) = b.sign_off * off(i, j);
                }
            }
        }
    }
    return d;
}

inline std::vector<double> dense_apply(const Dense& m, std::span<const double> x) {
    std::vector<double> y(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) y[i] += m(i, j) * x[j];
    }
    return y;
}

/// Random tridiagonal matrix with |diag| exceeding the off-diagonal row sum by at least `margin`.
inline hocd::Tridiagonal random_dominant_tridiagonal(Rng& rng, std::size_t n, double margin = 0.5) {
    hocd::Tridiagonal t;
    t.lower.resize(n - 1);
    t.upper.resize(n - 1);
    t.diag.resize(n);
    for (auto& v : t.lower) v = rng.uniform(-1.0, 1.0);
    for (auto& v : t.upper) v = rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(t.lower[i - 1]);
        if (i + 1 < n) off += std::abs(t.upper[i]);
        const double mag = off + margin + rng.uniform(0.0, 2.0);
        t.diag[i] = rng.uniform(0.0, 1.0) < 0.5 ? -mag : mag;
    }
    return t;
}

/// Random block-tridiagonal matrix that is strictly row diagonally dominant as a whole.
inline hocd::BlockTridiagonal random_dominant_block(Rng& rng, std::size_t m, std::size_t n_blocks) {
    hocd::BlockTridiagonal b;
    b.n_blocks = n_blocks;
    b.sign_off = rng.uniform(0.0, 1.0) < 0.5 ? -1 : 1;
    b.off_block = random_dominant_tridiagonal(rng, m, 0.0);
    for (auto& v : b.off_block.diag) v = rng.uniform(-1.0, 1.0);
    b.diag_block = random_dominant_tridiagonal(rng, m);
    // Row dominance of the whole matrix: the diagonal also has to beat both off blocks.
    for (std::size_t i = 0; i < m; ++i) {
        double off = std::abs(b.off_block.diag[i]);
        if (i > 0) off += std::abs(b.off_block.lower[i - 1]);
        if (i + 1 < m) off += std::abs(b.off_block.upper[i]);
        b.diag_block.diag[i] += (b.diag_block.diag[i] < 0 ? -2.0 : 2.0) * off;
    }
    return b;
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);
    return v;
}

}  // namespace testing
