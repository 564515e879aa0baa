#include "hocd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hocd/error.hpp"
#include "hocd/kernels.hpp"

namespace hocd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw SizeError(std::string(what) + ": expected length " + std::to_string(want) + ", got " +
                        std::to_string(got));
    }
}

// In-place LU with partial pivoting of the dense m x m block at `a`, then overwrite `inv` with
// its inverse. Returns false if a pivot vanishes to working precision.
bool invert_dense(std::vector<double>& a, std::size_t m, double* inv) {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    const double tiny = kEps * static_cast<double>(m) * scale;
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
        }
        if (!(std::abs(a[piv * m + col]) > tiny)) return false;
        if (piv != col) {
            for (std::size_t c = 0; c < m; ++c) std::swap(a[piv * m + c], a[col * m + c]);
            std::swap(perm[piv], perm[col]);
        }
        const double inv_p = 1.0 / a[col * m + col];
        for (std::size_t r = col + 1; r < m; ++r) {
            const double f = a[r * m + col] * inv_p;
            a[r * m + col] = f;
            for (std::size_t c = col + 1; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
        }
    }

    // Solve L U X = P I column by column.
    std::vector<double> e(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) e[i] = (perm[i] == k) ? 1.0 : 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            double s = e[i];
            for (std::size_t c = 0; c < i; ++c) s -= a[i * m + c] * e[c];
            e[i] = s;
        }
        for (std::size_t ii = m; ii-- > 0;) {
            double s = e[ii];
            for (std::size_t c = ii + 1; c < m; ++c) s -= a[ii * m + c] * e[c];
            e[ii] = s / a[ii * m + ii];
        }
        for (std::size_t i = 0; i < m; ++i) inv[i * m + k] = e[i];
    }
    return true;
}

}  // namespace

Tridiagonal Tridiagonal::constant(std::size_t n, double sub, double main, double super) {
    if (n == 0) throw SizeError("tridiagonal order must be at least 1");
    return Tridiagonal{std::vector<double>(n - 1, sub), std::vector<double>(n, main),
                       std::vector<double>(n - 1, super)};
}

void Tridiagonal::validate() const {
    if (diag.empty()) throw SizeError("tridiagonal order must be at least 1");
    require_size(lower.size(), diag.size() - 1, "tridiagonal lower band");
    require_size(upper.size(), diag.size() - 1, "tridiagonal upper band");
}

bool Tridiagonal::strictly_diagonally_dominant() const {
    const std::size_t n = order();
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(lower[i - 1]);
        if (i + 1 < n) off += std::abs(upper[i]);
        if (!(std::abs(diag[i]) > off)) return false;
    }
    return true;
}

void BlockTridiagonal::validate() const {
    diag_block.validate();
    off_block.validate();
    if (n_blocks == 0) throw SizeError("block-tridiagonal matrix needs at least one block");
    require_size(off_block.order(), diag_block.order(), "off-diagonal block order");
    if (sign_off != 1 && sign_off != -1) throw ConfigError("sign_off must be +1 or -1");
}

DenseMatrix expand(const Tridiagonal& m) {
    m.validate();
    const std::size_t n = m.order();
    DenseMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = m.diag[i];
        if (i + 1 < n) {
            d(i, i + 1) = m.upper[i];
            d(i + 1, i) = m.lower[i];
        }
    }
    return d;
}

DenseMatrix expand(const BlockTridiagonal& m) {
    m.validate();
    const std::size_t b = m.block_order();
    DenseMatrix d(m.order());
    const DenseMatrix diag = expand(m.diag_block);
    const DenseMatrix off = expand(m.off_block);
    for (std::size_t k = 0; k < m.n_blocks; ++k) {
        for (std::size_t i = 0; i < b; ++i) {
            for (std::size_t j = 0; j < b; ++j) {
                d(k * b + i, k * b + j) = diag(i, j);
                if (k + 1 < m.n_blocks) {
                    d(k * b + i, (k + 1) * b + j) = m.sign_off * off(i, j);
                    d((k + 1) * b + i, k * b + j) = m.sign_off * off(i, j);
                }
            }
        }
    }
    return d;
}

std::vector<double> multiply(const Tridiagonal& m, std::span<const double> x) {
    m.validate();
    const std::size_t n = m.order();
    require_size(x.size(), n, "tridiagonal multiply");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = m.diag[i] * x[i];
        if (i > 0) s += m.lower[i - 1] * x[i - 1];
        if (i + 1 < n) s += m.upper[i] * x[i + 1];
        y[i] = s;
    }
    return y;
}

std::vector<double> multiply(const BlockTridiagonal& m, std::span<const double> x) {
    m.validate();
    require_size(x.size(), m.order(), "block-tridiagonal multiply");
    std::vector<double> y(m.order());
    apply_block_tridiagonal(m, x, y, Exec::Serial);
    return y;
}

std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x) {
    require_size(x.size(), m.n, "dense multiply");
    std::vector<double> y(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

TridiagonalFactor::TridiagonalFactor(const Tridiagonal& m) {
    m.validate();
    const std::size_t n = m.order();
    double scale = 0.0;
    for (double v : m.diag) scale = std::max(scale, std::abs(v));
    for (double v : m.lower) scale = std::max(scale, std::abs(v));
    for (double v : m.upper) scale = std::max(scale, std::abs(v));
    const double tiny = kEps * scale;

    lower_ = m.lower;
    inv_pivot_.resize(n);
    upper_scaled_.resize(n > 0 ? n - 1 : 0);
    double pivot = m.diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) pivot = m.diag[i] - m.lower[i - 1] * upper_scaled_[i - 1];
        if (!(std::abs(pivot) > tiny)) {
            throw SingularMatrixError("zero pivot in tridiagonal elimination", i);
        }
        inv_pivot_[i] = 1.0 / pivot;
        if (i + 1 < n) upper_scaled_[i] = m.upper[i] * inv_pivot_[i];
    }
}

void TridiagonalFactor::solve(std::span<double> x) const {
    const std::size_t n = order();
    require_size(x.size(), n, "tridiagonal solve");
    x[0] *= inv_pivot_[0];
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = (x[i] - lower_[i - 1] * x[i - 1]) * inv_pivot_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= upper_scaled_[i] * x[i + 1];
    }
}

std::vector<double> thomas_solve(const Tridiagonal& m, std::span<const double> rhs) {
    const TridiagonalFactor factor(m);
    std::vector<double> x(rhs.begin(), rhs.end());
    factor.solve(x);
    return x;
}

std::vector<double> dense_solve(DenseMatrix a, std::span<const double> rhs) {
    const std::size_t n = a.n;
    require_size(rhs.size(), n, "dense solve");
    if (n == 0) return {};
    std::vector<double> b(rhs.begin(), rhs.end());
    double scale = 0.0;
    for (double v : a.data) scale = std::max(scale, std::abs(v));
    const double tiny = kEps * static_cast<double>(n) * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        }
        if (!(std::abs(a(piv, col)) > tiny)) {
            throw SingularMatrixError("matrix is singular to working precision", col);
        }
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

BlockTridiagonalFactor::BlockTridiagonalFactor(const BlockTridiagonal& m)
    : n_blocks_(m.n_blocks), m_(m.block_order()), off_(m.off_block) {
    m.validate();
    for (double& v : off_.lower) v *= m.sign_off;
    for (double& v : off_.diag) v *= m.sign_off;
    for (double& v : off_.upper) v *= m.sign_off;

    const std::size_t mm = m_ * m_;
    inv_schur_.assign(n_blocks_ * mm, 0.0);
    inv_schur_off_.assign(n_blocks_ * mm, 0.0);
    const DenseMatrix diag = expand(m.diag_block);
    std::vector<double> schur(mm);

    for (std::size_t k = 0; k < n_blocks_; ++k) {
        schur = diag.data;
        if (k > 0) {
            // schur -= O * H_{k-1}, O tridiagonal
            const double* h_prev = &inv_schur_off_[(k - 1) * mm];
            for (std::size_t i = 0; i < m_; ++i) {
                for (std::size_t j = 0; j < m_; ++j) {
                    double s = off_.diag[i] * h_prev[i * m_ + j];
                    if (i > 0) s += off_.lower[i - 1] * h_prev[(i - 1) * m_ + j];
                    if (i + 1 < m_) s += off_.upper[i] * h_prev[(i + 1) * m_ + j];
                    schur[i * m_ + j] -= s;
                }
            }
        }
        double* g = &inv_schur_[k * mm];
        if (!invert_dense(schur, m_, g)) {
            throw SingularMatrixError("singular diagonal block in block elimination", k);
        }
        // H_k = G_k * O
        double* h = &inv_schur_off_[k * mm];
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                double s = g[i * m_ + j] * off_.diag[j];
                if (j > 0) s += g[i * m_ + j - 1] * off_.upper[j - 1];
                if (j + 1 < m_) s += g[i * m_ + j + 1] * off_.lower[j];
                h[i * m_ + j] = s;
            }
        }
    }
}

void BlockTridiagonalFactor::solve(std::span<double> x) const {
    require_size(x.size(), order(), "block-tridiagonal solve");
    const std::size_t mm = m_ * m_;
    std::vector<double> t(m_);

    // Forward: y_k = G_k (f_k - O y_{k-1})
    for (std::size_t k = 0; k < n_blocks_; ++k) {
        double* f = x.data() + k * m_;
        if (k > 0) {
            const double* y_prev = f - m_;
            for (std::size_t i = 0; i < m_; ++i) {
                double s = off_.diag[i] * y_prev[i];
                if (i > 0) s += off_.lower[i - 1] * y_prev[i - 1];
                if (i + 1 < m_) s += off_.upper[i] * y_prev[i + 1];
                f[i] -= s;
            }
        }
        const double* g = &inv_schur_[k * mm];
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            const double* row = g + i * m_;
            for (std::size_t j = 0; j < m_; ++j) s += row[j] * f[j];
            t[i] = s;
        }
        std::copy(t.begin(), t.end(), f);
    }
    // Backward: x_k = y_k - H_k x_{k+1}
    for (std::size_t k = n_blocks_ - 1; k-- > 0;) {
        double* xk = x.data() + k * m_;
        const double* xn = xk + m_;
        const double* h = &inv_schur_off_[k * mm];
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            const double* row = h + i * m_;
            for (std::size_t j = 0; j < m_; ++j) s += row[j] * xn[j];
            xk[i] -= s;
        }
    }
}

std::vector<double> block_thomas_solve(const BlockTridiagonal& m, std::span<const double> rhs) {
    const BlockTridiagonalFactor factor(m);
    std::vector<double> x(rhs.begin(), rhs.end());
    factor.solve(x);
    return x;
}

}  // namespace hocd
