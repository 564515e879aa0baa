#include "hocd/kernels.hpp"

#include <string>

#include "hocd/error.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hocd {

namespace {

// y_k = O x_{k-1} + D x_k + O x_{k+1} for one block row k.
inline void apply_block_row(const BlockTridiagonal& m, std::span<const double> x, std::span<double> y, std::size_t k) {
    const std::size_t b = m.block_order();
    const double sgn = static_cast<double>(m.sign_off);
    const Tridiagonal& d = m.diag_block;
    const Tridiagonal& o = m.off_block;
    const double* xc = x.data() + k * b;
    const double* xp = k > 0 ? xc - b : nullptr;
    const double* xn = k + 1 < m.n_blocks ? xc + b : nullptr;
    double* out = y.data() + k * b;
    for (std::size_t i = 0; i < b; ++i) {
        double s = d.diag[i] * xc[i];
        if (i > 0) s += d.lower[i - 1] * xc[i - 1];
        if (i + 1 < b) s += d.upper[i] * xc[i + 1];
        double off = 0.0;
        for (const double* v : {xp, xn}) {
            if (v == nullptr) continue;
            double t = o.diag[i] * v[i];
            if (i > 0) t += o.lower[i - 1] * v[i - 1];
            if (i + 1 < b) t += o.upper[i] * v[i + 1];
            off += t;
        }
        out[i] = s + sgn * off;
    }
}

}  // namespace

void apply_block_tridiagonal(const BlockTridiagonal& m, std::span<const double> x, std::span<double> y, Exec exec) {
    if (x.size() != m.order() || y.size() != m.order()) {
        throw SizeError("block-tridiagonal apply: vector length " + std::to_string(x.size()) + "/" +
                        std::to_string(y.size()) + " does not match order " + std::to_string(m.order()));
    }
    const auto n_blocks = static_cast<long>(m.n_blocks);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long k = 0; k < n_blocks; ++k) {
            apply_block_row(m, x, y, static_cast<std::size_t>(k));
        }
    } else {
        for (long k = 0; k < n_blocks; ++k) {
            apply_block_row(m, x, y, static_cast<std::size_t>(k));
        }
    }
}

int parallel_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hocd
