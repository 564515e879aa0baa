#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hocd {

/// Tridiagonal matrix of order n stored as three bands.
struct Tridiagonal {
    std::vector<double> lower;  // n-1 entries, row i+1 column i
    std::vector<double> diag;   // n entries
    std::vector<double> upper;  // n-1 entries, row i column i+1

    /// Order n with constant bands (Toeplitz), as used by every scheme here.
    static Tridiagonal constant(std::size_t n, double sub, double main, double super);

    std::size_t order() const noexcept { return diag.size(); }
    /// Throws SizeError if the band lengths are inconsistent.
    void validate() const;
    bool strictly_diagonally_dominant() const;
};

/// Block-tridiagonal matrix with the same diagonal block on every diagonal position and
/// sign_off * off_block on both block off-diagonals.
struct BlockTridiagonal {
    Tridiagonal diag_block;
    Tridiagonal off_block;
    std::size_t n_blocks = 1;
    int sign_off = 1;

    std::size_t block_order() const noexcept { return diag_block.order(); }
    std::size_t order() const noexcept { return n_blocks * block_order(); }
    void validate() const;
};

/// Row-major dense square matrix.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    explicit DenseMatrix(std::size_t order = 0) : n(order), data(order * order, 0.0) {}

    double operator()(std::size_t i, std::size_t j) const noexcept { return data[i * n + j]; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data[i * n + j]; }
};

DenseMatrix expand(const Tridiagonal& m);
DenseMatrix expand(const BlockTridiagonal& m);

std::vector<double> multiply(const Tridiagonal& m, std::span<const double> x);
std::vector<double> multiply(const BlockTridiagonal& m, std::span<const double> x);
std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x);

/// Thomas recursion without pivoting. The caller guarantees the matrix is nonsingular
/// (the H-OCD operators are strictly diagonally dominant).
std::vector<double> thomas_solve(const Tridiagonal& m, std::span<const double> rhs);

/// Gaussian elimination with partial pivoting. Used as an oracle by the tests.
std::vector<double> dense_solve(DenseMatrix m, std::span<const double> rhs);

/// Precomputed Thomas factorization, reused across time steps.
class TridiagonalFactor {
public:
    explicit TridiagonalFactor(const Tridiagonal& m);

    std::size_t order() const noexcept { return inv_pivot_.size(); }
    /// Solves in place.
    void solve(std::span<double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> inv_pivot_;
    std::vector<double> upper_scaled_;
};

/// Block LU of a BlockTridiagonal matrix.
///
/// With S_1 = D and S_k = D - O S_{k-1}^{-1} O (O = sign_off * off_block), the factor stores the
/// dense blocks S_k^{-1} and S_k^{-1} O, so each solve costs two dense mat-vecs per block.
class BlockTridiagonalFactor {
public:
    explicit BlockTridiagonalFactor(const BlockTridiagonal& m);

    std::size_t order() const noexcept { return n_blocks_ * m_; }
    void solve(std::span<double> x) const;

private:
    std::size_t n_blocks_;
    std::size_t m_;
    Tridiagonal off_;  // already multiplied by sign_off
    std::vector<double> inv_schur_;    // n_blocks dense m x m blocks
    std::vector<double> inv_schur_off_;
};

std::vector<double> block_thomas_solve(const BlockTridiagonal& m, std::span<const double> rhs);

}  // namespace hocd
