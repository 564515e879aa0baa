#pragma once

#include <span>

#include "hocd/linalg.hpp"

namespace hocd {

/// Execution policy for the data-parallel kernels. Serial is the reference; Parallel uses
/// OpenMP over independent outputs and produces bit-identical results.
enum class Exec { Serial, Parallel };

/// y = m x for a block-tridiagonal operator.
void apply_block_tridiagonal(const BlockTridiagonal& m, std::span<const double> x, std::span<double> y,
                             Exec exec = Exec::Serial);

/// Number of OpenMP threads available to Exec::Parallel (1 when built without OpenMP).
int parallel_threads();

}  // namespace hocd
