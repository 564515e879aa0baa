#pragma once

#include "hocd/grid.hpp"

namespace hocd {

/// Richardson extrapolation in time: (4/3) fine - (1/3) coarse, nodewise.
///
/// `coarse` is the solve with (h, tau) and `fine` the solve with (h, tau/2) on the same grid and
/// at the same final time. Throws ConfigError otherwise.
Field1D extrapolate_time(const Field1D& coarse, const Field1D& fine);
Field2D extrapolate_time(const Field2D& coarse, const Field2D& fine);

/// Space-time variant: (16/15) fine(2j) - (1/15) coarse(j) on the coarse grid, where `fine` was
/// computed with (h/2, tau/4).
Field1D extrapolate_spacetime(const Field1D& coarse, const Field1D& fine);
Field2D extrapolate_spacetime(const Field2D& coarse, const Field2D& fine);

}  // namespace hocd
