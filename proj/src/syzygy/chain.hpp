#pragma once

#include "tvx/syzygy.hpp"

namespace tvx::detail {

MultiForm kappa_chain_head(int m, int n, int r, LatticePoint p);
Rational kappa_chain_tail(const MultiForm& head, int m, int n, int r, int i, int j);

}  // namespace tvx::detail
