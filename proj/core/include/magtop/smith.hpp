#pragma once

#include <cstddef>
#include <vector>

#include "magtop/chain_complex.hpp"
#include "magtop/rational.hpp"

namespace magtop {

struct SNFResult {
    /// Nonzero invariant factors, each dividing the next.
    std::vector<Integer> diag;
    std::size_t rank = 0;
};

/// Smith normal form over the integers. Unit pivots are eliminated sparsely
/// first; the remaining block goes through dense elimination with
/// smallest-absolute-value pivots.
SNFResult smith_normal_form(const IntMatrix& A);

/// Invariant factors of the diagonal matrix with the given nonzero entries.
std::vector<Integer> invariant_factors(std::vector<Integer> diagonal);

}  // namespace magtop
