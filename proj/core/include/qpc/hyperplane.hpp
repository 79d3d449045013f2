#pragma once

#include <array>

#include "qpc/matrix.hpp"

namespace qpc {

// Maximal hyperplane intersection search: over all 4-subsets S of rows with
// rank(V_S) = 4, take the kernel vector of V_S and count the rows annihilating
// it, with the prune "count + remaining <= best -> break". Rows are the 71
// coordinate functionals beta_{.,j} of the kernel basis; columns number 5.
struct HyperplaneResult {
    int n0 = 0;                     // maximal number of hyperplanes meeting in a line
    std::array<int, 4> subset{};    // witnessing row indices (0-based)
    std::vector<PolyN> witness;     // generic mode: the intersection direction
    std::vector<BigRational> witness_rational;  // fixed-N mode
    long long subsets_tested = 0;   // 4-subsets with rank 4
};

HyperplaneResult hyperplane_search_generic(const std::vector<std::array<PolyN, 5>>& rows,
                                           int threads = 0);
HyperplaneResult hyperplane_search_at(const std::vector<std::array<PolyN, 5>>& rows,
                                      const BigRational& n, int threads = 0);

}  // namespace qpc
