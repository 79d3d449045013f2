#pragma once

#include <map>
#include <optional>
#include <span>

#include "qpc/matrix.hpp"
#include "qpc/partition.hpp"

namespace qpc {

struct Counts {
    BigInt bell;
    BigInt catalan;
    std::vector<BigInt> stirling_row;  // S(k,0..k)
    std::optional<BigInt> dim_homP_at_n;  // sum_{l<=N0} S(k,l)
};
Counts counts(int k, std::optional<int> n0 = std::nullopt);

// Gram matrix over NC(k) in enumeration order: G(p,q) = N^{|p v q|}.
MatrixQN gram_matrix(int k);

// Exact inverse of the Gram matrix over Q(N); cached per k. k <= 7.
const MatrixQN& weingarten_matrix(int k);

// Haar-state moment h(u_{i1 j1} ... u_{ik jk}) = sum over noncrossing p <= ker i,
// q <= ker j of W(p,q). Index tuples take values in {1..}; only kernels matter.
RatFuncN moment(std::span<const int> i, std::span<const int> j);
RatFuncN moment_by_kernels(const SetPartition& p, const SetPartition& q);

// Formal combination of moments; keys are kernel pairs of a common order.
struct MomentTermKey {
    SetPartition p, q;
    friend auto operator<=>(const MomentTermKey&, const MomentTermKey&) = default;
};
using MomentCombo = std::map<MomentTermKey, RatFuncN>;

// Eliminate singletons: rewrite phi(p,q) as a combination of terms of lower
// order or with singleton-free partitions, expanding one magic-unitary row or
// column sum at a time (the lowest singleton is rotated to position 1 first).
MomentCombo singleton_reduce(const SetPartition& p, const SetPartition& q);

// Evaluate a combination with the direct Weingarten moment.
RatFuncN eval_moment_combo(const MomentCombo& combo);

struct ConsistencyReport {
    int k = 0;
    int sum_identities_checked = 0;
    int sum_identities_failed = 0;
    int orthogonality_checked = 0;
    int orthogonality_failed = 0;
    bool ok() const { return sum_identities_failed == 0 && orthogonality_failed == 0; }
};
// Degree-k row sums against degree-(k-1) moments, and vanishing for kernels
// with related neighbours in one partition split in the other. k <= 5.
ConsistencyReport moment_consistency(int k);

}  // namespace qpc
