#pragma once

#include <cstdint>
#include <map>

#include "qpc/matrix.hpp"
#include "qpc/partition_vector.hpp"

namespace qpc {

inline constexpr size_t kDefaultDenseBudget = 10'000'000;  // entries

// Element of (Q^N0)^{tensor k}; index order: leftmost factor most significant.
struct DenseVector {
    int n0 = 0;
    int k = 0;
    std::vector<BigRational> entries;  // length n0^k
};

// Entry at (i_1..i_k) is 1 iff the tuple is constant on every block of p.
DenseVector expand_dense(const SetPartition& p, int n0, size_t budget = kDefaultDenseBudget);
// Rational combination with coefficients evaluated at N = n0.
DenseVector expand_dense(const PartitionVector& v, int n0, size_t budget = kDefaultDenseBudget);

// 0/1 matrix of T at N0, row-major, N0^lower rows by N0^upper columns.
std::vector<uint8_t> dense_matrix(const TwoLinePartition& t, int n0, size_t budget = kDefaultDenseBudget);
std::vector<BigRational> dense_apply(const std::vector<uint8_t>& m, int rows, int cols,
                                     const std::vector<BigRational>& v);

// dense(T) * v without materializing the N0^lower x N0^upper matrix.
DenseVector dense_apply_morphism(const TwoLinePartition& t, const DenseVector& v,
                                 size_t budget = kDefaultDenseBudget);

// All p in P(k) with at most n0 blocks (a basis of hom(0,k) at N = n0).
std::vector<SetPartition> gw_basis(int k, int n0);

// Gram matrix <xi_p, xi_q> = n0^{|p v q|} of the dense expansions.
std::vector<std::vector<BigInt>> gram_int(const std::vector<SetPartition>& ps, int n0);

// Exact rank of the dense expansions. Uses rank(A) = rank(A A^T) with the
// Gram matrix computed from joins, so n0^k entries are never materialized.
int dense_rank(const std::vector<SetPartition>& ps, int n0, size_t budget = kDefaultDenseBudget);

// Does the combination sum c_p xi_p (coefficients at N = n0) lie in the dense
// span of the given partitions?
bool dense_in_span(const std::map<SetPartition, BigRational>& combo,
                   const std::vector<SetPartition>& span_of, int n0);

// dim(span_NC intersect span_CR) on k points at N = n0, via Grassmann's formula.
int intersection_dim_nc_cr(int k, int n0, size_t budget = kDefaultDenseBudget);

// Coefficients c_p, p != discrete, with xi_discrete = sum c_p xi_p at N = k-1:
// c_p = (-1)^{|p|} prod_B (|B|-1)!.
std::map<SetPartition, BigRational> mobius_expand_discrete(int k);
// Check of that identity at N = k-1; every tuple condition reduces to its kernel,
// so it is the dense linear identity deduplicated by kernel.
bool mobius_verify(int k);

}  // namespace qpc
