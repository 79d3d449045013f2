#pragma once

#include <map>
#include <string>

#include "qpc/matrix.hpp"
#include "qpc/partition_vector.hpp"

namespace qpc {

struct MorphismFamily {
    std::string label;
    std::vector<std::pair<std::string, TwoLinePartition>> members;
};

// The ten maps P(5) -> P(4): five singleton cappings S_1..S_5, the four merge
// maps M_{1,2}..M_{4,5}, and the cyclic merge M_{6,1} of points 5 and 1.
MorphismFamily morphisms_k5();

// The 66 maps P(6) -> P(4): 15 restrictions R_kappa, 30 cap-one-merge-two maps
// (x capped, {y,y+1} merged, {y,y+2} when y+1=x, cyclically), 6 semicircle
// cappings S_{x,x+1}, 9 disjoint double merges, 6 triple merges.
MorphismFamily morphisms_k6_main();

// The 18 maps P(6) -> P(5): 6 singleton cappings, 6 cyclic merges, 6
// triple-to-pair maps. Each one contributes a row per target in CR(5).
MorphismFamily morphisms_k6_aux();

// Entry (T, p) = N^closed if T composed with p is exactly the basic crossing,
// else 0.
MatrixQN build_matrix(const MorphismFamily& family, const std::vector<SetPartition>& columns);

// One row per (morphism, target in CR(5)) pair; entry N^closed if T o p = target.
MatrixQN build_aux_rows(const MorphismFamily& aux, const std::vector<SetPartition>& columns);

struct MomentMatrixReport {
    int k = 0;
    std::vector<std::string> row_names;
    std::vector<SetPartition> columns;
    MatrixQN matrix;
    int generic_rank = 0;
    std::vector<PolyVec> kernel_basis;  // normalized polynomial vectors
    std::vector<int> kernel_degrees;    // max entry degree per basis vector
    std::vector<PolyN> exceptional;
    std::map<int, int> rank_at_n;       // specialization sweep results
};

// k=5 certificate: symbolic determinant, rank/kernel at N=4, eta membership.
struct K5Report {
    MomentMatrixReport base;
    RatFuncN det;
    bool det_matches_reference = false;  // +-(N-4)(N^2-3N+1)^2 by subtraction
    int rank_at_4 = 0;
    std::vector<BigRational> kernel_at_4;    // coordinates over CR(5) columns
    bool kernel_is_eta = false;              // +1 on |p|=3, -2 on |p|=2, up to scale
    bool eta_in_nc_span_at_4 = false;
};
K5Report analyze_k5();

struct K6Options {
    bool sweep = false;
    int sweep_lo = 5, sweep_hi = 200;
    bool check_symmetry = false;
    bool augment = false;
    int threads = 0;  // 0 = hardware
};
struct K6Report {
    MomentMatrixReport base;
    // dihedral action on ker M
    bool rotation_preserves_kernel = false;
    bool reflection_preserves_kernel = false;
    bool r3_fixes_kernel = false;
    bool kernel_degree_at_most_3 = false;
    int augmented_rows = 0;
    int augmented_rank = -1;
};
K6Report analyze_k6(const K6Options& opts = {});

// reference polynomial (N-4)(N^2-3N+1)^2, expanded
PolyN k5_det_reference();

// Hermitian form B from the kernel basis: B_ij = sum over q,r in CR(6) of
// V(q,i) V(r,j) N^c [p o (q tensor s(r)) = basic crossing], p the fixed
// 12 -> 4 diagram.
struct HermitianFormReport {
    std::vector<std::vector<PolyN>> b;  // 5x5
    bool symmetric = false;
    bool zero_diagonal = false;
    bool positive_definite_at_6 = false;
    std::string definiteness_note;
};
HermitianFormReport hermitian_form_b(const K6Report& k6);

}  // namespace qpc
