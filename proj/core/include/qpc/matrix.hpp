#pragma once

#include <optional>
#include <vector>

#include "qpc/ratfunc.hpp"

namespace qpc {

using PolyVec = std::vector<PolyN>;
using PolyMat = std::vector<PolyVec>;

// Dense matrix over Q(N).
class MatrixQN {
  public:
    MatrixQN() : rows_(0), cols_(0) {}
    MatrixQN(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols) {}
    static MatrixQN identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFuncN& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
    const RatFuncN& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

    // stack other's rows below this one (column counts must agree)
    MatrixQN vstack(const MatrixQN& other) const;
    MatrixQN transposed() const;
    std::vector<RatFuncN> apply(const std::vector<RatFuncN>& v) const;  // M*v

  private:
    int rows_, cols_;
    std::vector<RatFuncN> entries_;
};

struct RankReport {
    int rank = 0;
    std::vector<int> pivot_cols;
    // Candidate exceptional polynomials: every pivot produced by the elimination,
    // primitive and deduplicated. The rank at an integer N0 can only drop if N0
    // is a root of one of these.
    std::vector<PolyN> exceptional;
};

// Rank over Q(N) by fraction-free elimination with per-row content removal.
RankReport rank_generic(const MatrixQN& m);

// Basis of the right kernel over Q(N). Each vector is normalized: denominators
// cleared, content divided out, first nonzero entry with positive leading coefficient.
std::vector<PolyVec> nullspace_generic(const MatrixQN& m);

// Exact determinant (Bareiss). Throws shape_error if not square.
RatFuncN determinant(const MatrixQN& m);

// Rank after substituting N = n0. Throws specialization_error if any entry's
// denominator vanishes there.
int rank_at(const MatrixQN& m, const BigRational& n0);

// Coordinates x with M*x = v over Q(N), free variables set to zero;
// nullopt when v is outside the column span.
std::optional<std::vector<RatFuncN>> solve_column_span(const MatrixQN& m,
                                                       const std::vector<RatFuncN>& v);
std::optional<std::vector<BigRational>> solve_column_span_at(const MatrixQN& m,
                                                             const std::vector<RatFuncN>& v,
                                                             const BigRational& n0);
bool in_kernel(const MatrixQN& m, const std::vector<RatFuncN>& v);

// Rational linear algebra helpers (also used by specialization sweeps).
int rank_rational(std::vector<std::vector<BigRational>> m);
// Fraction-free integer rank (Bareiss), for big Gram matrices.
int rank_int(std::vector<std::vector<BigInt>> m);
std::optional<std::vector<BigRational>> solve_rational(std::vector<std::vector<BigRational>> a,
                                                       std::vector<BigRational> b);

// Row echelon form over Q[N], division-free with content stripping.
struct PolyEchelon {
    PolyMat rows;                 // echelon rows, primitive
    std::vector<int> pivot_cols;  // one per echelon row
    std::vector<PolyN> pivots;
    int cols = 0;
};
PolyEchelon poly_echelon(PolyMat m, int cols);

// Clear denominators of a MatrixQN row-by-row into polynomial rows (rank-preserving).
PolyMat to_poly_rows(const MatrixQN& m);

}  // namespace qpc
