#include "qpc/matrix.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

MatrixQN MatrixQN::identity(int n) {
    MatrixQN m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFuncN(1);
    return m;
}

MatrixQN MatrixQN::vstack(const MatrixQN& other) const {
    if (cols_ != other.cols_) throw shape_error("vstack: column count mismatch");
    MatrixQN out(rows_ + other.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < other.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

MatrixQN MatrixQN::transposed() const {
    MatrixQN out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<RatFuncN> MatrixQN::apply(const std::vector<RatFuncN>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw shape_error("apply: dimension mismatch");
    std::vector<RatFuncN> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        RatFuncN acc;
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            acc += at(i, j) * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

PolyMat to_poly_rows(const MatrixQN& m) {
    PolyMat rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        PolyN lcm(1);
        for (int j = 0; j < m.cols(); ++j) {
            const PolyN& d = m.at(i, j).den();
            if (d.degree() > 0) lcm = (lcm * d).divexact(PolyN::gcd(lcm, d));
        }
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            const RatFuncN& e = m.at(i, j);
            rows[i][j] = e.num() * lcm.divexact(e.den());
        }
    }
    return rows;
}

namespace {

void strip_row(PolyVec& row) {
    // divide out the rational content of the whole row, keep integer coprime coeffs
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        BigRational c = p.content();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;
    BigRational content(num_gcd, den_lcm);
    content.canonicalize();
    if (content == 1) return;
    for (auto& p : row) {
        if (p.is_zero()) continue;
        std::vector<BigRational> cs = p.coeffs();
        for (auto& c : cs) c /= content;
        p = PolyN(std::move(cs));
    }
}

int first_nonzero(const PolyVec& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return static_cast<int>(j);
    return -1;
}

}  // namespace

PolyEchelon poly_echelon(PolyMat m, int cols) {
    // One-step Bareiss: every working entry is a minor of the (content-stripped)
    // input, so the division by the previous pivot is exact and degrees stay
    // linear in the elimination depth.
    PolyEchelon ech;
    ech.cols = cols;
    for (auto& row : m) strip_row(row);
    PolyN prev(1);
    size_t next = 0;  // rows above are settled
    for (int col = 0; col < cols && next < m.size(); ++col) {
        // pivot of minimal degree keeps growth down
        size_t best = m.size();
        for (size_t i = next; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            if (best == m.size() || m[i][col].degree() < m[best][col].degree()) best = i;
        }
        if (best == m.size()) continue;
        std::swap(m[next], m[best]);
        const PolyVec& prow = m[next];
        const PolyN piv = prow[col];
        for (size_t i = next + 1; i < m.size(); ++i) {
            PolyN factor = m[i][col];
            if (factor.is_zero()) {
                for (int j = col; j < cols; ++j)
                    if (!m[i][j].is_zero()) m[i][j] = (m[i][j] * piv).divexact(prev);
            } else {
                for (int j = col; j < cols; ++j) {
                    PolyN t = m[i][j] * piv - factor * prow[j];
                    m[i][j] = t.is_zero() ? PolyN() : t.divexact(prev);
                }
            }
        }
        prev = piv;
        ech.pivot_cols.push_back(col);
        ech.pivots.push_back(piv);
        ++next;
    }
    // drop the all-zero tail rows
    m.resize(next);
    ech.rows = std::move(m);
    return ech;
}

RankReport rank_generic(const MatrixQN& m) {
    PolyEchelon ech = poly_echelon(to_poly_rows(m), m.cols());
    RankReport rep;
    rep.rank = static_cast<int>(ech.pivot_cols.size());
    rep.pivot_cols = ech.pivot_cols;
    std::vector<PolyN> ex;
    for (const auto& p : ech.pivots) {
        if (p.degree() <= 0) continue;
        PolyN prim = p.primitive_part();
        if (sgn(prim.leading()) < 0) prim = -prim;
        ex.push_back(prim);
    }
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end(), [](const PolyN& a, const PolyN& b) { return PolyN::cmp(a, b) == 0; }),
             ex.end());
    rep.exceptional = std::move(ex);
    return rep;
}

namespace {

// back-substitute on echelon rows for x with prescribed free values; pivot entries solved
std::vector<RatFuncN> back_substitute(const PolyEchelon& ech, std::vector<RatFuncN> x) {
    for (int r = static_cast<int>(ech.rows.size()) - 1; r >= 0; --r) {
        int pc = ech.pivot_cols[r];
        RatFuncN acc;
        for (int j = pc + 1; j < ech.cols; ++j) {
            if (ech.rows[r][j].is_zero() || x[j].is_zero()) continue;
            acc += RatFuncN(ech.rows[r][j]) * x[j];
        }
        x[pc] = -acc / RatFuncN(ech.rows[r][pc]);
    }
    return x;
}

PolyVec normalize_kernel_vector(const std::vector<RatFuncN>& x) {
    PolyN lcm(1);
    for (const auto& e : x) {
        const PolyN& d = e.den();
        if (d.degree() > 0) lcm = (lcm * d).divexact(PolyN::gcd(lcm, d));
    }
    PolyVec v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = x[i].num() * lcm.divexact(x[i].den());
    strip_row(v);
    int fn = first_nonzero(v);
    if (fn >= 0 && sgn(v[fn].leading()) < 0)
        for (auto& p : v) p = -p;
    return v;
}

}  // namespace

std::vector<PolyVec> nullspace_generic(const MatrixQN& m) {
    PolyEchelon ech = poly_echelon(to_poly_rows(m), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int pc : ech.pivot_cols) is_pivot[pc] = true;
    std::vector<PolyVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFuncN> x(m.cols());
        x[f] = RatFuncN(1);
        x = back_substitute(ech, std::move(x));
        basis.push_back(normalize_kernel_vector(x));
    }
    return basis;
}

RatFuncN determinant(const MatrixQN& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return RatFuncN(1);
    PolyMat a = to_poly_rows(m);
    RatFuncN scale(1);  // det(m) = det(a) / prod(row multipliers)
    for (int i = 0; i < n; ++i) {
        PolyN lcm(1);
        for (int j = 0; j < n; ++j) {
            const PolyN& d = m.at(i, j).den();
            if (d.degree() > 0) lcm = (lcm * d).divexact(PolyN::gcd(lcm, d));
        }
        if (lcm.degree() > 0) scale *= RatFuncN(lcm);
    }
    // Bareiss: exact divisions, no content stripping
    int sign = 1;
    PolyN prev(1);
    for (int r = 0; r < n - 1; ++r) {
        if (a[r][r].is_zero()) {
            int sw = -1;
            for (int i = r + 1; i < n; ++i)
                if (!a[i][r].is_zero()) { sw = i; break; }
            if (sw < 0) return RatFuncN(0);
            std::swap(a[r], a[sw]);
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i) {
            for (int j = r + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[r][r] - a[i][r] * a[r][j]).divexact(prev);
            a[i][r] = PolyN();
        }
        prev = a[r][r];
    }
    PolyN det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return RatFuncN(det) / scale;
}

int rank_rational(std::vector<std::vector<BigRational>> m) {
    if (m.empty()) return 0;
    const int cols = static_cast<int>(m[0].size());
    size_t next = 0;
    for (int col = 0; col < cols && next < m.size(); ++col) {
        size_t piv = m.size();
        for (size_t i = next; i < m.size(); ++i)
            if (!qpc::is_zero(m[i][col])) { piv = i; break; }
        if (piv == m.size()) continue;
        std::swap(m[next], m[piv]);
        for (size_t i = next + 1; i < m.size(); ++i) {
            if (qpc::is_zero(m[i][col])) continue;
            BigRational f = m[i][col] / m[next][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[next][j];
        }
        ++next;
    }
    return static_cast<int>(next);
}

int rank_int(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const int cols = static_cast<int>(m[0].size());
    BigInt prev(1);
    size_t next = 0;
    for (int col = 0; col < cols && next < m.size(); ++col) {
        size_t best = m.size();
        for (size_t i = next; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            if (best == m.size() || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0)
                best = i;
        }
        if (best == m.size()) continue;
        std::swap(m[next], m[best]);
        const BigInt piv = m[next][col];
        for (size_t i = next + 1; i < m.size(); ++i) {
            const BigInt factor = m[i][col];
            for (int j = col; j < cols; ++j) {
                BigInt t = m[i][j] * piv - factor * m[next][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
        ++next;
    }
    return static_cast<int>(next);
}

int rank_at(const MatrixQN& m, const BigRational& n0) {
    std::vector<std::vector<BigRational>> a(m.rows(), std::vector<BigRational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).eval(n0);
    return rank_rational(std::move(a));
}

std::optional<std::vector<RatFuncN>> solve_column_span(const MatrixQN& m,
                                                       const std::vector<RatFuncN>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw shape_error("solve: dimension mismatch");
    MatrixQN aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    PolyEchelon ech = poly_echelon(to_poly_rows(aug), aug.cols());
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r)
        if (ech.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent row
    // treat the augmented column as x_last = -1, free vars zero
    std::vector<RatFuncN> x(aug.cols());
    x[m.cols()] = RatFuncN(-1);
    x = back_substitute(ech, std::move(x));
    x.resize(m.cols());
    return x;
}

std::optional<std::vector<BigRational>> solve_rational(std::vector<std::vector<BigRational>> a,
                                                       std::vector<BigRational> b) {
    const size_t rows = a.size();
    if (rows == 0) return std::vector<BigRational>{};
    const int cols = static_cast<int>(a[0].size());
    std::vector<int> pivot_col;
    size_t next = 0;
    for (int col = 0; col < cols && next < rows; ++col) {
        size_t piv = rows;
        for (size_t i = next; i < rows; ++i)
            if (!qpc::is_zero(a[i][col])) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[next], a[piv]);
        std::swap(b[next], b[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == next || qpc::is_zero(a[i][col])) continue;
            BigRational f = a[i][col] / a[next][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[next][j];
            b[i] -= f * b[next];
        }
        pivot_col.push_back(col);
        ++next;
    }
    for (size_t i = next; i < rows; ++i)
        if (!qpc::is_zero(b[i])) return std::nullopt;
    std::vector<BigRational> x(cols, BigRational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return x;
}

std::optional<std::vector<BigRational>> solve_column_span_at(const MatrixQN& m,
                                                             const std::vector<RatFuncN>& v,
                                                             const BigRational& n0) {
    if (static_cast<int>(v.size()) != m.rows()) throw shape_error("solve_at: dimension mismatch");
    std::vector<std::vector<BigRational>> a(m.rows(), std::vector<BigRational>(m.cols()));
    std::vector<BigRational> b(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).eval(n0);
        b[i] = v[i].eval(n0);
    }
    return solve_rational(std::move(a), std::move(b));
}

bool in_kernel(const MatrixQN& m, const std::vector<RatFuncN>& v) {
    for (const auto& e : m.apply(v))
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace qpc
