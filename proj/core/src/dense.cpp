#include "qpc/dense.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

namespace {

size_t checked_power(int n0, int k, size_t budget) {
    if (n0 < 1) throw argument_error("dense expansion: need N0 >= 1");
    size_t size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > budget / static_cast<size_t>(n0))
            throw budget_error("dense expansion of size " + std::to_string(n0) + "^" +
                               std::to_string(k) + " exceeds the budget of " +
                               std::to_string(budget) + " entries");
        size *= static_cast<size_t>(n0);
    }
    return size;
}

// call f(index) for every tuple index whose kernel is refined by p
template <typename F>
void for_each_coloring(const SetPartition& p, int n0, F&& f) {
    const int k = p.points();
    const int nb = p.block_count();
    // weight of point i in the mixed-radix index (leftmost most significant)
    std::vector<size_t> block_weight(nb, 0);
    size_t w = 1;
    for (int i = k; i >= 1; --i) {
        block_weight[p.block_index(i)] += w;
        w *= static_cast<size_t>(n0);
    }
    std::vector<int> color(nb, 0);
    while (true) {
        size_t idx = 0;
        for (int b = 0; b < nb; ++b) idx += block_weight[b] * static_cast<size_t>(color[b]);
        f(idx);
        int b = nb - 1;
        while (b >= 0 && color[b] == n0 - 1) color[b--] = 0;
        if (b < 0) break;
        ++color[b];
    }
}

}  // namespace

DenseVector expand_dense(const SetPartition& p, int n0, size_t budget) {
    DenseVector out;
    out.n0 = n0;
    out.k = p.points();
    out.entries.assign(checked_power(n0, out.k, budget), BigRational(0));
    for_each_coloring(p, n0, [&](size_t idx) { out.entries[idx] = 1; });
    return out;
}

DenseVector expand_dense(const PartitionVector& v, int n0, size_t budget) {
    DenseVector out;
    out.n0 = n0;
    out.k = v.k();
    out.entries.assign(checked_power(n0, out.k, budget), BigRational(0));
    for (const auto& [p, c] : v.terms()) {
        BigRational cv = c.eval(BigRational(n0));
        for_each_coloring(p, n0, [&](size_t idx) { out.entries[idx] += cv; });
    }
    return out;
}

std::vector<uint8_t> dense_matrix(const TwoLinePartition& t, int n0, size_t budget) {
    const int ku = t.upper(), kl = t.lower();
    size_t rows = checked_power(n0, kl, budget);
    size_t cols = checked_power(n0, ku, budget);
    if (rows > budget / std::max<size_t>(cols, 1))
        throw budget_error("dense matrix exceeds the entry budget");
    std::vector<uint8_t> m(rows * cols, 0);
    // iterate over block colorings of the body; upper points give the column index
    for_each_coloring(t.body(), n0, [&](size_t idx) {
        // idx is the mixed-radix index over all k+l points, upper first
        size_t col = idx / rows;  // top |ku| digits
        size_t row = idx % rows;
        m[row * cols + col] = 1;
    });
    return m;
}

std::vector<BigRational> dense_apply(const std::vector<uint8_t>& m, int rows, int cols,
                                     const std::vector<BigRational>& v) {
    if (static_cast<size_t>(cols) != v.size() || m.size() != static_cast<size_t>(rows) * cols)
        throw shape_error("dense_apply: dimension mismatch");
    std::vector<BigRational> out(rows, BigRational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (m[static_cast<size_t>(i) * cols + j]) out[i] += v[j];
    return out;
}

DenseVector dense_apply_morphism(const TwoLinePartition& t, const DenseVector& v, size_t budget) {
    if (t.upper() != v.k) throw shape_error("dense_apply_morphism: shape mismatch");
    const int n0 = v.n0;
    const int ku = t.upper(), kl = t.lower();
    DenseVector out;
    out.n0 = n0;
    out.k = kl;
    out.entries.assign(checked_power(n0, kl, budget), BigRational(0));
    const SetPartition& body = t.body();
    const int nb = body.block_count();
    // classify blocks: those with upper points are pinned by the input tuple,
    // lower-only blocks range freely
    std::vector<bool> has_upper(nb, false);
    for (int x = 1; x <= ku; ++x) has_upper[body.block_index(x)] = true;
    std::vector<int> free_blocks;
    for (int b = 0; b < nb; ++b)
        if (!has_upper[b]) free_blocks.push_back(b);
    std::vector<size_t> lower_weight(nb, 0);
    {
        size_t w = 1;
        for (int x = kl; x >= 1; --x) {
            lower_weight[body.block_index(ku + x)] += w;
            w *= static_cast<size_t>(n0);
        }
    }
    std::vector<int> fb;  // free blocks that do reach the lower row
    for (int b : free_blocks)
        if (lower_weight[b] > 0) fb.push_back(b);
    std::vector<int> digits(ku), block_val(nb);
    for (size_t in_idx = 0; in_idx < v.entries.size(); ++in_idx) {
        if (qpc::is_zero(v.entries[in_idx])) continue;
        size_t rem = in_idx;
        for (int x = ku; x >= 1; --x) {
            digits[x - 1] = static_cast<int>(rem % n0);
            rem /= n0;
        }
        // pin block values from the upper tuple; conflicting digits mean delta = 0
        std::fill(block_val.begin(), block_val.end(), -1);
        bool ok = true;
        for (int x = 1; x <= ku && ok; ++x) {
            int b = body.block_index(x);
            if (block_val[b] == -1) block_val[b] = digits[x - 1];
            else if (block_val[b] != digits[x - 1]) ok = false;
        }
        if (!ok) continue;
        size_t base = 0;
        for (int b = 0; b < nb; ++b)
            if (block_val[b] >= 0) base += lower_weight[b] * static_cast<size_t>(block_val[b]);
        std::vector<int> fv(fb.size(), 0);
        while (true) {
            size_t idx = base;
            for (size_t i = 0; i < fb.size(); ++i)
                idx += lower_weight[fb[i]] * static_cast<size_t>(fv[i]);
            out.entries[idx] += v.entries[in_idx];
            size_t i = fb.size();
            while (i > 0 && fv[i - 1] == n0 - 1) fv[--i] = 0;
            if (i == 0) break;
            ++fv[i - 1];
        }
    }
    return out;
}

std::vector<SetPartition> gw_basis(int k, int n0) {
    std::vector<SetPartition> out;
    for (auto& p : enumerate_partitions(k, PartitionFilter::All))
        if (p.block_count() <= n0) out.push_back(std::move(p));
    return out;
}

std::vector<std::vector<BigInt>> gram_int(const std::vector<SetPartition>& ps, int n0) {
    const size_t m = ps.size();
    std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            int jb = join(ps[i], ps[j]).block_count();
            g[i][j] = int_pow(BigInt(n0), jb);
            if (j != i) g[j][i] = g[i][j];
        }
    return g;
}

int dense_rank(const std::vector<SetPartition>& ps, int n0, size_t budget) {
    if (ps.empty()) return 0;
    checked_power(n0, ps.front().points(), budget);
    return rank_int(gram_int(ps, n0));
}

bool dense_in_span(const std::map<SetPartition, BigRational>& combo,
                   const std::vector<SetPartition>& span_of, int n0) {
    // v in rowspan(A) iff rank([A;v][A;v]^T) = rank(A A^T); inner products come
    // from joins, entries never materialize
    const size_t m = span_of.size();
    BigInt base(n0);
    std::vector<std::vector<BigRational>> g(m + 1, std::vector<BigRational>(m + 1, BigRational(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            g[i][j] = BigRational(int_pow(base, join(span_of[i], span_of[j]).block_count()));
            g[j][i] = g[i][j];
        }
    for (size_t i = 0; i < m; ++i) {
        BigRational acc(0);
        for (const auto& [q, c] : combo)
            acc += c * BigRational(int_pow(base, join(span_of[i], q).block_count()));
        g[i][m] = acc;
        g[m][i] = acc;
    }
    {
        BigRational acc(0);
        for (const auto& [q, c] : combo)
            for (const auto& [r, d] : combo)
                acc += c * d * BigRational(int_pow(base, join(q, r).block_count()));
        g[m][m] = acc;
    }
    std::vector<std::vector<BigRational>> top(m);
    for (size_t i = 0; i < m; ++i) top[i] = std::vector<BigRational>(g[i].begin(), g[i].end() - 1);
    int rank_a = rank_rational(std::move(top));
    int rank_aug = rank_rational(std::move(g));
    return rank_aug == rank_a;
}

int intersection_dim_nc_cr(int k, int n0, size_t budget) {
    if (k != n0 + 2)
        throw argument_error("intersection_dim_nc_cr: defined for k = N0+2");
    auto nc = enumerate_partitions(k, PartitionFilter::Noncrossing);
    auto cr = enumerate_partitions(k, PartitionFilter::Crossing);
    auto all = enumerate_partitions(k, PartitionFilter::All);
    int dim_nc = dense_rank(nc, n0, budget);
    int dim_cr = dense_rank(cr, n0, budget);
    int dim_all = dense_rank(all, n0, budget);
    return dim_nc + dim_cr - dim_all;
}

std::map<SetPartition, BigRational> mobius_expand_discrete(int k) {
    if (k < 2 || k > 8) throw size_error("mobius_expand_discrete: k must be in [2,8]");
    std::map<SetPartition, BigRational> out;
    const SetPartition disc = SetPartition::singletons(k);
    for (const auto& p : enumerate_partitions(k, PartitionFilter::All)) {
        if (p == disc) continue;
        BigInt prod(1);
        for (int s : p.block_sizes()) {
            BigInt f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s - 1));
            prod *= f;
        }
        // c_p = -mobius(discrete, p) = (-1)^{k-|p|+1} prod_B (|B|-1)!
        // (for odd k this is (-1)^{|p|} prod_B (|B|-1)!)
        if ((k - p.block_count() + 1) % 2 != 0) prod = -prod;
        out.emplace(p, BigRational(prod));
    }
    return out;
}

bool mobius_verify(int k) {
    // xi_discrete = sum c_p xi_p at N0 = k-1 iff, for every kernel m realizable
    // there (|m| <= k-1), the refinement sums agree: sum_{p <= m, p != disc} c_p = 1
    auto coeffs = mobius_expand_discrete(k);
    auto all = enumerate_partitions(k, PartitionFilter::All);
    const SetPartition disc = SetPartition::singletons(k);
    for (const auto& m : all) {
        if (m.block_count() > k - 1) continue;
        BigRational sum(0);
        for (const auto& p : all) {
            if (p == disc || !refines(p, m)) continue;
            sum += coeffs.at(p);
        }
        if (sum != 1) return false;
    }
    return true;
}

}  // namespace qpc
