#include "qpc/weingarten.hpp"

#include <algorithm>
#include <mutex>

#include "qpc/error.hpp"

namespace qpc {

Counts counts(int k, std::optional<int> n0) {
    if (k < 1 || k > 12) throw size_error("counts: k must be in [1,12]");
    Counts c;
    // Stirling triangle S(n,l)
    std::vector<std::vector<BigInt>> s(k + 1, std::vector<BigInt>(k + 1, BigInt(0)));
    s[0][0] = 1;
    for (int n = 1; n <= k; ++n)
        for (int l = 1; l <= n; ++l) s[n][l] = s[n - 1][l - 1] + BigInt(l) * s[n - 1][l];
    c.stirling_row = s[k];
    c.bell = 0;
    for (int l = 0; l <= k; ++l) c.bell += s[k][l];
    // Catalan via the product formula
    BigInt num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= BigInt(2 * k - i);
        den *= BigInt(i + 1);
    }
    c.catalan = num / den / BigInt(k + 1);
    if (n0) {
        BigInt d(0);
        for (int l = 1; l <= std::min(k, *n0); ++l) d += s[k][l];
        c.dim_homP_at_n = d;
    }
    return c;
}

MatrixQN gram_matrix(int k) {
    if (k < 1 || k > 7) throw size_error("gram_matrix: k must be in [1,7]");
    auto nc = enumerate_partitions(k, PartitionFilter::Noncrossing);
    const int m = static_cast<int>(nc.size());
    MatrixQN g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            RatFuncN e(PolyN::monomial(join(nc[i], nc[j]).block_count()));
            g.at(i, j) = e;
            if (j != i) g.at(j, i) = e;
        }
    return g;
}

namespace {

// Gauss-Jordan inverse over Q(N); the Gram matrix is generically invertible.
MatrixQN invert(const MatrixQN& a) {
    const int n = a.rows();
    MatrixQN m = a, inv = MatrixQN::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) throw std::domain_error("invert: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RatFuncN d = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            if (!m.at(col, j).is_zero()) m.at(col, j) /= d;
            if (!inv.at(col, j).is_zero()) inv.at(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            RatFuncN f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
                if (!inv.at(col, j).is_zero()) inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

struct WeingartenCache {
    std::mutex mu;
    std::map<int, MatrixQN> w;
    std::map<int, std::vector<SetPartition>> nc;
    std::map<int, std::vector<SetPartition>> all;
    // per k: for each partition p in enumeration order, the indices of
    // noncrossing partitions refining p
    std::map<int, std::vector<std::vector<int>>> refiners;
    std::map<std::pair<SetPartition, SetPartition>, RatFuncN> moments;
};

WeingartenCache& cache() {
    static WeingartenCache c;
    return c;
}

void ensure_tables(int k) {
    auto& c = cache();
    if (c.refiners.count(k)) return;
    auto nc = enumerate_partitions(k, PartitionFilter::Noncrossing);
    auto all = enumerate_partitions(k, PartitionFilter::All);
    std::vector<std::vector<int>> ref(all.size());
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t i = 0; i < nc.size(); ++i)
            if (refines(nc[i], all[a])) ref[a].push_back(static_cast<int>(i));
    c.nc[k] = std::move(nc);
    c.all[k] = std::move(all);
    c.refiners[k] = std::move(ref);
}

int index_of(const std::vector<SetPartition>& v, const SetPartition& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    return static_cast<int>(it - v.begin());
}

}  // namespace

const MatrixQN& weingarten_matrix(int k) {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.w.find(k);
    if (it == c.w.end()) {
        ensure_tables(k);
        it = c.w.emplace(k, invert(gram_matrix(k))).first;
    }
    return it->second;
}

RatFuncN moment_by_kernels(const SetPartition& p, const SetPartition& q) {
    if (p.points() != q.points()) throw shape_error("moment: kernel size mismatch");
    const int k = p.points();
    if (k > 7) throw size_error("moment: k must be <= 7");
    const MatrixQN& w = weingarten_matrix(k);
    auto& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.moments.find({p, q});
        if (it != c.moments.end()) return it->second;
    }
    RatFuncN acc;
    {
        std::lock_guard<std::mutex> lock(c.mu);
        const auto& all = c.all.at(k);
        const auto& ref = c.refiners.at(k);
        const auto& ri = ref[index_of(all, p)];
        const auto& rj = ref[index_of(all, q)];
        for (int a : ri)
            for (int b : rj) acc += w.at(a, b);
        c.moments.emplace(std::make_pair(p, q), acc);
    }
    return acc;
}

RatFuncN moment(std::span<const int> i, std::span<const int> j) {
    if (i.size() != j.size()) throw shape_error("moment: index tuples differ in length");
    if (i.empty()) return RatFuncN(1);
    return moment_by_kernels(SetPartition::kernel_of_tuple(i), SetPartition::kernel_of_tuple(j));
}

namespace {

void combo_add(MomentCombo& combo, const MomentTermKey& key, const RatFuncN& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = combo.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) combo.erase(it);
    }
}

// partition of [k] from the blocks of base (on points 2..k, shifted up) with
// point 1 added to block b (or as a singleton for b = -1)
SetPartition extend_front(const SetPartition& base, int b) {
    const int k = base.points() + 1;
    std::vector<std::vector<int>> blocks = base.blocks();
    for (auto& blk : blocks)
        for (int& x : blk) ++x;
    if (b < 0) blocks.push_back({1});
    else blocks[b].push_back(1);
    return SetPartition::from_blocks(k, blocks);
}

void reduce_rec(const SetPartition& p, const SetPartition& q, const RatFuncN& coeff,
                MomentCombo& out) {
    const int k = p.points();
    int sp = p.lowest_singleton();
    int sq = q.lowest_singleton();
    if (sp == 0 && sq == 0) {
        combo_add(out, {p, q}, coeff);
        return;
    }
    const bool on_p = sp != 0;  // eliminate p's singletons first
    int s = on_p ? sp : sq;
    // rotate both kernels so the singleton sits at position 1 (moments are
    // invariant under simultaneous rotation)
    SetPartition pr = rotate(p, 1 - s);
    SetPartition qr = rotate(q, 1 - s);
    const SetPartition& holder = on_p ? pr : qr;  // has {1} as a singleton
    const SetPartition& other = on_p ? qr : pr;
    if (k == 1) {
        // phi({1},{1}) = (1/N) * phi(empty, empty)
        combo_add(out, {SetPartition(), SetPartition()}, coeff / RatFuncN(PolyN::variable()));
        return;
    }
    std::vector<int> tail(k - 1);
    for (int x = 2; x <= k; ++x) tail[x - 2] = x;
    SetPartition hp = restrict(holder, tail).q;  // holder without position 1
    SetPartition op = restrict(other, tail).q;   // other without position 1
    // phi(holder, other) = (1/alpha)(phi(hp, op) - sum_B phi(hp + 1->B, other)),
    // alpha = N - |hp| choices of the expanded index leaving 1 a singleton
    RatFuncN inner = coeff / RatFuncN(PolyN::variable() - PolyN(hp.block_count()));
    if (on_p) reduce_rec(hp, op, inner, out);
    else reduce_rec(op, hp, inner, out);
    for (int b = 0; b < hp.block_count(); ++b) {
        SetPartition joined = extend_front(hp, b);
        if (on_p) reduce_rec(joined, other, -inner, out);
        else reduce_rec(other, joined, -inner, out);
    }
}

}  // namespace

MomentCombo singleton_reduce(const SetPartition& p, const SetPartition& q) {
    if (p.points() != q.points()) throw shape_error("singleton_reduce: size mismatch");
    if (p.points() > 6) throw size_error("singleton_reduce: k must be <= 6");
    MomentCombo out;
    reduce_rec(p, q, RatFuncN(1), out);
    return out;
}

RatFuncN eval_moment_combo(const MomentCombo& combo) {
    RatFuncN acc;
    for (const auto& [key, c] : combo) {
        if (key.p.points() == 0) acc += c;  // empty moment is 1
        else acc += c * moment_by_kernels(key.p, key.q);
    }
    return acc;
}

ConsistencyReport moment_consistency(int k) {
    if (k < 1 || k > 5) throw size_error("moment_consistency: k must be in [1,5]");
    ConsistencyReport rep;
    rep.k = k;
    const PolyN n = PolyN::variable();
    // (a) expanding position 1 of the row index over [N] recovers the
    //     degree-(k-1) moment: phi(p',q') = sum_l phi(p_l, q)
    auto tails = (k >= 2) ? enumerate_partitions(k - 1, PartitionFilter::All)
                          : std::vector<SetPartition>{SetPartition()};
    auto qs = enumerate_partitions(k, PartitionFilter::All);
    std::vector<int> tail_pts(k - 1);
    for (int x = 2; x <= k; ++x) tail_pts[x - 2] = x;
    for (const auto& pp : tails) {
        for (const auto& q : qs) {
            ++rep.sum_identities_checked;
            RatFuncN lhs = (k == 1) ? RatFuncN(1)
                                    : moment_by_kernels(pp, restrict(q, tail_pts).q);
            RatFuncN rhs = RatFuncN(n - PolyN(pp.block_count())) *
                           moment_by_kernels(extend_front(pp, -1), q);
            for (int b = 0; b < pp.block_count(); ++b)
                rhs += moment_by_kernels(extend_front(pp, b), q);
            if (!(lhs == rhs)) ++rep.sum_identities_failed;
        }
    }
    // (b) related neighbours in p split in q (or vice versa) force a zero
    //     moment (row/column orthogonality of the magic unitary)
    if (k >= 2) {
        for (const auto& p : qs) {
            for (const auto& q : qs) {
                bool contradict = false;
                for (int x = 1; x < k && !contradict; ++x) {
                    if (p.same_block(x, x + 1) && !q.same_block(x, x + 1)) contradict = true;
                    if (q.same_block(x, x + 1) && !p.same_block(x, x + 1)) contradict = true;
                }
                if (!contradict) continue;
                ++rep.orthogonality_checked;
                if (!moment_by_kernels(p, q).is_zero()) ++rep.orthogonality_failed;
            }
        }
    }
    return rep;
}

}  // namespace qpc
