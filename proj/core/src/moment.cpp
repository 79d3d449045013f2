#include "qpc/moment.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <span>
#include <thread>

#include "qpc/dense.hpp"
#include "qpc/error.hpp"

namespace qpc {

namespace {

int cyc(int x, int k) { return (x - 1) % k + 1; }

std::string pt_list(std::span<const int> pts) {
    std::string s;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pts[i]);
    }
    return s;
}

}  // namespace

MorphismFamily morphisms_k5() {
    MorphismFamily f;
    f.label = "k5";
    for (int x = 1; x <= 5; ++x)
        f.members.emplace_back("S_" + std::to_string(x), singleton_capping(5, x));
    for (int x = 1; x <= 4; ++x)
        f.members.emplace_back("M_{" + std::to_string(x) + "," + std::to_string(x + 1) + "}",
                               merge_pair(5, x, x + 1));
    f.members.emplace_back("M_{6,1}", merge_pair(5, 5, 1));
    return f;
}

MorphismFamily morphisms_k6_main() {
    MorphismFamily f;
    f.label = "k6-main";
    // (1) 15 restrictions R_kappa, kappa in P_4([6]) in lexicographic order
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c)
                for (int d = c + 1; d <= 6; ++d) {
                    std::vector<int> pts{a, b, c, d};
                    f.members.emplace_back("R_{" + pt_list(pts) + "}", restriction_diagram(6, pts));
                }
    // (2) 30 cap-one-merge-two maps
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) {
            if (y == x) continue;
            int partner = (cyc(y + 1, 6) == x) ? cyc(y + 2, 6) : cyc(y + 1, 6);
            TwoLinePartition cap_x = singleton_capping(6, x);
            // merge on the surviving five points: relabel y, partner through the capping
            auto shift = [&](int p) { return p < x ? p : p - 1; };
            TwoLinePartition merge = merge_pair(5, shift(y), shift(partner));
            auto [t, closed] = compose(cap_x, merge);
            (void)closed;
            f.members.emplace_back(
                "C_{" + std::to_string(x) + "," + std::to_string(y) + "}", t);
        }
    // (3) six cyclic semicircle cappings S_{x,x+1}
    for (int x = 1; x <= 6; ++x) {
        TwoLinePartition t;
        if (x < 6) {
            t = semicircle_capping(6, x, x + 1);
        } else {
            // S_{6,1}: merge blocks of 6 and 1, delete both
            std::vector<DiagramBlock> blocks;
            for (int p = 2; p <= 5; ++p) blocks.push_back({{p}, {p - 1}});
            blocks.push_back({{6, 1}, {}});
            t = diagram_from_blocks(6, 4, blocks);
        }
        f.members.emplace_back("S_{" + std::to_string(x) + "," + std::to_string(cyc(x + 1, 6)) + "}", t);
    }
    // (4) nine disjoint double merges of cyclically adjacent pairs
    for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b) {
            std::vector<int> t1{a, cyc(a + 1, 6)}, t2{b, cyc(b + 1, 6)};
            if (t1[0] > t1[1]) std::swap(t1[0], t1[1]);
            if (t2[0] > t2[1]) std::swap(t2[0], t2[1]);
            if (t1[0] == t2[0] || t1[0] == t2[1] || t1[1] == t2[0] || t1[1] == t2[1]) continue;
            TwoLinePartition first = merge_pair(6, t1[0], t1[1]);
            auto shift = [&](int p) {
                int removed = std::max(t1[0], t1[1]);  // the non-slot point of the first merge
                return p < removed ? p : p - 1;
            };
            TwoLinePartition second = merge_pair(5, shift(t2[0]), shift(t2[1]));
            auto [t, closed] = compose(first, second);
            (void)closed;
            f.members.emplace_back("W_{{" + pt_list(t1) + "},{" + pt_list(t2) + "}}", t);
        }
    }
    // (5) six triple merges {x,x+1,x+2}
    for (int x = 1; x <= 6; ++x)
        f.members.emplace_back("Y_" + std::to_string(x), merge_triple_cyclic(6, x));
    return f;
}

MorphismFamily morphisms_k6_aux() {
    MorphismFamily f;
    f.label = "k6-aux";
    for (int x = 1; x <= 6; ++x)
        f.members.emplace_back("S_" + std::to_string(x), singleton_capping(6, x));
    for (int x = 1; x <= 6; ++x)
        f.members.emplace_back("M_" + std::to_string(x), merge_adjacent_cyclic(6, x));
    for (int x = 1; x <= 6; ++x)
        f.members.emplace_back("F_" + std::to_string(x), triple_to_pair(6, x));
    return f;
}

namespace {

MatrixQN build_rows(const MorphismFamily& family, const std::vector<SetPartition>& columns,
                    const std::vector<SetPartition>& targets, std::vector<std::string>* names) {
    MatrixQN m(static_cast<int>(family.members.size() * targets.size()),
               static_cast<int>(columns.size()));
    int row = 0;
    for (const auto& [name, t] : family.members) {
        std::vector<std::pair<int, RatFuncN>> hits(columns.size(), {-1, RatFuncN()});
        for (size_t j = 0; j < columns.size(); ++j) {
            auto [composed, closed] = compose(TwoLinePartition::vector(columns[j]), t);
            SetPartition result = composed.lower_partition();
            for (size_t ti = 0; ti < targets.size(); ++ti)
                if (result == targets[ti]) {
                    hits[j] = {static_cast<int>(ti), RatFuncN(PolyN::monomial(closed))};
                    break;
                }
        }
        for (size_t ti = 0; ti < targets.size(); ++ti) {
            for (size_t j = 0; j < columns.size(); ++j)
                if (hits[j].first == static_cast<int>(ti)) m.at(row, static_cast<int>(j)) = hits[j].second;
            if (names) {
                std::string n = name;
                if (targets.size() > 1) n += "->" + targets[ti].str();
                names->push_back(std::move(n));
            }
            ++row;
        }
    }
    return m;
}

}  // namespace

MatrixQN build_matrix(const MorphismFamily& family, const std::vector<SetPartition>& columns) {
    return build_rows(family, columns, {SetPartition::basic_crossing()}, nullptr);
}

MatrixQN build_aux_rows(const MorphismFamily& aux, const std::vector<SetPartition>& columns) {
    return build_rows(aux, columns, enumerate_partitions(5, PartitionFilter::Crossing), nullptr);
}

PolyN k5_det_reference() {
    PolyN n = PolyN::variable();
    PolyN f = n * n - PolyN(3) * n + PolyN(1);
    return (n - PolyN(4)) * f * f;
}

namespace {

MomentMatrixReport analyze_base(int k, const MorphismFamily& family) {
    MomentMatrixReport rep;
    rep.k = k;
    rep.columns = enumerate_partitions(k, PartitionFilter::Crossing);
    std::vector<std::string> names;
    rep.matrix = build_rows(family, rep.columns, {SetPartition::basic_crossing()}, &names);
    rep.row_names = std::move(names);
    RankReport rr = rank_generic(rep.matrix);
    rep.generic_rank = rr.rank;
    rep.exceptional = rr.exceptional;
    rep.kernel_basis = nullspace_generic(rep.matrix);
    for (const auto& v : rep.kernel_basis) {
        int d = 0;
        for (const auto& p : v) d = std::max(d, p.degree());
        rep.kernel_degrees.push_back(d);
    }
    return rep;
}

std::vector<int> coordinate_permutation(const std::vector<SetPartition>& columns,
                                        const std::function<SetPartition(const SetPartition&)>& f) {
    std::vector<int> perm(columns.size());
    for (size_t j = 0; j < columns.size(); ++j) {
        SetPartition image = f(columns[j]);
        auto it = std::lower_bound(columns.begin(), columns.end(), image);
        if (it == columns.end() || !(*it == image))
            throw std::logic_error("coordinate action leaves the column set");
        perm[j] = static_cast<int>(it - columns.begin());
    }
    return perm;
}

// v' with v'[perm[j]] = v[j], i.e. the action xi_p -> xi_{f(p)} on coordinates
PolyVec permute_vec(const PolyVec& v, const std::vector<int>& perm) {
    PolyVec out(v.size());
    for (size_t j = 0; j < v.size(); ++j) out[perm[j]] = v[j];
    return out;
}

}  // namespace

K5Report analyze_k5() {
    K5Report rep;
    rep.base = analyze_base(5, morphisms_k5());
    rep.det = determinant(rep.base.matrix);
    PolyN ref = k5_det_reference();
    PolyN detp = rep.det.as_polynomial();
    rep.det_matches_reference = (detp - ref).is_zero() || (detp + ref).is_zero();
    rep.rank_at_4 = rank_at(rep.base.matrix, BigRational(4));
    // kernel at N = 4
    std::vector<std::vector<BigRational>> m4(rep.base.matrix.rows(),
                                             std::vector<BigRational>(rep.base.matrix.cols()));
    for (int i = 0; i < rep.base.matrix.rows(); ++i)
        for (int j = 0; j < rep.base.matrix.cols(); ++j)
            m4[i][j] = rep.base.matrix.at(i, j).eval(BigRational(4));
    // one-dimensional kernel expected: solve for it by dropping a dependent row set
    // via rational elimination on the transpose nullspace
    {
        // nullspace of m4: columns CR(5)
        const int rows = static_cast<int>(m4.size()), cols = rep.base.matrix.cols();
        std::vector<std::vector<BigRational>> a = m4;
        std::vector<int> pivot_cols;
        int next = 0;
        for (int col = 0; col < cols && next < rows; ++col) {
            int piv = -1;
            for (int i = next; i < rows; ++i)
                if (!qpc::is_zero(a[i][col])) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(a[next], a[piv]);
            for (int i = 0; i < rows; ++i) {
                if (i == next || qpc::is_zero(a[i][col])) continue;
                BigRational f = a[i][col] / a[next][col];
                for (int j = col; j < cols; ++j) a[i][j] -= f * a[next][j];
            }
            pivot_cols.push_back(col);
            ++next;
        }
        std::vector<bool> is_pivot(cols, false);
        for (int pc : pivot_cols) is_pivot[pc] = true;
        std::vector<std::vector<BigRational>> basis;
        for (int fcol = 0; fcol < cols; ++fcol) {
            if (is_pivot[fcol]) continue;
            std::vector<BigRational> x(cols, BigRational(0));
            x[fcol] = 1;
            for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
                BigRational acc(0);
                for (int j = pivot_cols[r] + 1; j < cols; ++j) acc += a[r][j] * x[j];
                x[pivot_cols[r]] = -acc / a[r][pivot_cols[r]];
            }
            basis.push_back(std::move(x));
        }
        if (basis.size() == 1) rep.kernel_at_4 = basis[0];
    }
    // eta pattern: +1 on three-block crossings, -2 on two-block ones, up to scale
    if (!rep.kernel_at_4.empty()) {
        BigRational scale;
        bool ok = true, have_scale = false;
        for (size_t j = 0; j < rep.base.columns.size(); ++j) {
            int blocks = rep.base.columns[j].block_count();
            BigRational expect = (blocks == 3) ? BigRational(1) : BigRational(-2);
            if (!have_scale) {
                if (qpc::is_zero(rep.kernel_at_4[j])) { ok = false; break; }
                scale = rep.kernel_at_4[j] / expect;
                have_scale = true;
            } else if (rep.kernel_at_4[j] != scale * expect) {
                ok = false;
                break;
            }
        }
        rep.kernel_is_eta = ok;
        // dense membership of eta in the noncrossing span at N = 4
        std::map<SetPartition, BigRational> eta;
        for (size_t j = 0; j < rep.base.columns.size(); ++j)
            eta[rep.base.columns[j]] =
                (rep.base.columns[j].block_count() == 3) ? BigRational(1) : BigRational(-2);
        rep.eta_in_nc_span_at_4 =
            dense_in_span(eta, enumerate_partitions(5, PartitionFilter::Noncrossing), 4);
    }
    return rep;
}

K6Report analyze_k6(const K6Options& opts) {
    K6Report rep;
    rep.base = analyze_base(6, morphisms_k6_main());
    rep.base.rank_at_n[4] = rank_at(rep.base.matrix, BigRational(4));
    if (opts.sweep) {
        int threads = opts.threads > 0 ? opts.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
        threads = std::max(1, threads);
        std::vector<int> ns;
        for (int n = opts.sweep_lo; n <= opts.sweep_hi; ++n) ns.push_back(n);
        std::vector<int> ranks(ns.size());
        std::atomic<size_t> idx{0};
        auto worker = [&]() {
            for (size_t i; (i = idx.fetch_add(1)) < ns.size();)
                ranks[i] = rank_at(rep.base.matrix, BigRational(ns[i]));
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < ns.size(); ++i) rep.base.rank_at_n[ns[i]] = ranks[i];
    }
    rep.kernel_degree_at_most_3 = true;
    for (int d : rep.base.kernel_degrees)
        if (d > 3) rep.kernel_degree_at_most_3 = false;
    if (opts.check_symmetry) {
        auto rot = coordinate_permutation(rep.base.columns,
                                          [](const SetPartition& p) { return rotate(p, 1); });
        auto refl = coordinate_permutation(rep.base.columns,
                                           [](const SetPartition& p) { return reflect(p); });
        rep.rotation_preserves_kernel = true;
        rep.reflection_preserves_kernel = true;
        rep.r3_fixes_kernel = true;
        for (const auto& v : rep.base.kernel_basis) {
            PolyVec vr = permute_vec(v, rot);
            PolyVec vs = permute_vec(v, refl);
            std::vector<RatFuncN> vr_r(vr.size()), vs_r(vs.size());
            for (size_t j = 0; j < vr.size(); ++j) {
                vr_r[j] = RatFuncN(vr[j]);
                vs_r[j] = RatFuncN(vs[j]);
            }
            if (!in_kernel(rep.base.matrix, vr_r)) rep.rotation_preserves_kernel = false;
            if (!in_kernel(rep.base.matrix, vs_r)) rep.reflection_preserves_kernel = false;
            PolyVec v3 = permute_vec(permute_vec(permute_vec(v, rot), rot), rot);
            for (size_t j = 0; j < v.size(); ++j)
                if (!((v3[j] - v[j]).is_zero())) { rep.r3_fixes_kernel = false; break; }
        }
    }
    if (opts.augment) {
        MatrixQN aux = build_aux_rows(morphisms_k6_aux(), rep.base.columns);
        rep.augmented_rows = aux.rows();
        rep.augmented_rank = rank_generic(rep.base.matrix.vstack(aux)).rank;
    }
    return rep;
}

HermitianFormReport hermitian_form_b(const K6Report& k6) {
    HermitianFormReport rep;
    const auto& cols = k6.base.columns;  // CR(6)
    const auto& v = k6.base.kernel_basis;
    if (v.size() != 5) throw std::logic_error("hermitian_form_b: expected a 5-dim kernel");
    // fixed diagram in P(12,4): cap 1,2,11,12; join {5,8}; join {6,7};
    // pass 3,4,9,10 through
    TwoLinePartition p = diagram_from_blocks(
        12, 4,
        {{{3}, {1}}, {{4}, {2}}, {{9}, {3}}, {{10}, {4}}, {{5, 8}, {}}, {{6, 7}, {}}});
    const SetPartition cross = SetPartition::basic_crossing();
    const size_t m = cols.size();
    // d, c tables over pairs (q, r)
    std::vector<std::vector<int>> closed_tbl(m, std::vector<int>(m, -1));
    for (size_t qi = 0; qi < m; ++qi) {
        for (size_t ri = 0; ri < m; ++ri) {
            TwoLinePartition qr = tensor(TwoLinePartition::vector(cols[qi]),
                                         TwoLinePartition::vector(reflect(cols[ri])));
            auto [composed, closed] = compose(qr, p);
            if (composed.lower_partition() == cross) closed_tbl[qi][ri] = closed;
        }
    }
    rep.b.assign(5, std::vector<PolyN>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            PolyN acc;
            for (size_t qi = 0; qi < m; ++qi) {
                if (v[i][qi].is_zero()) continue;
                for (size_t ri = 0; ri < m; ++ri) {
                    int c = closed_tbl[qi][ri];
                    if (c < 0 || v[j][ri].is_zero()) continue;
                    acc += v[i][qi] * v[j][ri] * PolyN::monomial(c);
                }
            }
            rep.b[i][j] = std::move(acc);
        }
    rep.symmetric = true;
    rep.zero_diagonal = true;
    for (int i = 0; i < 5; ++i) {
        if (!rep.b[i][i].is_zero()) rep.zero_diagonal = false;
        for (int j = 0; j < 5; ++j)
            if (!((rep.b[i][j] - rep.b[j][i]).is_zero())) rep.symmetric = false;
    }
    // positive definiteness at N = 6 by Sylvester's criterion on leading minors
    {
        std::vector<std::vector<BigRational>> b6(5, std::vector<BigRational>(5));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b6[i][j] = rep.b[i][j].eval(BigRational(6));
        bool pd = true;
        std::string note;
        for (int lead = 1; lead <= 5 && pd; ++lead) {
            MatrixQN mm(lead, lead);
            for (int i = 0; i < lead; ++i)
                for (int j = 0; j < lead; ++j) mm.at(i, j) = RatFuncN(BigRational(b6[i][j]));
            RatFuncN d = determinant(mm);
            BigRational dv = d.eval(BigRational(0));  // constant
            if (sgn(dv) <= 0) {
                pd = false;
                note = "leading principal minor " + std::to_string(lead) +
                       " at N=6 equals " + rational_str(dv);
            }
        }
        rep.positive_definite_at_6 = pd;
        rep.definiteness_note = note;
    }
    return rep;
}

}  // namespace qpc
