#include "qpc/hyperplane.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "qpc/error.hpp"

namespace qpc {

namespace {

// Signed maximal minors of a 4x5 integer matrix: t_i = (-1)^i det(drop col i).
// V * t = 0 by cofactor expansion, and t = 0 iff rank(V) < 4.
std::array<BigInt, 5> cross_vector(const std::array<const std::array<BigInt, 5>*, 4>& rows) {
    // 2x2 minors of rows (0,1) and rows (2,3): P[a][b] = r0[a]*r1[b] - r0[b]*r1[a]
    BigInt p01[5][5], p23[5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            p01[a][b] = (*rows[0])[a] * (*rows[1])[b] - (*rows[0])[b] * (*rows[1])[a];
            p23[a][b] = (*rows[2])[a] * (*rows[3])[b] - (*rows[2])[b] * (*rows[3])[a];
        }
    std::array<BigInt, 5> t;
    static constexpr int combos[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                         {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    static constexpr int combo_sign[6] = {+1, -1, +1, +1, -1, +1};
    for (int drop = 0; drop < 5; ++drop) {
        int cols[4], n = 0;
        for (int c = 0; c < 5; ++c)
            if (c != drop) cols[n++] = c;
        // Laplace along the first two rows over complementary column pairs
        BigInt det(0);
        for (int s = 0; s < 6; ++s) {
            int a = cols[combos[s][0]], b = cols[combos[s][1]];
            int c = cols[combos[s][2]], d = cols[combos[s][3]];
            if (combo_sign[s] > 0) det += p01[a][b] * p23[c][d];
            else det -= p01[a][b] * p23[c][d];
        }
        t[drop] = (drop % 2 == 0) ? det : -det;
    }
    return t;
}

struct IntSearch {
    const std::vector<std::array<BigInt, 5>>& rows;
    int threads;

    int best_count = 0;
    std::array<int, 4> best_subset{};
    std::array<BigInt, 5> best_t{};

    explicit IntSearch(const std::vector<std::array<BigInt, 5>>& r, int th) : rows(r), threads(th) {}

    // count rows orthogonal to t, pruning against bound
    int count_zeros(const std::array<BigInt, 5>& t, int bound) const {
        const int n = static_cast<int>(rows.size());
        int count = 0;
        BigInt acc;
        for (int i = 0; i < n; ++i) {
            if (count + (n - i) <= bound) break;
            acc = 0;
            for (int c = 0; c < 5; ++c) acc += rows[i][c] * t[c];
            if (acc == 0) ++count;
        }
        return count;
    }

    void run() {
        const int n = static_cast<int>(rows.size());
        std::atomic<int> shared_best{0};
        std::atomic<int> next_s0{0};
        std::mutex mu;
        auto worker = [&]() {
            for (int s0; (s0 = next_s0.fetch_add(1)) < n - 3;) {
                for (int s1 = s0 + 1; s1 < n - 2; ++s1)
                    for (int s2 = s1 + 1; s2 < n - 1; ++s2)
                        for (int s3 = s2 + 1; s3 < n; ++s3) {
                            std::array<const std::array<BigInt, 5>*, 4> sel{
                                &rows[s0], &rows[s1], &rows[s2], &rows[s3]};
                            std::array<BigInt, 5> t = cross_vector(sel);
                            bool zero = true;
                            for (const auto& v : t)
                                if (v != 0) { zero = false; break; }
                            if (zero) continue;  // rank < 4
                            int bound = shared_best.load(std::memory_order_relaxed);
                            int count = count_zeros(t, bound);
                            if (count > bound) {
                                std::lock_guard<std::mutex> lock(mu);
                                if (count > shared_best.load(std::memory_order_relaxed))
                                    shared_best.store(count, std::memory_order_relaxed);
                            }
                        }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        best_count = shared_best.load();
        // deterministic witness: first subset in lexicographic order reaching best_count
        for (int s0 = 0; s0 < n - 3; ++s0)
            for (int s1 = s0 + 1; s1 < n - 2; ++s1)
                for (int s2 = s1 + 1; s2 < n - 1; ++s2)
                    for (int s3 = s2 + 1; s3 < n; ++s3) {
                        std::array<const std::array<BigInt, 5>*, 4> sel{
                            &rows[s0], &rows[s1], &rows[s2], &rows[s3]};
                        std::array<BigInt, 5> t = cross_vector(sel);
                        bool zero = true;
                        for (const auto& v : t)
                            if (v != 0) { zero = false; break; }
                        if (zero) continue;
                        if (count_zeros(t, best_count - 1) >= best_count) {
                            best_subset = {s0, s1, s2, s3};
                            best_t = std::move(t);
                            return;
                        }
                    }
    }
};

BigInt max_abs_coeff(const std::vector<std::array<PolyN, 5>>& rows) {
    BigInt c0(1);
    for (const auto& row : rows)
        for (const auto& p : row)
            for (const auto& coeff : p.coeffs()) {
                if (coeff.get_den() != 1)
                    throw argument_error("hyperplane rows must have integer coefficients");
                BigInt a = abs(coeff.get_num());
                if (a > c0) c0 = a;
            }
    return c0;
}

void normalize_int_vector(std::array<BigInt, 5>& t) {
    BigInt g(0);
    for (const auto& v : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return;
    int lead_sign = 0;
    for (const auto& v : t)
        if (v != 0) { lead_sign = sgn(v); break; }
    if (lead_sign < 0) g = -g;
    for (auto& v : t) v /= g;
}

}  // namespace

HyperplaneResult hyperplane_search_generic(const std::vector<std::array<PolyN, 5>>& rows,
                                           int threads) {
    if (rows.size() < 4) throw argument_error("hyperplane search needs at least 4 rows");
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    // Every polynomial tested for zero is a dot product <row, minors>, an
    // integer polynomial of degree <= 5*maxdeg with |coefficients| <= B below.
    // Evaluating at N* >= B+2 is then a zero test: |p(N*)| > 0 for p != 0.
    int maxdeg = 0;
    for (const auto& row : rows)
        for (const auto& p : row) maxdeg = std::max(maxdeg, p.degree());
    BigInt c0 = max_abs_coeff(rows);
    const BigInt terms(maxdeg + 1);
    BigInt b2 = 2 * c0 * c0 * terms;                     // 2x2 minors
    BigInt b4 = 6 * b2 * b2 * (2 * terms);               // 4x4 minors via complementary pairs
    BigInt bdot = 5 * b4 * c0 * terms;                   // final dot products
    BigInt nstar = bdot + 2;
    std::vector<std::array<BigInt, 5>> eval(rows.size());
    BigRational ns(nstar);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int c = 0; c < 5; ++c) eval[i][c] = rows[i][c].eval(ns).get_num();
    IntSearch search(eval, threads);
    search.run();
    HyperplaneResult out;
    out.n0 = search.best_count;
    out.subset = search.best_subset;
    // recompute the witness symbolically for the winning subset
    std::array<const std::array<PolyN, 5>*, 4> sel{&rows[out.subset[0]], &rows[out.subset[1]],
                                                   &rows[out.subset[2]], &rows[out.subset[3]]};
    PolyN p01[5][5], p23[5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            p01[a][b] = (*sel[0])[a] * (*sel[1])[b] - (*sel[0])[b] * (*sel[1])[a];
            p23[a][b] = (*sel[2])[a] * (*sel[3])[b] - (*sel[2])[b] * (*sel[3])[a];
        }
    static constexpr int combos[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                         {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    static constexpr int combo_sign[6] = {+1, -1, +1, +1, -1, +1};
    out.witness.resize(5);
    for (int drop = 0; drop < 5; ++drop) {
        int cols[4], n = 0;
        for (int c = 0; c < 5; ++c)
            if (c != drop) cols[n++] = c;
        PolyN det;
        for (int s = 0; s < 6; ++s) {
            PolyN term = p01[cols[combos[s][0]]][cols[combos[s][1]]] *
                         p23[cols[combos[s][2]]][cols[combos[s][3]]];
            if (combo_sign[s] > 0) det += term;
            else det -= term;
        }
        out.witness[drop] = (drop % 2 == 0) ? det : -det;
    }
    // strip the common polynomial-free content for a tidy witness
    {
        BigInt g(0);
        for (const auto& p : out.witness)
            for (const auto& c : p.coeffs())
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g > 1) {
            for (auto& p : out.witness) {
                std::vector<BigRational> cs = p.coeffs();
                for (auto& c : cs) c /= BigRational(g);
                p = PolyN(std::move(cs));
            }
        }
    }
    return out;
}

HyperplaneResult hyperplane_search_at(const std::vector<std::array<PolyN, 5>>& rows,
                                      const BigRational& n, int threads) {
    if (rows.size() < 4) throw argument_error("hyperplane search needs at least 4 rows");
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::array<BigInt, 5>> eval(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        // clear the common denominator of the row (scaling a functional is harmless)
        BigInt den_lcm(1);
        std::array<BigRational, 5> vals;
        for (int c = 0; c < 5; ++c) {
            vals[c] = rows[i][c].eval(n);
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), vals[c].get_den().get_mpz_t());
        }
        for (int c = 0; c < 5; ++c) {
            BigRational scaled = vals[c] * BigRational(den_lcm);
            eval[i][c] = scaled.get_num();
        }
    }
    IntSearch search(eval, threads);
    search.run();
    HyperplaneResult out;
    out.n0 = search.best_count;
    out.subset = search.best_subset;
    normalize_int_vector(search.best_t);
    out.witness_rational.resize(5);
    for (int c = 0; c < 5; ++c) out.witness_rational[c] = BigRational(search.best_t[c]);
    return out;
}

}  // namespace qpc
