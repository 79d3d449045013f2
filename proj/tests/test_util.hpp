#pragma once

// Shared independent oracles for the test suite. These deliberately avoid the
// library's own code paths: recursions for counting, literal dense expansions
// with naive Gaussian elimination for ranks, a stack scan for noncrossing.

#include <random>
#include <vector>

#include "qpc/dense.hpp"
#include "qpc/partition.hpp"

namespace qpc_test {

inline std::vector<long long> bell_numbers(int up_to) {
    // Bell triangle
    std::vector<long long> bell{1};  // B_0
    std::vector<long long> row{1};
    for (int n = 1; n <= up_to; ++n) {
        std::vector<long long> next{row.back()};
        for (long long x : row) next.push_back(next.back() + x);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;  // bell[k] = B_k
}

inline std::vector<long long> catalan_numbers(int up_to) {
    std::vector<long long> c{1};  // C_0
    for (int n = 0; n < up_to; ++n) {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += c[i] * c[n - i];
        c.push_back(s);
    }
    return c;
}

// independent noncrossing test: scan left to right with a stack of open blocks
inline bool noncrossing_stack(const qpc::SetPartition& p) {
    const int k = p.points();
    std::vector<int> last(p.block_count(), 0);
    for (int x = 1; x <= k; ++x) last[p.block_index(x)] = x;
    std::vector<int> stack;
    for (int x = 1; x <= k; ++x) {
        int b = p.block_index(x);
        if (stack.empty() || stack.back() != b) {
            for (int open : stack)
                if (open == b) return false;  // reopening a non-top block
            stack.push_back(b);
        }
        if (last[b] == x) {
            if (stack.back() != b) return false;
            stack.pop_back();
        }
    }
    return true;
}

// exact rank of literal dense expansions by naive rational elimination
inline int literal_dense_rank(const std::vector<qpc::SetPartition>& ps, int n0) {
    std::vector<std::vector<qpc::BigRational>> rows;
    for (const auto& p : ps) {
        qpc::DenseVector d = qpc::expand_dense(p, n0);
        rows.push_back(std::move(d.entries));
    }
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t lead = 0;
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        size_t piv = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (sgn(rows[i][col]) != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || sgn(rows[i][col]) == 0) continue;
            qpc::BigRational f = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
        (void)lead;
    }
    return rank;
}

inline qpc::SetPartition random_partition(int k, std::mt19937_64& rng) {
    std::vector<int> rgs(k, 0);
    int mx = 0;
    for (int i = 1; i < k; ++i) {
        std::uniform_int_distribution<int> d(0, mx + 1);
        rgs[i] = d(rng);
        mx = std::max(mx, rgs[i]);
    }
    return qpc::SetPartition::from_rgs(rgs);
}

inline qpc::BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    if (n == 0) n = 1;
    return qpc::make_rational(n, den(rng));
}

}  // namespace qpc_test
