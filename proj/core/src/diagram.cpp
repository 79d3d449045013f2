#include "qpc/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "qpc/error.hpp"

namespace qpc {

TwoLinePartition TwoLinePartition::from_body(int upper, int lower, SetPartition body) {
    if (upper < 0 || lower < 0 || body.points() != upper + lower)
        throw shape_error("TwoLinePartition: body size must equal upper+lower");
    TwoLinePartition t;
    t.upper_ = upper;
    t.lower_ = lower;
    t.body_ = std::move(body);
    return t;
}

TwoLinePartition TwoLinePartition::vector(SetPartition p) {
    int k = p.points();
    return from_body(0, k, std::move(p));
}

TwoLinePartition TwoLinePartition::identity(int k) {
    std::vector<std::vector<int>> blocks(k);
    for (int i = 1; i <= k; ++i) blocks[i - 1] = {i, k + i};
    return from_body(k, k, SetPartition::from_blocks(2 * k, blocks));
}

TwoLinePartition TwoLinePartition::cap() { return from_body(0, 2, SetPartition::one_block(2)); }
TwoLinePartition TwoLinePartition::cup() { return from_body(2, 0, SetPartition::one_block(2)); }

SetPartition TwoLinePartition::lower_partition() const {
    if (upper_ != 0) throw shape_error("lower_partition: diagram has upper points");
    return body_;
}

std::string TwoLinePartition::str() const {
    return "P(" + std::to_string(upper_) + "," + std::to_string(lower_) + ")" + body_.str();
}

std::pair<TwoLinePartition, int> compose(const TwoLinePartition& top, const TwoLinePartition& bottom) {
    if (top.lower() != bottom.upper())
        throw shape_error("compose: top lower row (" + std::to_string(top.lower()) +
                          ") != bottom upper row (" + std::to_string(bottom.upper()) + ")");
    const int k = top.upper(), m = top.lower(), r = bottom.lower();
    // nodes: 0..k-1 top upper, k..k+m-1 middle, k+m..k+m+r-1 bottom lower
    const int n = k + m + r;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    {
        const SetPartition& tb = top.body();
        std::vector<int> first(tb.block_count(), -1);
        for (int p = 1; p <= k + m; ++p) {
            int node = p - 1;  // upper p<=k at p-1; lower p>k at k+(p-k-1) = p-1
            int b = tb.block_index(p);
            if (first[b] < 0) first[b] = node; else unite(node, first[b]);
        }
    }
    {
        const SetPartition& bb = bottom.body();
        std::vector<int> first(bb.block_count(), -1);
        for (int p = 1; p <= m + r; ++p) {
            int node = (p <= m) ? k + (p - 1) : k + m + (p - m - 1);
            int b = bb.block_index(p);
            if (first[b] < 0) first[b] = node; else unite(node, first[b]);
        }
    }
    std::vector<int> boundary;  // roots of surviving points in row order
    boundary.reserve(k + r);
    for (int i = 0; i < k; ++i) boundary.push_back(find(i));
    for (int i = 0; i < r; ++i) boundary.push_back(find(k + m + i));
    std::vector<bool> touches_boundary(n, false);
    for (int root : boundary) touches_boundary[root] = true;
    int closed = 0;
    std::vector<bool> counted(n, false);
    for (int i = k; i < k + m; ++i) {
        int root = find(i);
        if (!touches_boundary[root] && !counted[root]) {
            counted[root] = true;
            ++closed;
        }
    }
    SetPartition result = boundary.empty() ? SetPartition() : SetPartition::kernel_of_tuple(boundary);
    return {TwoLinePartition::from_body(k, r, std::move(result)), closed};
}

TwoLinePartition tensor(const TwoLinePartition& p, const TwoLinePartition& q) {
    const int ku = p.upper() + q.upper(), kl = p.lower() + q.lower();
    auto blocks_p = p.body().blocks();
    auto blocks_q = q.body().blocks();
    std::vector<std::vector<int>> blocks;
    auto map_p = [&](int x) { return x <= p.upper() ? x : ku + (x - p.upper()); };
    auto map_q = [&](int x) {
        return x <= q.upper() ? p.upper() + x : ku + p.lower() + (x - q.upper());
    };
    for (auto& b : blocks_p) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(map_p(x));
        blocks.push_back(std::move(nb));
    }
    for (auto& b : blocks_q) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(map_q(x));
        blocks.push_back(std::move(nb));
    }
    if (ku + kl == 0) return TwoLinePartition();
    return TwoLinePartition::from_body(ku, kl, SetPartition::from_blocks(ku + kl, blocks));
}

TwoLinePartition involute(const TwoLinePartition& p) {
    const int k = p.upper(), l = p.lower();
    std::vector<int> img(k + l);
    for (int x = 1; x <= k; ++x) img[x - 1] = l + x;
    for (int x = k + 1; x <= k + l; ++x) img[x - 1] = x - k;
    return TwoLinePartition::from_body(l, k, relabel(p.body(), img));
}

TwoLinePartition diagram_from_blocks(int k, int l, const std::vector<DiagramBlock>& blocks) {
    std::vector<std::vector<int>> body;
    std::vector<bool> upper_used(k + 1, false), lower_used(l + 1, false);
    for (const auto& db : blocks) {
        std::vector<int> b;
        for (int u : db.upper) {
            if (u < 1 || u > k || upper_used[u]) throw argument_error("bad upper point in diagram block");
            upper_used[u] = true;
            b.push_back(u);
        }
        for (int w : db.lower) {
            if (w < 1 || w > l || lower_used[w]) throw argument_error("bad lower point in diagram block");
            lower_used[w] = true;
            b.push_back(k + w);
        }
        if (b.empty()) throw argument_error("empty diagram block");
        body.push_back(std::move(b));
    }
    for (int w = 1; w <= l; ++w)
        if (!lower_used[w]) throw argument_error("unclaimed lower point in diagram");
    for (int u = 1; u <= k; ++u)
        if (!upper_used[u]) body.push_back({u});  // capped singleton
    return TwoLinePartition::from_body(k, l, SetPartition::from_blocks(k + l, body));
}

TwoLinePartition restriction_diagram(int k, std::span<const int> points) {
    if (points.empty()) throw argument_error("restriction_diagram: empty set");
    std::vector<int> a(points.begin(), points.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.front() < 1 || a.back() > k) throw argument_error("restriction_diagram: point out of range");
    std::vector<DiagramBlock> blocks;
    for (size_t i = 0; i < a.size(); ++i) blocks.push_back({{a[i]}, {static_cast<int>(i) + 1}});
    return diagram_from_blocks(k, static_cast<int>(a.size()), blocks);
}

TwoLinePartition singleton_capping(int k, int x) {
    std::vector<int> pts;
    for (int i = 1; i <= k; ++i)
        if (i != x) pts.push_back(i);
    return restriction_diagram(k, pts);
}

TwoLinePartition semicircle_capping(int k, int i, int j) {
    if (!(1 <= i && i < j && j <= k)) throw argument_error("semicircle_capping: need 1<=i<j<=k");
    std::vector<DiagramBlock> blocks;
    int slot = 0;
    for (int x = 1; x < i; ++x) blocks.push_back({{x}, {++slot}});
    for (int x = j + 1; x <= k; ++x) blocks.push_back({{x}, {++slot}});
    blocks.push_back({{i, j}, {}});
    return diagram_from_blocks(k, slot, blocks);
}

namespace {

// groups of upper points merged into one output slot each, ordered by minimum
TwoLinePartition merge_groups(int k, std::vector<std::vector<int>> groups) {
    std::vector<bool> used(k + 1, false);
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        for (int x : g) used[x] = true;
    }
    for (int x = 1; x <= k; ++x)
        if (!used[x]) groups.push_back({x});
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<DiagramBlock> blocks;
    for (size_t s = 0; s < groups.size(); ++s)
        blocks.push_back({groups[s], {static_cast<int>(s) + 1}});
    return diagram_from_blocks(k, static_cast<int>(groups.size()), blocks);
}

int cyc(int x, int k) { return (x - 1) % k + 1; }

}  // namespace

TwoLinePartition merge_pair(int k, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > k || b > k) throw argument_error("merge_pair: bad points");
    return merge_groups(k, {{a, b}});
}

TwoLinePartition merge_adjacent_cyclic(int k, int x) { return merge_pair(k, x, cyc(x + 1, k)); }

TwoLinePartition merge_triple_cyclic(int k, int x) {
    return merge_groups(k, {{cyc(x, k), cyc(x + 1, k), cyc(x + 2, k)}});
}

TwoLinePartition rotation_diagram(int k, int n) {
    std::vector<DiagramBlock> blocks;
    for (int x = 1; x <= k; ++x) {
        int img = ((x + n - 1) % k + k) % k + 1;
        blocks.push_back({{x}, {img}});
    }
    return diagram_from_blocks(k, k, blocks);
}

TwoLinePartition reflection_diagram(int k) {
    std::vector<DiagramBlock> blocks;
    for (int x = 1; x <= k; ++x) blocks.push_back({{x}, {(k - x) % k + 1}});
    return diagram_from_blocks(k, k, blocks);
}

TwoLinePartition triple_to_pair(int k, int x) {
    std::vector<int> g = {cyc(x, k), cyc(x + 1, k), cyc(x + 2, k)};
    std::sort(g.begin(), g.end());
    // surviving groups ordered by minimum; the merged triple claims two adjacent slots
    std::vector<std::vector<int>> groups{g};
    std::vector<bool> used(k + 1, false);
    for (int p : g) used[p] = true;
    for (int p = 1; p <= k; ++p)
        if (!used[p]) groups.push_back({p});
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<DiagramBlock> blocks;
    int slot = 0;
    for (auto& grp : groups) {
        if (grp.size() == 3) {
            blocks.push_back({grp, {slot + 1, slot + 2}});
            slot += 2;
        } else {
            blocks.push_back({grp, {++slot}});
        }
    }
    return diagram_from_blocks(k, slot, blocks);
}

}  // namespace qpc
