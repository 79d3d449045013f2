#include "qpc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qpc/error.hpp"


namespace qpc {

namespace {


}  // namespace

SetPartition SetPartition::from_rgs(std::vector<int> rgs) {
    if (rgs.empty()) {
        SetPartition p;
        return p;  // the empty partition of zero points
    }
    if (rgs[0] != 0) throw argument_error("rgs must start with 0");
    int mx = 0;
    for (size_t i = 1; i < rgs.size(); ++i) {
        if (rgs[i] < 0 || rgs[i] > mx + 1) throw argument_error("rgs not in canonical form");
        mx = std::max(mx, rgs[i]);
    }
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.blocks_ = mx + 1;
    return p;
}

SetPartition SetPartition::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(k, -1);
    int covered = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw argument_error("empty block");
        for (int x : blocks[b]) {
            if (x < 1 || x > k) throw argument_error("point out of range");
            if (owner[x - 1] != -1) throw argument_error("point in two blocks");
            owner[x - 1] = static_cast<int>(b);
            ++covered;
        }
    }
    if (covered != k) throw argument_error("blocks do not cover {1..k}");
    // renumber by first occurrence
    std::vector<int> remap(blocks.size(), -1);
    std::vector<int> rgs(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int& r = remap[owner[i]];
        if (r == -1) r = next++;
        rgs[i] = r;
    }
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.blocks_ = next;
    return p;
}

SetPartition SetPartition::kernel_of_tuple(std::span<const int> values) {
    if (values.empty()) throw argument_error("kernel of empty tuple");
    std::vector<int> rgs(values.size());
    std::vector<int> seen;  // value of block b's representative
    for (size_t i = 0; i < values.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), values[i]);
        if (it == seen.end()) {
            rgs[i] = static_cast<int>(seen.size());
            seen.push_back(values[i]);
        } else {
            rgs[i] = static_cast<int>(it - seen.begin());
        }
    }
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.blocks_ = static_cast<int>(seen.size());
    return p;
}

SetPartition SetPartition::singletons(int k) {
    std::vector<int> rgs(k);
    std::iota(rgs.begin(), rgs.end(), 0);
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.blocks_ = k;
    return p;
}

SetPartition SetPartition::one_block(int k) {
    SetPartition p;
    p.rgs_.assign(k, 0);
    p.blocks_ = k > 0 ? 1 : 0;
    return p;
}

SetPartition SetPartition::basic_crossing() { return from_rgs({0, 1, 0, 1}); }

SetPartition SetPartition::parse(const std::string& text) {
    if (text.rfind("rgs:", 0) == 0) {
        std::vector<int> rgs;
        for (size_t i = 4; i < text.size(); ++i) {
            char c = text[i];
            if (c >= '0' && c <= '9') rgs.push_back(c - '0');
            else if (c >= 'a' && c <= 'z') rgs.push_back(10 + c - 'a');
            else throw argument_error("bad rgs digit in: " + text);
        }
        if (rgs.empty()) throw argument_error("empty rgs");
        return from_rgs(std::move(rgs));
    }
    std::vector<std::vector<int>> blocks;
    size_t i = 0;
    int max_pt = 0;
    while (i < text.size()) {
        if (text[i] != '{') throw argument_error("expected '{' in partition: " + text);
        ++i;
        std::vector<int> block;
        while (i < text.size() && text[i] != '}') {
            if (text[i] == ',') { ++i; continue; }
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw argument_error("bad character in partition: " + text);
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            block.push_back(v);
            max_pt = std::max(max_pt, v);
        }
        if (i >= text.size()) throw argument_error("unterminated block in: " + text);
        ++i;  // '}'
        if (block.empty()) throw argument_error("empty block in: " + text);
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) throw argument_error("empty partition text");
    return from_blocks(max_pt, blocks);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int i = 0; i < points(); ++i) out[rgs_[i]].push_back(i + 1);
    return out;  // rgs numbering is by first occurrence, so already sorted by min
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> out(blocks_, 0);
    for (int b : rgs_) ++out[b];
    return out;
}

int SetPartition::singleton_count() const {
    int n = 0;
    for (int s : block_sizes())
        if (s == 1) ++n;
    return n;
}

int SetPartition::lowest_singleton() const {
    std::vector<int> sz = block_sizes();
    for (int i = 0; i < points(); ++i)
        if (sz[rgs_[i]] == 1) return i + 1;
    return 0;
}

std::string SetPartition::str() const {
    if (rgs_.empty()) return "{}";
    std::ostringstream os;
    for (const auto& b : blocks()) {
        os << "{";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ",";
            os << b[i];
        }
        os << "}";
    }
    return os.str();
}

std::string SetPartition::rgs_string() const {
    std::string s = "rgs:";
    for (int b : rgs_) s += (b < 10) ? char('0' + b) : char('a' + b - 10);
    return s;
}

std::string Crossing::str() const {
    std::ostringstream os;
    os << "(" << pts[0] << "," << pts[1] << "," << pts[2] << "," << pts[3] << ")";
    return os.str();
}

std::vector<SetPartition> enumerate_partitions(int k, PartitionFilter filter) {
    if (k < 1 || k > 12) throw size_error("enumerate_partitions: k must be in [1,12]");
    std::vector<SetPartition> out;
    std::vector<int> rgs(k, 0);
    std::vector<int> maxv(k, 0);  // maxv[i] = max(rgs[0..i])
    int i = k - 1;
    while (true) {
        SetPartition p = SetPartition::from_rgs(rgs);
        bool keep = true;
        if (filter != PartitionFilter::All) {
            bool nc = is_noncrossing(p);
            keep = (filter == PartitionFilter::Noncrossing) ? nc : !nc;
        }
        if (keep) out.push_back(std::move(p));
        // next RGS in lexicographic order
        for (i = k - 1; i >= 1; --i) {
            if (rgs[i] <= maxv[i - 1]) break;
        }
        if (i <= 0) break;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
    return out;
}

std::vector<Crossing> crossings(const SetPartition& p) {
    std::vector<Crossing> out;
    const int k = p.points();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            if (p.same_block(a, b)) continue;
            for (int c = b + 1; c <= k; ++c) {
                if (!p.same_block(a, c)) continue;
                for (int d = c + 1; d <= k; ++d)
                    if (p.same_block(b, d)) out.push_back(Crossing{{a, b, c, d}});
            }
        }
    return out;
}

bool is_noncrossing(const SetPartition& p) {
    // stack-free scan is in the tests as an oracle; the library definition is "no crossing"
    const int k = p.points();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            if (p.same_block(a, b)) continue;
            for (int c = b + 1; c <= k; ++c) {
                if (!p.same_block(a, c)) continue;
                for (int d = c + 1; d <= k; ++d)
                    if (p.same_block(b, d)) return false;
            }
        }
    return true;
}

CrossingDecomposition crossing_decomposition(const SetPartition& p) {
    const int k = p.points();
    std::vector<bool> in_cross(k + 1, false);
    for (const Crossing& c : crossings(p))
        for (int x : c.pts) in_cross[x] = true;
    CrossingDecomposition out;
    std::vector<int> rest;
    for (int x = 1; x <= k; ++x)
        (in_cross[x] ? out.crossers : rest).push_back(x);
    out.crossing_part = out.crossers.empty() ? SetPartition() : restrict(p, out.crossers).q;
    out.noncrossing_part = rest.empty() ? SetPartition() : restrict(p, rest).q;
    return out;
}

Restriction restrict(const SetPartition& p, std::span<const int> points) {
    if (points.empty()) throw argument_error("restrict: empty point set");
    std::vector<int> a(points.begin(), points.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.front() < 1 || a.back() > p.points()) throw argument_error("restrict: point out of range");
    std::vector<int> sub;
    sub.reserve(a.size());
    for (int x : a) sub.push_back(p.block_index(x));
    Restriction r;
    r.q = SetPartition::kernel_of_tuple(sub);
    std::vector<bool> met(p.block_count(), false);
    for (int b : sub) met[b] = true;
    r.deleted = 0;
    for (bool m : met)
        if (!m) ++r.deleted;
    return r;
}

Restriction restrict(const SetPartition& p, uint32_t mask) {
    std::vector<int> pts;
    for (int x = 1; x <= p.points(); ++x)
        if (mask & (1u << (x - 1))) pts.push_back(x);
    return restrict(p, pts);
}

SetPartition relabel(const SetPartition& p, std::span<const int> image_of_point) {
    const int k = p.points();
    if (static_cast<int>(image_of_point.size()) != k) throw argument_error("relabel: bad map size");
    std::vector<int> owner(k);  // owner[new point - 1] = old block
    for (int x = 1; x <= k; ++x) owner[image_of_point[x - 1] - 1] = p.block_index(x);
    return SetPartition::kernel_of_tuple(owner);
}

SetPartition rotate(const SetPartition& p, int n) {
    const int k = p.points();
    std::vector<int> img(k);
    for (int x = 1; x <= k; ++x) img[x - 1] = ((x + n - 1) % k + k) % k + 1;
    return relabel(p, img);
}

SetPartition reflect(const SetPartition& p) {
    const int k = p.points();
    std::vector<int> img(k);
    for (int x = 1; x <= k; ++x) img[x - 1] = (k - x) % k + 1;
    return relabel(p, img);
}

bool refines(const SetPartition& p, const SetPartition& q) {
    if (p.points() != q.points()) throw shape_error("refines: point count mismatch");
    // p <= q iff points sharing a p-block share a q-block
    std::vector<int> rep(p.block_count(), 0);
    for (int x = 1; x <= p.points(); ++x) {
        int b = p.block_index(x);
        if (rep[b] == 0) rep[b] = x;
        else if (!q.same_block(rep[b], x)) return false;
    }
    return true;
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
    if (p.points() != q.points()) throw shape_error("join: point count mismatch");
    const int k = p.points();
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::vector<int> first_p(p.block_count(), -1), first_q(q.block_count(), -1);
    for (int i = 0; i < k; ++i) {
        int bp = p.block_index(i + 1), bq = q.block_index(i + 1);
        if (first_p[bp] < 0) first_p[bp] = i; else unite(i, first_p[bp]);
        if (first_q[bq] < 0) first_q[bq] = i; else unite(i, first_q[bq]);
    }
    std::vector<int> root(k);
    for (int i = 0; i < k; ++i) root[i] = find(i);
    return SetPartition::kernel_of_tuple(root);
}

}  // namespace qpc
