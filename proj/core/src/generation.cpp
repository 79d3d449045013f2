#include "qpc/generation.hpp"

#include <algorithm>
#include <deque>

#include "qpc/dense.hpp"
#include "qpc/error.hpp"

namespace qpc {

CrossingProfile crossing_profile(const std::vector<SetPartition>& ps) {
    if (ps.empty()) throw argument_error("crossing_profile: empty family");
    const int k = ps.front().points();
    for (const auto& p : ps)
        if (p.points() != k) throw shape_error("crossing_profile: mixed point counts");
    CrossingProfile prof;
    prof.partitions = ps;
    std::set<Crossing> all;
    for (const auto& p : ps) {
        auto cs = crossings(p);
        prof.crossing_sets.emplace_back(cs.begin(), cs.end());
        all.insert(cs.begin(), cs.end());
    }
    for (const Crossing& c : all) {
        unsigned pattern = 0;
        for (size_t j = 0; j < ps.size(); ++j)
            if (prof.crossing_sets[j].count(c)) pattern |= (1u << j);
        prof.venn[pattern].insert(c);
    }
    return prof;
}

std::optional<Crossing> unique_crossing_witness(const std::vector<SetPartition>& ps, int j) {
    if (j < 1 || j > static_cast<int>(ps.size()))
        throw argument_error("unique_crossing_witness: index out of range");
    CrossingProfile prof = crossing_profile(ps);
    const unsigned mine = 1u << (j - 1);
    for (const auto& [pattern, cs] : prof.venn)
        if (pattern == mine) return *cs.begin();
    return std::nullopt;
}

MatrixQN indicator_matrix(const std::vector<SetPartition>& ps) {
    CrossingProfile prof = crossing_profile(ps);
    std::set<Crossing> all;
    for (const auto& s : prof.crossing_sets) all.insert(s.begin(), s.end());
    MatrixQN m(static_cast<int>(all.size()), static_cast<int>(ps.size()));
    int row = 0;
    for (const Crossing& c : all) {
        for (size_t j = 0; j < ps.size(); ++j)
            if (prof.crossing_sets[j].count(c)) m.at(row, static_cast<int>(j)) = RatFuncN(1);
        ++row;
    }
    return m;
}

bool spanning(const std::vector<SetPartition>& ps) {
    MatrixQN m = indicator_matrix(ps);
    if (m.rows() == 0) return ps.empty();
    return rank_generic(m).rank == static_cast<int>(ps.size());
}

const char* to_string(Level3Case c) {
    switch (c) {
        case Level3Case::AllNoncrossing: return "all-NC";
        case Level3Case::UniqueCrossing: return "unique-crossing";
        case Level3Case::AllEqual: return "all-equal";
        case Level3Case::EqualPlusTwo: return "equal-plus-two";
        case Level3Case::AllPairwise: return "all-pairwise";
        case Level3Case::DisjointUnion: return "disjoint-union";
        case Level3Case::ReduceToTwo: return "reduce-to-two";
    }
    return "?";
}

Level3Case classify_level3(const SetPartition& p1, const SetPartition& p2, const SetPartition& p3) {
    CrossingProfile prof = crossing_profile({p1, p2, p3});
    bool any = false;
    for (const auto& s : prof.crossing_sets) any = any || !s.empty();
    if (!any) return Level3Case::AllNoncrossing;
    auto occupied = [&](unsigned pattern) { return prof.venn.count(pattern) != 0; };
    if (occupied(0b001) || occupied(0b010) || occupied(0b100)) return Level3Case::UniqueCrossing;
    bool w3 = occupied(0b111);
    int w2 = occupied(0b011) + occupied(0b101) + occupied(0b110);
    if (w3 && w2 == 0) return Level3Case::AllEqual;
    if (w3) return Level3Case::EqualPlusTwo;
    if (w2 == 3) return Level3Case::AllPairwise;
    if (w2 == 2) return Level3Case::DisjointUnion;
    return Level3Case::ReduceToTwo;  // one weight-2 cell: the third set is empty
}

namespace {

std::optional<TwoLinePartition> step_diagram(const std::string& op, const std::vector<int>& args,
                                             int k) {
    if (op == "restrict") return restriction_diagram(k, args);
    if (op == "semicircle") {
        if (args.size() != 2) throw argument_error("semicircle expects (i,j)");
        return semicircle_capping(k, args[0], args[1]);
    }
    if (op == "merge") {
        if (args.size() != 1) throw argument_error("merge expects (x)");
        return merge_adjacent_cyclic(k, args[0]);
    }
    if (op == "rotate") {
        if (args.size() != 1) throw argument_error("rotate expects (n)");
        return rotation_diagram(k, args[0]);
    }
    if (op == "reflect") return reflection_diagram(k);
    if (op == "red_cr") return std::nullopt;
    throw argument_error("unknown certificate op: " + op);
}

// canonical memo key: coefficients scaled so the first term is 1
std::string memo_key(const PartitionVector& v) {
    std::string key = std::to_string(v.k()) + ";";
    if (v.is_zero()) return key;
    const RatFuncN& lead = v.terms().begin()->second;
    for (const auto& [p, c] : v.terms()) {
        key += p.rgs_string();
        key += "=";
        key += (c / lead).str();
        key += ";";
    }
    return key;
}

struct Move {
    std::string op;
    std::vector<int> args;
};

std::vector<Move> moves_for(int k) {
    std::vector<Move> out;
    if (k > 4) {
        // restrictions to proper subsets of size >= 4
        for (uint32_t mask = 1; mask < (1u << k); ++mask) {
            int sz = __builtin_popcount(mask);
            if (sz < 4 || sz == k) continue;
            std::vector<int> pts;
            for (int x = 1; x <= k; ++x)
                if (mask & (1u << (x - 1))) pts.push_back(x);
            out.push_back({"restrict", std::move(pts)});
        }
        // semicircle cappings with output >= 4: j - i <= k - 5
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k && k + i - j - 1 >= 4; ++j)
                out.push_back({"semicircle", {i, j}});
        // cyclic adjacent merges
        for (int x = 1; x <= k; ++x) out.push_back({"merge", {x}});
    }
    for (int n = 1; n < k; ++n) out.push_back({"rotate", {n}});
    out.push_back({"reflect", {}});
    out.push_back({"red_cr", {}});
    return out;
}

// Push the input's dense expansion through the pipeline: morphism steps must
// commute with expansion; red_CR steps replace the representative (containment
// move). Finishes by comparing with c(n0) * xi_cross.
bool dense_replay(const std::vector<CertStep>& steps, const PartitionVector& input,
                  const RatFuncN& c, int n0, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    DenseVector d = expand_dense(input, n0);
    PartitionVector formal = input;
    for (size_t i = 0; i < steps.size(); ++i) {
        auto diagram = step_diagram(steps[i].op, steps[i].args, formal.k());
        formal = steps[i].after;
        DenseVector f = expand_dense(formal, n0);
        if (diagram) {
            d = dense_apply_morphism(*diagram, d);
            if (d.entries != f.entries)
                return fail("dense oracle: step " + std::to_string(i + 1) + " (" + steps[i].op +
                            ") does not commute with expansion at N0=" + std::to_string(n0));
        }
        d = std::move(f);
    }
    DenseVector cross = expand_dense(SetPartition::basic_crossing(), n0);
    BigRational cv = c.eval(BigRational(n0));
    if (d.k != 4) return fail("dense oracle: final vector not on 4 points");
    for (size_t e = 0; e < d.entries.size(); ++e)
        if (d.entries[e] != cv * cross.entries[e])
            return fail("dense oracle: final vector differs from c * basic crossing");
    return true;
}

}  // namespace

PartitionVector apply_step_op(const std::string& op, const std::vector<int>& args,
                              const PartitionVector& v) {
    auto d = step_diagram(op, args, v.k());
    return d ? apply_morphism(*d, v) : red_cr(v);
}

GenerationCertificate certify(const PartitionVector& v, int depth, int oracle_n0) {
    if (v.is_zero()) throw argument_error("certify: zero vector");
    if (depth < 0 || depth > 6) throw argument_error("certify: depth must be in [0,6]");
    GenerationCertificate cert;
    cert.oracle_n0 = oracle_n0;

    struct Node {
        PartitionVector vec;
        std::vector<std::pair<std::string, std::vector<int>>> path;
        int max_k;
    };

    auto finish = [&](const Node& node) -> bool {
        PartitionVector reduced = red_cr(node.vec);
        auto c = reduced.as_basic_crossing_multiple();
        if (!c || c->is_zero()) return false;
        std::vector<CertStep> steps;
        PartitionVector replay = v;
        for (const auto& [op, args] : node.path) {
            replay = apply_step_op(op, args, replay);
            steps.push_back({op, args, replay});
        }
        if (!(reduced == node.vec)) {
            replay = red_cr(replay);
            steps.push_back({"red_cr", {}, replay});
        }
        if (oracle_n0 >= node.max_k) {
            if (!dense_replay(steps, v, *c, oracle_n0, nullptr)) return false;
            cert.dense_checked = true;
        }
        cert.steps = std::move(steps);
        cert.conclusion = GenerationCertificate::Conclusion::ReachesBasicCrossing;
        cert.final_coefficient = *c;
        cert.vanishing = c->num();
        return true;
    };

    std::deque<Node> frontier;
    std::set<std::string> visited;
    Node root{v, {}, v.k()};
    visited.insert(memo_key(v));
    if (finish(root)) return cert;
    frontier.push_back(std::move(root));
    int level = 0;
    while (!frontier.empty() && level < depth) {
        ++level;
        std::deque<Node> next;
        while (!frontier.empty()) {
            Node node = std::move(frontier.front());
            frontier.pop_front();
            for (const Move& mv : moves_for(node.vec.k())) {
                PartitionVector w = apply_step_op(mv.op, mv.args, node.vec);
                if (w.is_zero()) continue;
                std::string key = memo_key(w);
                if (!visited.insert(key).second) continue;
                Node child{std::move(w), node.path, std::max(node.max_k, node.vec.k())};
                child.path.emplace_back(mv.op, mv.args);
                child.max_k = std::max(child.max_k, child.vec.k());
                if (finish(child)) return cert;
                if (level < depth) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    cert.conclusion = GenerationCertificate::Conclusion::Inconclusive;
    return cert;
}

bool replay_certificate(const GenerationCertificate& cert, const PartitionVector& input,
                        std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    PartitionVector cur = input;
    int max_k = input.k();
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        cur = apply_step_op(cert.steps[i].op, cert.steps[i].args, cur);
        max_k = std::max(max_k, cur.k());
        if (!(cur == cert.steps[i].after))
            return fail("step " + std::to_string(i + 1) + " (" + cert.steps[i].op +
                        ") does not reproduce its summary");
    }
    if (cert.conclusion == GenerationCertificate::Conclusion::ReachesBasicCrossing) {
        auto c = red_cr(cur).as_basic_crossing_multiple();
        if (!c || c->is_zero())
            return fail("final vector is not a nonzero multiple of the basic crossing");
        if (!(*c == cert.final_coefficient)) return fail("final coefficient mismatch");
        if (cert.oracle_n0 >= max_k &&
            !dense_replay(cert.steps, input, *c, cert.oracle_n0, error))
            return false;
    }
    return true;
}

}  // namespace qpc
