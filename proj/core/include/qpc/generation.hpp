#pragma once

#include <map>
#include <optional>
#include <set>

#include "qpc/matrix.hpp"
#include "qpc/partition_vector.hpp"

namespace qpc {

// Venn classification of the crossing sets of a family of partitions:
// cell bit j set  <=>  the crossing lies in cr(p_{j+1}).
struct CrossingProfile {
    std::vector<SetPartition> partitions;
    std::vector<std::set<Crossing>> crossing_sets;
    std::map<unsigned, std::set<Crossing>> venn;  // nonzero patterns only
};
CrossingProfile crossing_profile(const std::vector<SetPartition>& ps);

// Lexicographically smallest kappa in cr(p_j) \ union of the others (j 1-based).
std::optional<Crossing> unique_crossing_witness(const std::vector<SetPartition>& ps, int j);

// Rows indexed by crossings in the union, columns by partitions; entry 1 iff
// the crossing lies in cr(p_j).
MatrixQN indicator_matrix(const std::vector<SetPartition>& ps);
bool spanning(const std::vector<SetPartition>& ps);

enum class Level3Case {
    AllNoncrossing,   // every cr(p_i) empty
    UniqueCrossing,   // some weight-1 cell occupied
    AllEqual,         // only the weight-3 cell occupied
    EqualPlusTwo,     // weight-3 plus at least one weight-2 cell
    AllPairwise,      // all three weight-2 cells, no weight-3
    DisjointUnion,    // exactly two weight-2 cells: cr(p) = cr(q) u cr(r)
    ReduceToTwo,      // exactly one weight-2 cell: one partition is noncrossing
};
const char* to_string(Level3Case c);
Level3Case classify_level3(const SetPartition& p1, const SetPartition& p2, const SetPartition& p3);

// One operator application in a certificate.
struct CertStep {
    std::string op;          // "restrict", "semicircle", "merge", "rotate", "reflect", "red_cr"
    std::vector<int> args;   // points / indices, operator-dependent
    PartitionVector after;   // replay summary
};

struct GenerationCertificate {
    enum class Conclusion { ReachesBasicCrossing, Inconclusive };
    std::vector<CertStep> steps;
    Conclusion conclusion = Conclusion::Inconclusive;
    RatFuncN final_coefficient;   // nonzero element of Q(N) on success
    PolyN vanishing;              // numerator: the finitely many N where it vanishes
    int oracle_n0 = 0;
    bool dense_checked = false;   // oracle ran (requires n0 >= max intermediate k)
};

// Breadth-first search over restrictions (|A| >= 4), semicircle cappings,
// cyclic adjacent merges, rotations, reflection and red_CR; succeeds when the
// crossing part of a node is a nonzero Q(N)-multiple of the basic crossing.
GenerationCertificate certify(const PartitionVector& v, int depth, int oracle_n0);

// Re-apply the steps to the input and confirm every summary, the conclusion,
// and (in the basis regime) the dense expansion of the final vector.
bool replay_certificate(const GenerationCertificate& cert, const PartitionVector& input,
                        std::string* error = nullptr);

PartitionVector apply_step_op(const std::string& op, const std::vector<int>& args,
                              const PartitionVector& v);

}  // namespace qpc
