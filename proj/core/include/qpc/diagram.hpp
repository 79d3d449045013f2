#pragma once

#include <utility>

#include "qpc/partition.hpp"

namespace qpc {

// Partition of k upper and l lower points: points 1..k are the upper row
// left-to-right, points k+1..k+l the lower row left-to-right.
class TwoLinePartition {
  public:
    TwoLinePartition() = default;
    static TwoLinePartition from_body(int upper, int lower, SetPartition body);
    static TwoLinePartition vector(SetPartition p);  // element of P(0,k)
    static TwoLinePartition identity(int k);
    static TwoLinePartition cap();  // P(0,2), lower pair joined
    static TwoLinePartition cup();  // P(2,0), upper pair joined

    int upper() const { return upper_; }
    int lower() const { return lower_; }
    const SetPartition& body() const { return body_; }
    // the partition of the lower row alone (for morphism images of vectors)
    SetPartition lower_partition() const;

    friend bool operator==(const TwoLinePartition&, const TwoLinePartition&) = default;
    friend auto operator<=>(const TwoLinePartition&, const TwoLinePartition&) = default;
    std::string str() const;  // "P(2,2){1,3}{2,4}" body form

  private:
    int upper_ = 0, lower_ = 0;
    SetPartition body_;
};

// Glue top's lower row to bottom's upper row, take connected components, drop
// the middle. closed counts components lying entirely in the middle; they
// contribute the factor N^closed to the dense composite.
std::pair<TwoLinePartition, int> compose(const TwoLinePartition& top, const TwoLinePartition& bottom);

TwoLinePartition tensor(const TwoLinePartition& p, const TwoLinePartition& q);
TwoLinePartition involute(const TwoLinePartition& p);

// A block specification for morphism diagrams in P(k,l): each entry joins a
// set of upper points with a set of lower points. Upper points not mentioned
// become capped singletons; every lower point must be claimed exactly once.
struct DiagramBlock {
    std::vector<int> upper;
    std::vector<int> lower;
};
TwoLinePartition diagram_from_blocks(int k, int l, const std::vector<DiagramBlock>& blocks);

// Morphism builders (output slots ordered by the minimum of each surviving group).
TwoLinePartition restriction_diagram(int k, std::span<const int> points);   // P(k,|A|)
TwoLinePartition singleton_capping(int k, int x);                           // P(k,k-1)
TwoLinePartition semicircle_capping(int k, int i, int j);                   // P(k,k-2), i<j: merge blocks of i,j then delete both
TwoLinePartition merge_pair(int k, int a, int b);                           // P(k,k-1)
TwoLinePartition merge_adjacent_cyclic(int k, int x);                       // merge {x, x mod k + 1}
TwoLinePartition merge_triple_cyclic(int k, int x);                         // merge {x, x+1, x+2} (mod k)
TwoLinePartition rotation_diagram(int k, int n);                            // P(k,k), sigma = r^n
TwoLinePartition reflection_diagram(int k);                                 // P(k,k), sigma = s
// merge {x,x+1,x+2} (mod k) into one block attached to two adjacent output points
TwoLinePartition triple_to_pair(int k, int x);                              // P(k,k-1)

}  // namespace qpc
