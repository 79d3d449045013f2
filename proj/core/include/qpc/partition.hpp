#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qpc {

// Canonical set partition of {1..k}, stored as a restricted-growth string:
// rgs[i] is the block index of point i+1, blocks numbered by first occurrence
// starting at 0. Two partitions are equal iff their rgs are equal.
class SetPartition {
  public:
    SetPartition() = default;

    static SetPartition from_rgs(std::vector<int> rgs);
    // blocks may be listed in any order; must cover {1..k} disjointly
    static SetPartition from_blocks(int k, const std::vector<std::vector<int>>& blocks);
    static SetPartition kernel_of_tuple(std::span<const int> values);
    static SetPartition singletons(int k);  // the discrete partition |...|
    static SetPartition one_block(int k);
    static SetPartition basic_crossing();  // {1,3}{2,4}
    // accepts "{1,3}{2,4}" or "rgs:0101"
    static SetPartition parse(const std::string& text);

    int points() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return blocks_; }
    int block_index(int point) const { return rgs_[point - 1]; }  // 1-based point
    bool same_block(int x, int y) const { return rgs_[x - 1] == rgs_[y - 1]; }
    const std::vector<int>& rgs() const { return rgs_; }
    std::vector<std::vector<int>> blocks() const;  // sorted by minimum, ascending inside
    std::vector<int> block_sizes() const;
    int singleton_count() const;
    int lowest_singleton() const;  // 0 if none

    std::string str() const;         // "{1,3}{2,4}"
    std::string rgs_string() const;  // "rgs:0101"

    friend bool operator==(const SetPartition& a, const SetPartition& b) = default;
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
        if (a.rgs_.size() != b.rgs_.size())
            return a.rgs_.size() <=> b.rgs_.size();
        return a.rgs_ <=> b.rgs_;
    }

  private:
    std::vector<int> rgs_;
    int blocks_ = 0;
};

// Quadruple k1<k2<k3<k4 with k1~k3, k2~k4, k1!~k2 in the owning partition.
struct Crossing {
    std::array<int, 4> pts;
    friend bool operator==(const Crossing&, const Crossing&) = default;
    friend auto operator<=>(const Crossing&, const Crossing&) = default;
    std::string str() const;
};

enum class PartitionFilter { All, Noncrossing, Crossing };

// Complete, duplicate-free, in lexicographic RGS order. 1 <= k <= 12.
std::vector<SetPartition> enumerate_partitions(int k, PartitionFilter filter = PartitionFilter::All);

// Exhaustive O(k^4) scan; returned sorted.
std::vector<Crossing> crossings(const SetPartition& p);
bool is_noncrossing(const SetPartition& p);

struct CrossingDecomposition {
    std::vector<int> crossers;  // chi(p), ascending
    SetPartition crossing_part;     // p restricted to crossers
    SetPartition noncrossing_part;  // p restricted to non-crossers
};
CrossingDecomposition crossing_decomposition(const SetPartition& p);

struct Restriction {
    SetPartition q;  // p meet A, relabeled by the order-preserving bijection A -> [|A|]
    int deleted;     // blocks of p disjoint from A
};
Restriction restrict(const SetPartition& p, std::span<const int> points);
Restriction restrict(const SetPartition& p, uint32_t mask);  // bit i-1 = point i

// image under i -> (i+n-1 mod k)+1
SetPartition rotate(const SetPartition& p, int n);
// image under s(i) = (k-i) mod k + 1
SetPartition reflect(const SetPartition& p);
SetPartition relabel(const SetPartition& p, std::span<const int> image_of_point);

bool refines(const SetPartition& p, const SetPartition& q);        // p <= q
SetPartition join(const SetPartition& p, const SetPartition& q);   // least upper bound

}  // namespace qpc
