#pragma once

#include <map>
#include <optional>

#include "qpc/diagram.hpp"
#include "qpc/ratfunc.hpp"

namespace qpc {

// Formal linear combination sum_p alpha_p xi_p in hom(0,k), alpha_p in Q(N).
// Zero coefficients are never stored; all keys share the same point count.
class PartitionVector {
  public:
    PartitionVector() = default;
    explicit PartitionVector(int k) : k_(k) {}
    static PartitionVector basis(const SetPartition& p, RatFuncN coeff = RatFuncN(1));

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<SetPartition, RatFuncN>& terms() const { return terms_; }
    RatFuncN coeff(const SetPartition& p) const;

    void add_term(const SetPartition& p, const RatFuncN& c);
    PartitionVector& operator+=(const PartitionVector& o);
    PartitionVector& operator-=(const PartitionVector& o);
    PartitionVector& operator*=(const RatFuncN& c);
    friend PartitionVector operator+(PartitionVector a, const PartitionVector& b) { return a += b; }
    friend PartitionVector operator-(PartitionVector a, const PartitionVector& b) { return a -= b; }
    friend PartitionVector operator*(const RatFuncN& c, PartitionVector v) { return v *= c; }
    friend bool operator==(const PartitionVector& a, const PartitionVector& b) = default;

    // c*xi_x for the basic crossing: returns the coefficient, or nullopt
    std::optional<RatFuncN> as_basic_crossing_multiple() const;

    std::string str() const;

  private:
    int k_ = 0;
    std::map<SetPartition, RatFuncN> terms_;
};

// Each term xi_p maps to N^closed * xi_{T o p}; like terms merge over Q(N).
PartitionVector apply_morphism(const TwoLinePartition& t, const PartitionVector& v);

// Drop every noncrossing term. Representative-dependent below the injectivity
// threshold; valid as the containment step xi_2 in <NC, xi>.
PartitionVector red_cr(const PartitionVector& v);

// The well-defined idempotent onto the crossing span, only available in the
// basis regime: refuses k > n0.
PartitionVector projection_cr(const PartitionVector& v, int n0);

}  // namespace qpc
