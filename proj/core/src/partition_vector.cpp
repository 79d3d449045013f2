#include "qpc/partition_vector.hpp"

#include <sstream>

#include "qpc/error.hpp"

namespace qpc {

PartitionVector PartitionVector::basis(const SetPartition& p, RatFuncN coeff) {
    PartitionVector v(p.points());
    v.add_term(p, coeff);
    return v;
}

RatFuncN PartitionVector::coeff(const SetPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RatFuncN() : it->second;
}

void PartitionVector::add_term(const SetPartition& p, const RatFuncN& c) {
    if (c.is_zero()) return;
    if (terms_.empty() && k_ == 0) k_ = p.points();
    if (p.points() != k_) throw shape_error("PartitionVector: mixed point counts");
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PartitionVector& PartitionVector::operator+=(const PartitionVector& o) {
    if (!o.is_zero() && !is_zero() && k_ != o.k_)
        throw shape_error("PartitionVector: mixed point counts");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PartitionVector& PartitionVector::operator-=(const PartitionVector& o) {
    if (!o.is_zero() && !is_zero() && k_ != o.k_)
        throw shape_error("PartitionVector: mixed point counts");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PartitionVector& PartitionVector::operator*=(const RatFuncN& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

std::optional<RatFuncN> PartitionVector::as_basic_crossing_multiple() const {
    if (terms_.size() != 1 || k_ != 4) return std::nullopt;
    const auto& [p, c] = *terms_.begin();
    if (!(p == SetPartition::basic_crossing())) return std::nullopt;
    return c;
}

std::string PartitionVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*xi_" << p.str();
        first = false;
    }
    return os.str();
}

PartitionVector apply_morphism(const TwoLinePartition& t, const PartitionVector& v) {
    if (t.upper() != v.k()) throw shape_error("apply_morphism: shape mismatch");
    PartitionVector out(t.lower());
    const PolyN n = PolyN::variable();
    for (const auto& [p, c] : v.terms()) {
        auto [composed, closed] = compose(TwoLinePartition::vector(p), t);
        out.add_term(composed.lower_partition(), c * RatFuncN(PolyN::monomial(closed)));
    }
    return out;
}

PartitionVector red_cr(const PartitionVector& v) {
    PartitionVector out(v.k());
    for (const auto& [p, c] : v.terms())
        if (!is_noncrossing(p)) out.add_term(p, c);
    return out;
}

PartitionVector projection_cr(const PartitionVector& v, int n0) {
    if (v.k() > n0)
        throw argument_error("projection_cr: k=" + std::to_string(v.k()) +
                             " beyond the injectivity regime at N=" + std::to_string(n0));
    return red_cr(v);
}

}  // namespace qpc
