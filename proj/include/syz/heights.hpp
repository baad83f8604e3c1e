#ifndef SYZ_HEIGHTS_HPP
#define SYZ_HEIGHTS_HPP

#include "syz/numeric.hpp"

#include <map>

namespace syz {

/// Heights on a finite set of lattice points.  The API constructor takes
/// integers; rational values arise internally from epsilon perturbations.
class HeightFunction {
public:
    HeightFunction() = default;
    HeightFunction(std::vector<VecZ> domain, std::vector<Rat> values);

    int dim() const { return domain_.empty() ? 0 : int(domain_[0].size()); }
    const std::vector<VecZ>& domain() const { return domain_; }
    const std::vector<Rat>& values() const { return values_; }
    size_t size() const { return domain_.size(); }

    bool has(const VecZ& p) const { return index_.count(p) > 0; }
    int index_of(const VecZ& p) const;
    const Rat& value(const VecZ& p) const;
    int origin_index() const { return origin_; }   // -1 when 0 is not in the domain

    /// The perturbed vector: value + eps on every non-origin point.  When the
    /// triangulation uses all domain points this is exactly the vector that
    /// adds eps on its boundary vertices.
    HeightFunction with_epsilon(const Rat& eps) const;

private:
    std::vector<VecZ> domain_;    // sorted lexicographically
    std::vector<Rat> values_;
    std::map<VecZ, int, VecZLess> index_;
    int origin_ = -1;
};

} // namespace syz

#endif
