#include "syz/heights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace syz {

HeightFunction::HeightFunction(std::vector<VecZ> domain, std::vector<Rat> values) {
    if (domain.size() != values.size())
        throw std::invalid_argument("HeightFunction: domain/value size mismatch");
    std::vector<size_t> order(domain.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return lex_less(domain[a], domain[b]); });
    domain_.reserve(domain.size());
    values_.reserve(values.size());
    for (size_t i : order) {
        domain_.push_back(domain[i]);
        values_.push_back(values[i]);
    }
    for (size_t i = 0; i < domain_.size(); ++i) {
        if (!index_.emplace(domain_[i], int(i)).second)
            throw std::invalid_argument("HeightFunction: duplicate domain point " + to_string(domain_[i]));
        if (domain_[i].isZero()) origin_ = int(i);
    }
}

int HeightFunction::index_of(const VecZ& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

const Rat& HeightFunction::value(const VecZ& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("HeightFunction: point " + to_string(p) + " not in domain");
    return values_[it->second];
}

HeightFunction HeightFunction::with_epsilon(const Rat& eps) const {
    std::vector<Rat> vals = values_;
    for (size_t i = 0; i < domain_.size(); ++i)
        if (!domain_[i].isZero()) vals[i] += eps;
    return HeightFunction(domain_, std::move(vals));
}

} // namespace syz
