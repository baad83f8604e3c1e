#ifndef SYZ_TEST_SUPPORT_HPP
#define SYZ_TEST_SUPPORT_HPP

#include "syz/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace syz::testing {

inline VecZ zv(std::initializer_list<long> xs) {
    VecZ v(xs.size());
    int i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

inline VecQ qv(std::initializer_list<long> xs) {
    VecQ v(xs.size());
    int i = 0;
    for (long x : xs) v[i++] = Rat(x);
    return v;
}

inline std::vector<VecZ> zpts(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<VecZ> out;
    for (auto r : rows) out.push_back(zv(r));
    return out;
}

inline std::vector<VecQ> qpts(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<VecQ> out;
    for (auto r : rows) out.push_back(qv(r));
    return out;
}

template <class V, class Less>
struct VecListLess {
    bool operator()(const std::vector<V>& a, const std::vector<V>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        Less less;
        for (size_t i = 0; i < a.size(); ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return false;
    }
};
using ZCellLess = VecListLess<VecZ, VecZLess>;
using QCellLess = VecListLess<VecQ, VecQLess>;

} // namespace syz::testing

#endif
