#pragma once

#include "ruled/lattice.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace test {

inline ruled::HomologyClass cls(const ruled::ManifoldModel& m, std::initializer_list<long> c) {
    std::vector<ruled::Int> v;
    for (long x : c)
        v.emplace_back(x);
    return ruled::HomologyClass(m, std::move(v));
}

inline ruled::HomologyClass cls(const ruled::ManifoldModel& m, const std::vector<long>& c) {
    std::vector<ruled::Int> v;
    for (long x : c)
        v.emplace_back(x);
    return ruled::HomologyClass(m, std::move(v));
}

// Every integer vector of length n with entries in [-r, r].
template <class F>
void for_each_box(size_t n, long r, F f) {
    std::vector<long> v(n, -r);
    for (;;) {
        f(v);
        size_t i = 0;
        while (i < n && v[i] == r)
            v[i++] = -r;
        if (i == n)
            return;
        ++v[i];
    }
}

inline std::mt19937_64& rng(uint64_t seed = 0x5eed) {
    static std::mt19937_64 g(seed);
    return g;
}

} // namespace test
