#pragma once

#include "ruled/weyl.hpp"

#include <vector>

namespace ruled {

struct ClassReduction {
    bool in_orbit = false;
    // E_l when in_orbit; otherwise the fixed point where descent stopped.
    HomologyClass canonical;
    // Evaluates to an automorphism carrying the input to canonical.
    GroupWord word;
    // |c.L| (rational) or |c.Y| (ruled) before each descent step.
    std::vector<Int> k_trace;
};

// Transport an exceptional candidate (c.c = -1) to E_l.
//   rational l >= 3: descend |k| = |c.L| with s0 after making the m_i
//   non-negative and sorted; stops at +-E_j or at a class with
//   k >= m1+m2+m3, which is then reported as not in the orbit.
//   ruled l >= 2: c.F is invariant, so c.F != 0 is not in the orbit; with
//   c.F = 0 the class is +-E_j + bF and bF is removed by the paired switch
//   E1 -> F-E1, E2 -> F-E2 combined with sign flips.
ClassReduction reduce_class(const GeneratorSet& g, const HomologyClass& c);

} // namespace ruled
