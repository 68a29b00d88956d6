#pragma once

#include "ruled/bigint.hpp"
#include "ruled/lattice.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ruled {

// A sphere class kL - sum m_i E_i, recorded by k = [S].L and m_i = [S].E_i.
struct SphereCandidate {
    Int k;
    std::vector<Int> m;

    // q = sum m_i^2 - k^2 = -[S]^2; derived on demand.
    Int q() const;
    // m_i -> |m_i|, sorted descending.
    SphereCandidate normalized() const;
    bool is_normalized() const;
    HomologyClass to_class() const;
    static SphereCandidate of_class(const HomologyClass& c);
    std::string to_string() const;

    bool operator==(const SphereCandidate& o) const { return k == o.k && m == o.m; }
    bool operator<(const SphereCandidate& o) const {
        return k != o.k ? k < o.k : m < o.m;
    }
};

// k(k-3) < sum m_i(m_i - 1).  k < 2 throws OutOfRegime.
bool sw_inequality_holds(const SphereCandidate& c);

enum class Verdict {
    ConstraintHolds,      // k < m1 + m2 + m3
    DolgachevException,   // 3mL - m(E1..E9) - 2E10, m >= 2
    Violation,            // k >= m1+m2+m3, not exceptional, inequality satisfied
    SWProhibited,         // k >= m1+m2+m3 but no embedded sphere by the inequality
};

struct Certification {
    Verdict verdict;
    Int dolgachev_m;  // set for DolgachevException
};

std::string to_string(Verdict v);

// Requires q in {1,..,4} (OutOfScope otherwise) and normalized input
// (PreconditionError).
Certification e_sw_certify(const SphereCandidate& c);

// 3mL - m(E1+...+E9) - 2E10 as a candidate (ell >= 10, padded with zeros).
SphereCandidate dolgachev_class(const Int& m, unsigned ell = 10);
bool is_dolgachev(const SphereCandidate& c, Int* m_out = nullptr);

struct ExtremalSequence {
    std::vector<Int> m;
    Int sum_of_squares;
};

// Maximiser of sum m_i^2 over sorted non-negative m with m1+m2+m3 <= k.
ExtremalSequence extremal_sequence(const Int& k, unsigned ell);

// All sorted candidates with q = 1, 2 <= k <= k_max and k >= m1+m2+m3.
std::vector<SphereCandidate> dichotomy_search(unsigned ell, unsigned k_max = 40,
                                              unsigned threads = 0);

} // namespace ruled
