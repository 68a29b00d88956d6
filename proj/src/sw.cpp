#include "ruled/sw.hpp"

#include "ruled/errors.hpp"
#include "ruled/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace ruled {

Int SphereCandidate::q() const {
    Int s = -k * k;
    for (const auto& x : m)
        s += x * x;
    return s;
}

SphereCandidate SphereCandidate::normalized() const {
    SphereCandidate c{k, m};
    for (auto& x : c.m)
        x = abs(x);
    std::sort(c.m.begin(), c.m.end(), [](const Int& a, const Int& b) { return a > b; });
    return c;
}

bool SphereCandidate::is_normalized() const {
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0)
            return false;
        if (i > 0 && m[i] > m[i - 1])
            return false;
    }
    return true;
}

HomologyClass SphereCandidate::to_class() const {
    auto model = ManifoldModel::rational(static_cast<unsigned>(m.size()));
    std::vector<Int> c{k};
    for (const auto& x : m)
        c.push_back(-x);
    return HomologyClass(model, std::move(c));
}

SphereCandidate SphereCandidate::of_class(const HomologyClass& c) {
    if (!c.model().is_rational())
        throw ModelMismatch("sphere candidates live in the rational model");
    SphereCandidate s{c[0], {}};
    for (size_t i = 1; i < c.coeffs().size(); ++i)
        s.m.push_back(-c[i]);
    return s;
}

std::string SphereCandidate::to_string() const {
    std::ostringstream os;
    os << "(" << k.get_str() << ";";
    for (size_t i = 0; i < m.size(); ++i)
        os << (i ? ", " : " ") << m[i].get_str();
    os << ")";
    return os.str();
}

bool sw_inequality_holds(const SphereCandidate& c) {
    if (c.k < 2)
        throw OutOfRegime("SW inequality applies for k >= 2; k = " + c.k.get_str());
    Int rhs = 0;
    for (const auto& x : c.m)
        rhs += x * (x - 1);
    return c.k * (c.k - 3) < rhs;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::ConstraintHolds:
        return "ConstraintHolds";
    case Verdict::DolgachevException:
        return "DolgachevException";
    case Verdict::Violation:
        return "Violation";
    case Verdict::SWProhibited:
        return "SW-prohibited";
    }
    return "?";
}

SphereCandidate dolgachev_class(const Int& m, unsigned ell) {
    if (ell < 10)
        throw PreconditionError("the Dolgachev family needs l >= 10");
    SphereCandidate c{3 * m, std::vector<Int>(ell, Int(0))};
    for (unsigned i = 0; i < 9; ++i)
        c.m[i] = m;
    c.m[9] = 2;
    return c;
}

bool is_dolgachev(const SphereCandidate& c, Int* m_out) {
    if (c.m.size() < 10)
        return false;
    const Int& m = c.m[0];
    if (m < 2 || c.k != 3 * m)
        return false;
    for (unsigned i = 0; i < 9; ++i)
        if (c.m[i] != m)
            return false;
    if (c.m[9] != 2)
        return false;
    for (size_t i = 10; i < c.m.size(); ++i)
        if (c.m[i] != 0)
            return false;
    if (m_out)
        *m_out = m;
    return true;
}

namespace {

Int top3(const std::vector<Int>& m) {
    Int s = 0;
    for (size_t i = 0; i < 3 && i < m.size(); ++i)
        s += m[i];
    return s;
}

} // namespace

Certification e_sw_certify(const SphereCandidate& c) {
    Int q = c.q();
    if (q < 1 || q > 4)
        throw OutOfScope("certifier covers [S]^2 in {-1,..,-4}; q = " + q.get_str());
    if (!c.is_normalized())
        throw PreconditionError("candidate must be normalized (m_i >= 0, descending)");
    if (c.k < top3(c.m))
        return {Verdict::ConstraintHolds, 0};
    // k <= 1 with k >= m1+m2+m3 forces [S]^2 >= 0 unless handled analytically.
    if (c.k < 2)
        throw OutOfRegime("k <= 1 is handled outside the SW inequality");
    Int dm;
    if (q == 4 && is_dolgachev(c, &dm))
        return {Verdict::DolgachevException, dm};
    if (sw_inequality_holds(c))
        return {Verdict::Violation, 0};
    return {Verdict::SWProhibited, 0};
}

ExtremalSequence extremal_sequence(const Int& k, unsigned ell) {
    if (k < 3 || ell < 3)
        throw PreconditionError("extremal sequence needs k >= 3 and l >= 3");
    // Optimal vectors have the shape (k-2t, t, ..., t) with 0 <= t <= k/3;
    // the objective is convex in t, so only the endpoints compete.
    Int t = k / 3;
    Int hi = (k - 2 * t) * (k - 2 * t) + Int(ell - 1) * t * t;
    Int lo = k * k;
    ExtremalSequence e;
    if (hi >= lo) {
        e.m.assign(ell, t);
        e.m[0] = k - 2 * t;
        e.sum_of_squares = hi;
    } else {
        e.m.assign(ell, Int(0));
        e.m[0] = k;
        e.sum_of_squares = lo;
    }
    return e;
}

namespace {

// Sorted non-negative m_1..m_ell with sum of squares = target and
// m1+m2+m3 <= k.  Exact integer arithmetic on longs is enough here since
// k_max is small; guarded by the caller.
void enumerate(unsigned ell, long k, long target, std::vector<long>& cur, long remaining, long cap,
               long top_sum, std::vector<std::vector<long>>& out) {
    size_t pos = cur.size();
    if (pos == ell) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    long slots = static_cast<long>(ell - pos);
    if (remaining > slots * cap * cap)
        return;
    long hi = cap;
    while (hi * hi > remaining)
        --hi;
    if (pos < 3)
        hi = std::min(hi, k - top_sum);
    for (long v = hi; v >= 0; --v) {
        // remaining after v must fit in the later slots with values <= v
        long rest = remaining - v * v;
        if (rest > (slots - 1) * v * v)
            break;
        cur.push_back(v);
        enumerate(ell, k, target, cur, rest, v, pos < 3 ? top_sum + v : top_sum, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SphereCandidate> dichotomy_search(unsigned ell, unsigned k_max, unsigned threads) {
    if (ell < 3)
        throw PreconditionError("dichotomy search needs l >= 3");
    if (k_max > 100000)
        throw PreconditionError("k_max too large");
    std::vector<long> ks;
    for (long k = 2; k <= static_cast<long>(k_max); ++k)
        ks.push_back(k);
    unsigned nt = std::max(1u, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                                  static_cast<unsigned>(ks.size())));
    std::vector<std::vector<std::vector<long>>> per_k(ks.size());
    auto work = [&](unsigned t) {
        for (size_t i = t; i < ks.size(); i += nt) {
            long k = ks[i];
            std::vector<long> cur;
            enumerate(ell, k, k * k + 1, cur, k * k + 1, k, 0, per_k[i]);
        }
    };
    if (nt == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    std::vector<SphereCandidate> out;
    for (size_t i = 0; i < ks.size(); ++i)
        for (const auto& v : per_k[i]) {
            SphereCandidate c{Int(ks[i]), {}};
            for (long x : v)
                c.m.emplace_back(x);
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ruled
