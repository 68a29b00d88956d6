#include "ruled/class_reduction.hpp"

#include "ruled/errors.hpp"

namespace ruled {

namespace {

struct Walker {
    const GeneratorSet& g;
    std::vector<Int> c;
    GroupWord word;

    const ManifoldModel& model() const { return g.model(); }
    // Coefficient of E_i (note: m_i = c.E_i = -coefficient).
    const Int& e(unsigned i) const { return c[model().e_index(i)]; }
    void apply(size_t gen) {
        c = g[gen].action.matrix() * c;
        word.push(gen);
    }
    void transpose(unsigned k) { apply(*g.transposition(k)); }
    // Move the E_from slot to E_to by adjacent transpositions.
    void move(unsigned from, unsigned to) {
        while (from < to)
            transpose(from++);
        while (from > to)
            transpose(--from);
    }
    // Negate the E_i coefficient with the conjugate of s_l.
    void flip(unsigned i) {
        unsigned ell = model().ell();
        move(i, ell);
        apply(g.flip());
        move(ell, i);
    }
};

ClassReduction finish(Walker& w, bool in_orbit, std::vector<Int> trace) {
    ClassReduction r{in_orbit, HomologyClass(w.model(), w.c), w.word, std::move(trace)};
    return r;
}

ClassReduction reduce_rational(const GeneratorSet& g, const HomologyClass& c) {
    Walker w{g, c.coeffs(), {}};
    unsigned ell = g.model().ell();
    std::vector<Int> trace;
    for (;;) {
        Int k = w.c[0];
        if (k == 0) {
            // sum m_i^2 = 1: the class is +-E_j.
            unsigned j = 0;
            for (unsigned i = 1; i <= ell; ++i)
                if (w.e(i) != 0)
                    j = i;
            w.move(j, ell);
            if (w.e(ell) < 0)
                w.apply(g.flip());
            return finish(w, true, std::move(trace));
        }
        int eps = k > 0 ? 1 : -1;
        // Work with eps*c: its m_i = -eps*coeff must become >= 0 and sorted.
        auto m = [&](unsigned i) { return Int(-eps * w.e(i)); };
        for (unsigned i = 1; i <= ell; ++i)
            if (m(i) < 0) {
                w.move(i, ell);
                w.apply(g.flip());
                i = 0;
            }
        for (bool swapped = true; swapped;) {
            swapped = false;
            for (unsigned kk = 1; kk < ell; ++kk)
                if (m(kk) < m(kk + 1)) {
                    w.transpose(kk);
                    swapped = true;
                }
        }
        Int ak = abs(k);
        if (ak >= m(1) + m(2) + m(3))
            return finish(w, false, std::move(trace));
        trace.push_back(ak);
        w.apply(g.leading());
        if (abs(w.c[0]) >= ak)
            throw InternalConsistencyError("descent step did not decrease |k|");
    }
}

ClassReduction reduce_ruled(const GeneratorSet& g, const HomologyClass& c) {
    const auto& model = g.model();
    unsigned ell = model.ell();
    Walker w{g, c.coeffs(), {}};
    std::vector<Int> trace;
    if (c[0] != 0)  // c.F is the Y-coefficient
        return finish(w, false, std::move(trace));
    unsigned j = 0;
    for (unsigned i = 1; i <= ell; ++i)
        if (w.e(i) != 0)
            j = i;
    w.move(j, 1);
    if (w.e(1) < 0)
        w.flip(1);
    // phi = s1 then s0 sends E1 -> F-E1 and E2 -> F-E2.
    size_t s0 = g.leading();
    size_t s1 = *g.transposition(1);
    auto phi = [&] {
        w.apply(s1);
        w.apply(s0);
    };
    // E1 + bF: (flip E1, phi) lowers b by one; (phi, flip E1) raises it.
    while (w.c[1] != 0) {
        Int b = w.c[1];
        trace.push_back(abs(b));
        if (b > 0) {
            w.flip(1);
            phi();
        } else {
            phi();
            w.flip(1);
        }
        if (abs(w.c[1]) >= abs(b) || w.e(1) != 1)
            throw InternalConsistencyError("ruled descent step failed");
    }
    w.move(1, ell);
    return finish(w, true, std::move(trace));
}

} // namespace

ClassReduction reduce_class(const GeneratorSet& g, const HomologyClass& c) {
    if (c.model() != g.model())
        throw ModelMismatch("class and generators belong to different models");
    if (square(c) != -1)
        throw PreconditionError("reduce_class needs c.c = -1, got " + square(c).get_str());
    const auto& m = g.model();
    if (m.is_rational()) {
        if (m.ell() < 3)
            throw PreconditionError("rational class reduction needs l >= 3");
        return reduce_rational(g, c);
    }
    if (m.ell() < 2)
        throw PreconditionError("ruled class reduction needs l >= 2");
    return reduce_ruled(g, c);
}

} // namespace ruled
