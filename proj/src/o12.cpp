#include "ruled/catalog.hpp"
#include "ruled/errors.hpp"

#include <deque>
#include <map>

namespace ruled {

namespace {

// All eight elements of the stabiliser of L, <s1, s2>, with shortest words.
std::vector<std::pair<IntMatrix, GroupWord>> stabiliser_words(const GeneratorSet& g) {
    std::vector<std::pair<IntMatrix, GroupWord>> out;
    std::deque<std::pair<IntMatrix, GroupWord>> queue;
    queue.push_back({IntMatrix::identity(3), {}});
    auto seen = [&](const IntMatrix& m) {
        for (const auto& e : out)
            if (e.first == m)
                return true;
        return false;
    };
    while (!queue.empty()) {
        auto [m, w] = queue.front();
        queue.pop_front();
        if (seen(m))
            continue;
        out.push_back({m, w});
        for (size_t gen : {size_t(0), size_t(1)}) {
            GroupWord w2 = w;
            w2.push(gen);
            queue.push_back({g[gen].action.matrix() * m, w2});
        }
    }
    return out;
}

} // namespace

GroupWord decompose_O12(const LatticeAutomorphism& a) {
    const auto model = ManifoldModel::rational(2);
    if (a.model() != model)
        throw PreconditionError("decompose_O12 works on the rational model with l = 2");
    const IntMatrix& m = a.matrix();
    if (!preserves_form(model, m))
        throw PreconditionError("matrix does not preserve the form");
    if (m(0, 0) <= 0)
        throw PreconditionError("matrix inverts the positive cone");
    const auto& g = GeneratorSet::cached(model);
    const size_t s1 = 0, s2 = 1, s0 = 2;

    // Carry x = M(L) = lL - m1E1 - m2E2 back to L.
    std::vector<Int> x{m(0, 0), m(1, 0), m(2, 0)};
    GroupWord u;
    auto apply = [&](size_t gen) {
        x = g[gen].action.matrix() * x;
        u.push(gen);
    };
    for (;;) {
        // m_i = -x_i
        if (x[2] > 0)
            apply(s2);
        if (x[1] > 0) {
            apply(s1);
            apply(s2);
            apply(s1);
        }
        if (-x[1] < -x[2])
            apply(s1);
        if (x[0] == 1)
            break;
        Int l = x[0];
        apply(s0);
        if (x[0] >= l || x[0] <= 0)
            throw InternalConsistencyError("O(1,2) descent failed to lower l");
    }
    if (x != std::vector<Int>{1, 0, 0})
        throw InternalConsistencyError("O(1,2) descent did not reach L");
    // B = U M fixes L.
    IntMatrix b = u.evaluate(g).matrix() * m;
    for (const auto& [mat, word] : stabiliser_words(g))
        if (mat == b) {
            GroupWord out = word;
            out.append(u.inverse());
            return out;
        }
    throw InternalConsistencyError("stabiliser element not found among signed permutations");
}

} // namespace ruled
