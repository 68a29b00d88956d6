#include "ruled/weyl.hpp"

#include "ruled/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace ruled {

GeneratorSet::GeneratorSet(ManifoldModel model, std::vector<Generator> gens, CoxeterSystem expected)
    : model_(std::move(model)), gens_(std::move(gens)), expected_(std::move(expected)) {}

namespace {

Generator make(const std::string& name, const HomologyClass& root) {
    return Generator{name, root, reflection_along(root)};
}

} // namespace

const GeneratorSet& GeneratorSet::cached(const ManifoldModel& m) {
    static std::mutex mu;
    static std::map<std::tuple<int, unsigned, unsigned>, std::unique_ptr<GeneratorSet>> memo;
    std::tuple<int, unsigned, unsigned> key{m.is_rational() ? 0 : 1, m.ell(), m.is_rational() ? 0 : m.genus()};
    std::lock_guard lock(mu);
    auto& slot = memo[key];
    if (!slot)
        slot = std::make_unique<GeneratorSet>(for_model(m));
    return *slot;
}

GeneratorSet GeneratorSet::for_model(const ManifoldModel& m) {
    unsigned ell = m.ell();
    std::vector<Generator> g;
    auto E = [&](unsigned i) { return HomologyClass::exceptional(m, i); };
    if (m.is_rational()) {
        if (ell == 2) {
            g.push_back(make("s1", HomologyClass::S(m, 1)));
            g.push_back(make("s2", E(2)));
            g.push_back(make("s0*", HomologyClass::line(m) - E(1) - E(2)));
            GeneratorSet gs(m, std::move(g), CoxeterSystem::L3_4_inf());
            gs.transpositions_ = {0};
            gs.flip_ = 1;
            gs.leading_ = 2;
            return gs;
        }
        if (ell < 2)
            throw PreconditionError("rational diffeotopy Weyl group needs l >= 2");
    } else {
        if (m.genus() == 0)
            throw PreconditionError(
                "ruled model with g = 0 is rational; use the rational model with l+1 blow-ups");
        if (ell == 1) {
            g.push_back(make("s1", E(1)));
            g.push_back(make("s0*", HomologyClass::E_prime(m, 1)));
            GeneratorSet gs(m, std::move(g), CoxeterSystem::I2_infinity());
            gs.flip_ = 0;
            gs.leading_ = 1;
            return gs;
        }
        if (ell < 1)
            throw PreconditionError("ruled diffeotopy Weyl group needs l >= 1");
    }
    g.push_back(make("s0", HomologyClass::S_prime(m)));
    for (unsigned i = 1; i < ell; ++i)
        g.push_back(make("s" + std::to_string(i), HomologyClass::S(m, i)));
    g.push_back(make("s" + std::to_string(ell), E(ell)));
    CoxeterSystem expected = m.is_rational() ? CoxeterSystem::BE(ell + 1) : CoxeterSystem::BD(ell + 1);
    GeneratorSet gs(m, std::move(g), expected);
    for (unsigned i = 1; i < ell; ++i)
        gs.transpositions_.push_back(i);
    gs.flip_ = ell;
    gs.leading_ = 0;
    return gs;
}

size_t GeneratorSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    throw ValidationError("no generator named '" + name + "' in this model");
}

std::optional<size_t> GeneratorSet::transposition(unsigned k) const {
    if (k < 1 || k > transpositions_.size())
        return std::nullopt;
    return transpositions_[k - 1];
}

LatticeAutomorphism GroupWord::evaluate(const GeneratorSet& g) const {
    IntMatrix acc = IntMatrix::identity(g.model().rank());
    for (size_t l : letters) {
        if (l >= g.size())
            throw ValidationError("word letter " + std::to_string(l) + " out of range");
        acc = g[l].action.matrix() * acc;
    }
    return LatticeAutomorphism(g.model(), std::move(acc));
}

std::vector<std::string> GroupWord::names(const GeneratorSet& g) const {
    std::vector<std::string> out;
    for (size_t l : letters)
        out.push_back(g[l].name);
    return out;
}

GroupWord GroupWord::from_names(const GeneratorSet& g, const std::vector<std::string>& names) {
    GroupWord w;
    for (const auto& n : names)
        w.push(g.index_of(n));
    return w;
}

bool PairOrder::matches() const {
    if (expected.is_infinite())
        return !observed.has_value();
    return observed.has_value() && *observed == expected.value();
}

bool PresentationReport::ok() const {
    if (!involutions)
        return false;
    for (const auto& p : pairs)
        if (!p.matches())
            return false;
    return true;
}

std::optional<unsigned> product_order(const IntMatrix& a, const IntMatrix& b, unsigned cap) {
    IntMatrix p = a * b;
    IntMatrix acc = p;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc * p;
    }
    return std::nullopt;
}

PresentationReport verify_presentation(const GeneratorSet& g, unsigned cap) {
    PresentationReport rep;
    const auto& sys = g.expected_system();
    for (size_t i = 0; i < g.size(); ++i) {
        const auto& m = g[i].action.matrix();
        if (!(m * m).is_identity())
            rep.involutions = false;
    }
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            PairOrder po{i, j, sys.m(i, j),
                         product_order(g[i].action.matrix(), g[j].action.matrix(), cap)};
            if (!po.expected.is_infinite() && !po.observed)
                throw PresentationViolation("order of " + g[i].name + g[j].name + " exceeds " +
                                            std::to_string(cap) + " but the graph says " +
                                            po.expected.to_string());
            rep.pairs.push_back(po);
        }
    return rep;
}

} // namespace ruled
