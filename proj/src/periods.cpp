#include "ruled/periods.hpp"

#include "ruled/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ruled {

PeriodVector::PeriodVector(ManifoldModel m, std::vector<Rat> head, std::vector<Rat> mu)
    : model_(std::move(m)), head_(std::move(head)), mu_(std::move(mu)) {
    if (mu_.size() != model_.ell())
        throw ValidationError("expected " + std::to_string(model_.ell()) + " mu periods, got " +
                              std::to_string(mu_.size()));
    for (auto& x : head_)
        x.canonicalize();
    for (auto& x : mu_)
        x.canonicalize();
}

PeriodVector PeriodVector::rational(const ManifoldModel& m, Rat lambda, std::vector<Rat> mu) {
    if (!m.is_rational())
        throw ModelMismatch("rational periods need the rational model");
    return PeriodVector(m, {std::move(lambda)}, std::move(mu));
}

PeriodVector PeriodVector::ruled(const ManifoldModel& m, Rat sigma, Rat nu, std::vector<Rat> mu) {
    if (m.is_rational())
        throw ModelMismatch("ruled periods need the ruled model");
    return PeriodVector(m, {std::move(sigma), std::move(nu)}, std::move(mu));
}

PeriodVector PeriodVector::from_list(const ManifoldModel& m, const std::vector<Rat>& v) {
    if (v.size() != m.rank())
        throw ValidationError("expected " + std::to_string(m.rank()) + " periods, got " +
                              std::to_string(v.size()));
    size_t h = m.is_rational() ? 1 : 2;
    return PeriodVector(m, std::vector<Rat>(v.begin(), v.begin() + h),
                        std::vector<Rat>(v.begin() + h, v.end()));
}

PeriodVector PeriodVector::of_class(const HomologyClass& c) {
    const auto& m = c.model();
    std::vector<Rat> mu;
    for (unsigned i = 1; i <= m.ell(); ++i)
        mu.emplace_back(pairing(c, HomologyClass::exceptional(m, i)));
    if (m.is_rational())
        return rational(m, Rat(pairing(c, HomologyClass::line(m))), mu);
    return ruled(m, Rat(pairing(c, HomologyClass::fiber(m))), Rat(pairing(c, HomologyClass::section(m))),
                 mu);
}

PeriodVector PeriodVector::from_dual_coefficients(const ManifoldModel& m, const std::vector<Rat>& c) {
    if (c.size() != m.rank())
        throw ValidationError("dual class has the wrong length");
    size_t h = m.is_rational() ? 1 : 2;
    std::vector<Rat> mu;
    for (size_t i = h; i < c.size(); ++i)
        mu.push_back(-c[i]);
    return PeriodVector(m, std::vector<Rat>(c.begin(), c.begin() + h), mu);
}

const Rat& PeriodVector::lambda() const {
    if (!model_.is_rational())
        throw ModelMismatch("lambda is a rational-model period");
    return head_[0];
}

const Rat& PeriodVector::sigma() const {
    if (model_.is_rational())
        throw ModelMismatch("sigma is a ruled-model period");
    return head_[0];
}

const Rat& PeriodVector::nu() const {
    if (model_.is_rational())
        throw ModelMismatch("nu is a ruled-model period");
    return head_[1];
}

std::vector<Rat> PeriodVector::as_list() const {
    std::vector<Rat> v = head_;
    v.insert(v.end(), mu_.begin(), mu_.end());
    return v;
}

std::vector<Rat> PeriodVector::dual_class_coefficients() const {
    std::vector<Rat> v = head_;
    for (const auto& x : mu_)
        v.push_back(-x);
    return v;
}

Rat PeriodVector::period_of(const HomologyClass& c) const {
    if (c.model() != model_)
        throw ModelMismatch("class and periods belong to different models");
    auto d = dual_class_coefficients();
    const auto& g = model_.gram();
    Rat s = 0;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j)
            if (g(i, j) != 0)
                s += d[i] * Rat(g(i, j)) * Rat(c[j]);
    return s;
}

std::string PeriodVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < head_.size(); ++i)
        os << (i ? ", " : "") << head_[i].get_str();
    os << ";";
    for (size_t i = 0; i < mu_.size(); ++i)
        os << (i ? ", " : " ") << mu_[i].get_str();
    os << ")";
    return os.str();
}

bool positive_cone_contains(const PeriodVector& p) {
    Rat s = 0;
    for (const auto& x : p.mu())
        s += x * x;
    if (p.model().is_rational())
        return p.lambda() > 0 && p.lambda() * p.lambda() > s;
    return p.sigma() > 0 && 2 * p.sigma() * p.nu() > s;
}

bool satisfies_period_conditions(const PeriodVector& p) {
    const auto& g = GeneratorSet::cached(p.model());
    for (const auto& gen : g.generators())
        if (p.period_of(gen.root) < 0)
            return false;
    return true;
}

namespace {

// Period mu_i of a scaled dual class.
Int mu_of(const ManifoldModel& m, const std::vector<Int>& c, unsigned i) { return -c[m.e_index(i)]; }

Int pair_int(const ManifoldModel& m, const std::vector<Int>& c, const HomologyClass& r) {
    return pairing(HomologyClass(m, c), r);
}

} // namespace

PeriodReduction reduce_periods(const PeriodVector& p) {
    if (!positive_cone_contains(p))
        throw DomainError("period vector " + p.to_string() + " is not in the positive cone");
    const auto& gens = GeneratorSet::cached(p.model());
    const auto& m = p.model();
    unsigned ell = m.ell();

    auto dual = p.dual_class_coefficients();
    Int den = 1;
    for (const auto& x : dual)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> c;
    for (const auto& x : dual)
        c.push_back(Rat(x * Rat(den)).get_num());

    GroupWord word;
    auto apply = [&](size_t g) {
        c = gens[g].action.matrix() * c;
        word.push(g);
    };
    const HomologyClass& lead_root = gens[gens.leading()].root;
    // The potential (lambda, resp. nu) is a positive integer inside the cone
    // and drops on every leading step; this is only a safety net.
    const size_t guard = 100000000;
    for (size_t iter = 0;; ++iter) {
        if (iter > guard)
            throw InternalConsistencyError("period reduction failed to terminate");
        for (unsigned i = 1; i <= ell; ++i) {
            if (mu_of(m, c, i) >= 0)
                continue;
            for (unsigned k = i; k < ell; ++k)
                apply(*gens.transposition(k));
            apply(gens.flip());
            i = 0;  // positions moved; rescan
        }
        for (bool swapped = true; swapped;) {
            swapped = false;
            for (unsigned k = 1; k < ell; ++k)
                if (mu_of(m, c, k) < mu_of(m, c, k + 1)) {
                    apply(*gens.transposition(k));
                    swapped = true;
                }
        }
        if (pair_int(m, c, lead_root) < 0) {
            apply(gens.leading());
            continue;
        }
        break;
    }
    std::vector<Rat> out;
    for (const auto& x : c) {
        Rat r(x, den);
        r.canonicalize();
        out.push_back(r);
    }
    PeriodReduction res{PeriodVector::from_dual_coefficients(m, out), word, {}};
    for (unsigned i = 1; i <= ell; ++i)
        if (res.reduced.mu()[i - 1] == 0)
            res.boundary_flags.push_back("zero_period:E" + std::to_string(i));
    if (!satisfies_period_conditions(res.reduced))
        throw InternalConsistencyError("reduced periods violate the period conditions");
    return res;
}

std::vector<HomologyClass> wall_classes(const ManifoldModel& m) {
    if ((m.is_rational() && m.ell() < 3) || (!m.is_rational() && m.ell() < 2))
        throw PreconditionError("wall systems need rational l >= 3 or ruled l >= 2");
    std::vector<HomologyClass> w{HomologyClass::S_prime(m)};
    for (unsigned i = 1; i < m.ell(); ++i)
        w.push_back(HomologyClass::S(m, i));
    return w;
}

std::vector<std::string> wall_names(const ManifoldModel& m) {
    std::vector<std::string> n{m.is_rational() ? "S'123" : "S'12"};
    for (unsigned i = 1; i < m.ell(); ++i)
        n.push_back("S" + std::to_string(i) + "," + std::to_string(i + 1));
    return n;
}

LagrangianSystem lagrangian_system(const PeriodVector& p) {
    const auto& m = p.model();
    auto walls = wall_classes(m);
    if (!positive_cone_contains(p) || !satisfies_period_conditions(p))
        throw PreconditionError("lagrangian_system needs reduced periods; got " + p.to_string());
    auto names = wall_names(m);
    LagrangianSystem sys{m, {}, {}, {}, {}, "", "", std::nullopt};
    for (size_t w = 0; w < walls.size(); ++w)
        if (p.period_of(walls[w]) == 0) {
            sys.members.push_back(w);
            sys.classes.push_back(walls[w]);
            sys.class_names.push_back(names[w]);
        }
    if (!sys.members.empty()) {
        size_t n = sys.members.size();
        std::vector<std::vector<CoxeterLabel>> mat(n, std::vector<CoxeterLabel>(n, CoxeterLabel::finite(1)));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                Int x = abs(pairing(sys.classes[a], sys.classes[b]));
                if (x > 1)
                    throw InternalConsistencyError("wall classes pair with |value| > 1");
                mat[a][b] = CoxeterLabel::finite(x == 1 ? 3 : 2);
            }
        CoxeterSystem sub(mat);
        sub.set_vertex_names(sys.class_names);
        sys.components = classify_simply_laced(sub);
        sys.type = type_label(sys.components);
        sys.subsystem = sub;
        if (!is_finite_type(sub))
            throw InternalConsistencyError("Lagrangian system of type " + sys.type + " is not finite");
    } else {
        sys.type = "trivial";
    }
    if (sys.members.size() == walls.size())
        sys.alias = (m.is_rational() ? "E" : "D") + std::to_string(m.ell());
    return sys;
}

std::vector<MaximalSystem> maximal_systems(const ManifoldModel& m) {
    unsigned ell = m.ell();
    auto range = [](size_t lo, size_t hi) {
        std::vector<size_t> v;
        for (size_t i = lo; i < hi; ++i)
            v.push_back(i);
        return v;
    };
    if (!m.is_rational()) {
        if (ell < 2)
            throw PreconditionError("ruled wall systems need l >= 2");
        return {{"D" + std::to_string(ell), range(0, ell)}};
    }
    if (ell < 3)
        throw PreconditionError("rational wall systems need l >= 3");
    if (ell <= 8)
        return {{"E" + std::to_string(ell), range(0, ell)}};
    std::vector<MaximalSystem> out;
    out.push_back({"A" + std::to_string(ell - 1), range(1, ell)});
    auto d = range(2, ell);
    d.insert(d.begin(), 0);
    out.push_back({"D" + std::to_string(ell - 1), d});
    auto a1 = range(3, ell);
    a1.insert(a1.begin(), 0);
    a1.insert(a1.begin(), 1);
    out.push_back({"A1+A" + std::to_string(ell - 2), a1});
    for (unsigned k = 3; k <= 8; ++k) {
        auto v = range(0, k);
        auto tail = range(k + 1, ell);
        v.insert(v.end(), tail.begin(), tail.end());
        std::string label = "E" + std::to_string(k);
        if (ell - k - 1 > 0)
            label += "+A" + std::to_string(ell - k - 1);
        out.push_back({label, v});
    }
    return out;
}

MaximalSystem maximal_system_membership(const LagrangianSystem& sys) {
    for (const auto& cand : maximal_systems(sys.model)) {
        bool inside = true;
        for (size_t w : sys.members)
            if (std::find(cand.walls.begin(), cand.walls.end(), w) == cand.walls.end()) {
                inside = false;
                break;
            }
        if (inside)
            return cand;
    }
    throw InternalConsistencyError("Lagrangian system " + sys.type +
                                   " lies in none of the listed maximal systems");
}

} // namespace ruled
