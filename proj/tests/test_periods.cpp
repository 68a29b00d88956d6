#include "fundamental_domain.hpp"
#include "ruled/errors.hpp"
#include "ruled/periods.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ruled;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> r;
    for (long x : v)
        r.emplace_back(x);
    return r;
}

PeriodVector rp(unsigned ell, std::initializer_list<long> v) {
    return PeriodVector::from_list(ManifoldModel::rational(ell), rats(v));
}

// Word certificate: evaluating the word on the dual class gives the
// reduced dual class.
void check_certificate(const PeriodVector& in, const PeriodReduction& r) {
    auto g = GeneratorSet::for_model(in.model());
    auto M = r.word.evaluate(g).matrix();
    auto c = in.dual_class_coefficients();
    std::vector<Rat> out(c.size(), Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j)
            out[i] += Rat(M(i, j)) * c[j];
    CAPTURE(in.to_string());
    CAPTURE(r.reduced.to_string());
    CAPTURE(r.word.letters.size());
    REQUIRE(out == r.reduced.dual_class_coefficients());
}

} // namespace

TEST_CASE("period vector conventions") {
    auto m = ManifoldModel::rational(3);
    auto p = PeriodVector::of_class(HomologyClass::anticanonical(m));
    CHECK(p == rp(3, {3, 1, 1, 1}));
    CHECK(p.dual_class_coefficients() == rats({3, -1, -1, -1}));
    CHECK(p.period_of(HomologyClass::S_prime(m)) == 0);
    CHECK(p.period_of(HomologyClass::exceptional(m, 2)) == 1);

    auto r = ManifoldModel::ruled(2, 1);
    auto q = PeriodVector::ruled(r, Rat(2), Rat(5), rats({1, 1}));
    CHECK(q.period_of(HomologyClass::fiber(r)) == 2);
    CHECK(q.period_of(HomologyClass::section(r)) == 5);
    CHECK(PeriodVector::of_class(test::cls(r, {2, 5, -1, -1})) == q);
    CHECK_THROWS_AS(PeriodVector::rational(r, Rat(1), {}), ModelMismatch);
    CHECK_THROWS_AS(rp(3, {3, 1}), ValidationError);
}

TEST_CASE("cone predicate on periods") {
    CHECK(positive_cone_contains(rp(3, {3, 1, 1, 1})));
    CHECK_FALSE(positive_cone_contains(rp(1, {1, 1})));
    auto r = ManifoldModel::ruled(2, 1);
    CHECK(positive_cone_contains(PeriodVector::ruled(r, Rat(2), Rat(1), rats({1, 1}))));
    CHECK(positive_cone_contains(PeriodVector::ruled(r, Rat(2), Rat(2), rats({1, 1}))));
    CHECK_FALSE(positive_cone_contains(PeriodVector::ruled(r, Rat(1), Rat(1), rats({1, 1}))));
}

TEST_CASE("reduction fixtures") {
    auto a = reduce_periods(rp(3, {3, 1, 1, 1}));
    CHECK(a.reduced == rp(3, {3, 1, 1, 1}));
    CHECK(a.word.empty());
    CHECK(a.boundary_flags.empty());

    auto in = rp(5, {6, 3, 3, 3, 1, 1});
    auto b = reduce_periods(in);
    CHECK(b.reduced == rp(5, {3, 1, 1, 0, 0, 0}));
    CHECK(b.word.letters.front() == 0);
    CHECK(b.boundary_flags == std::vector<std::string>{"zero_period:E3", "zero_period:E4", "zero_period:E5"});
    check_certificate(in, b);

    // s0 by hand: d = 6 - 9 = -3 gives (3; 0,0,0,1,1), then sorting.
    Rat d = Rat(6) - 9;
    CHECK(Rat(6) + d == 3);
    CHECK(Rat(3) + d == 0);

    CHECK_THROWS_AS(reduce_periods(rp(3, {1, 1, 0, 0})), DomainError);
}

TEST_CASE("rational periods with denominators") {
    auto m = ManifoldModel::rational(4);
    std::vector<Rat> v{parse_rat("7/2"), parse_rat("3/2"), parse_rat("-5/3"), parse_rat("1/6"), Rat(1)};
    auto p = PeriodVector::from_list(m, v);
    auto r = reduce_periods(p);
    CHECK(satisfies_period_conditions(r.reduced));
    check_certificate(p, r);
}

TEST_CASE("reduction round trip on random inputs") {
    auto& g = test::rng();
    for (unsigned ell : {2u, 3u, 4u, 6u, 9u, 12u}) {
        auto m = ManifoldModel::rational(ell);
        std::uniform_int_distribution<long> d(-30, 30);
        int done = 0;
        while (done < 200) {
            std::vector<Rat> v{Rat(std::abs(d(g)) + 1, 1 + g() % 3)};
            for (unsigned i = 0; i < ell; ++i)
                v.emplace_back(d(g), 1 + g() % 4);
            for (auto& x : v)
                x.canonicalize();
            auto p = PeriodVector::from_list(m, v);
            if (!positive_cone_contains(p))
                continue;
            auto r = reduce_periods(p);
            REQUIRE(satisfies_period_conditions(r.reduced));
            REQUIRE(positive_cone_contains(r.reduced));
            check_certificate(p, r);
            // idempotent
            REQUIRE(reduce_periods(r.reduced).word.empty());
            ++done;
        }
    }
    for (unsigned ell : {1u, 2u, 3u, 5u}) {
        auto m = ManifoldModel::ruled(ell, 1);
        std::uniform_int_distribution<long> d(-20, 20);
        int done = 0;
        while (done < 200) {
            std::vector<Rat> v{Rat(std::abs(d(g)) + 1), Rat(d(g), 1 + g() % 3)};
            for (unsigned i = 0; i < ell; ++i)
                v.emplace_back(d(g));
            v[1].canonicalize();
            auto p = PeriodVector::from_list(m, v);
            if (!positive_cone_contains(p))
                continue;
            auto r = reduce_periods(p);
            REQUIRE(satisfies_period_conditions(r.reduced));
            // sigma is invariant and nu only drops
            REQUIRE(r.reduced.sigma() == p.sigma());
            REQUIRE(r.reduced.nu() <= p.nu());
            check_certificate(p, r);
            ++done;
        }
    }
}

TEST_CASE("period conditions formulas") {
    CHECK(satisfies_period_conditions(rp(3, {3, 1, 1, 1})));
    CHECK_FALSE(satisfies_period_conditions(rp(3, {3, 1, 2, 0})));
    CHECK_FALSE(satisfies_period_conditions(rp(3, {3, 2, 1, 1})));
    CHECK_FALSE(satisfies_period_conditions(rp(3, {3, 1, 1, -1})));
    auto r = ManifoldModel::ruled(2, 1);
    CHECK(satisfies_period_conditions(PeriodVector::ruled(r, Rat(2), Rat(2), rats({1, 1}))));
    CHECK_FALSE(satisfies_period_conditions(PeriodVector::ruled(r, Rat(2), Rat(2), rats({2, 1}))));
}

TEST_CASE("fundamental domain uniqueness at desk scale") {
    {
        auto pts = test::cone_periods(3, 8, true);
        auto res = test::check_fundamental_domain(ManifoldModel::rational(3), pts, 30);
        CAPTURE(res.first_failure);
        CHECK(res.failures == 0);
        CHECK(res.components < res.inputs);
    }
    {
        auto pts = test::cone_periods(5, 3, true);
        auto res = test::check_fundamental_domain(ManifoldModel::rational(5), pts, 20);
        CAPTURE(res.first_failure);
        CHECK(res.failures == 0);
    }
}

TEST_CASE("Lagrangian system fixtures") {
    auto s3 = lagrangian_system(rp(3, {3, 1, 1, 1}));
    CHECK(s3.members == std::vector<size_t>{0, 1, 2});
    CHECK(s3.type == "A2+A1");
    CHECK(s3.alias == "E3");
    CHECK(maximal_system_membership(s3).label == "E3");

    auto r = ManifoldModel::ruled(2, 1);
    auto d2 = lagrangian_system(PeriodVector::ruled(r, Rat(2), Rat(2), rats({1, 1})));
    CHECK(d2.members == std::vector<size_t>{0, 1});
    CHECK(d2.type == "A1+A1");
    CHECK(d2.alias == "D2");
    CHECK(maximal_system_membership(d2).label == "D2");

    auto d5 = lagrangian_system(rp(5, {3, 1, 1, 1, 1, 1}));
    CHECK(d5.type == "D5");
    CHECK(d5.alias == "E5");

    auto e8 = lagrangian_system(rp(8, {3, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(e8.type == "E8");
    CHECK(maximal_system_membership(e8).label == "E8");

    auto a18 = lagrangian_system(rp(10, {5, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(a18.type == "A8+A1");
    CHECK(maximal_system_membership(a18).label == "A1+A8");

    auto empty = lagrangian_system(rp(10, {100, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11}));
    CHECK(empty.members.empty());
    CHECK(empty.type == "trivial");
    CHECK(maximal_system_membership(empty).label == "A9");

    CHECK_THROWS_AS(lagrangian_system(rp(3, {3, 1, 2, 0})), PreconditionError);
    CHECK_THROWS_AS(lagrangian_system(rp(2, {3, 1, 1})), PreconditionError);
}

TEST_CASE("maximal system lists") {
    auto list = maximal_systems(ManifoldModel::rational(10));
    std::vector<std::string> labels;
    for (const auto& m : list)
        labels.push_back(m.label);
    CHECK(labels == std::vector<std::string>{"A9", "D9", "A1+A8", "E3+A6", "E4+A5", "E5+A4", "E6+A3",
                                             "E7+A2", "E8+A1"});
    for (const auto& m : list) {
        auto sub = CoxeterSystem::E(9).rank() ? m.walls.size() : 0;
        CHECK(sub == 9);
    }
}

TEST_CASE("Lagrangian systems of reduced periods are finite and contained") {
    auto& g = test::rng();
    for (unsigned ell : {3u, 5u, 8u, 9u, 10u, 12u}) {
        auto m = ManifoldModel::rational(ell);
        std::uniform_int_distribution<long> d(0, 4);
        int done = 0;
        while (done < 300) {
            std::vector<Rat> v{Rat(d(g) + 3 + g() % 10)};
            for (unsigned i = 0; i < ell; ++i)
                v.emplace_back(d(g));
            v[1].canonicalize();
            auto p = PeriodVector::from_list(m, v);
            if (!positive_cone_contains(p))
                continue;
            auto red = reduce_periods(p).reduced;
            auto sys = lagrangian_system(red);
            auto box = maximal_system_membership(sys);
            for (size_t w : sys.members)
                REQUIRE(std::find(box.walls.begin(), box.walls.end(), w) != box.walls.end());
            if (sys.subsystem) {
                REQUIRE(is_finite_type(*sys.subsystem));
                // Cartan matrix = -pairings; its determinant is the product
                // of the classical component determinants.
                size_t n = sys.classes.size();
                IntMatrix cartan(n, n);
                for (size_t a = 0; a < n; ++a)
                    for (size_t b = 0; b < n; ++b)
                        cartan(a, b) = -pairing(sys.classes[a], sys.classes[b]);
                long expect = 1;
                for (const auto& c : sys.components) {
                    REQUIRE(c.series != '?');
                    expect *= c.series == 'A' ? c.rank + 1 : c.series == 'D' ? 4 : 9 - c.rank;
                }
                REQUIRE(determinant(cartan) == expect);
            }
            ++done;
        }
    }
}
