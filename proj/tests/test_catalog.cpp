#include "ruled/catalog.hpp"
#include "ruled/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ruled;
using N = GroupNode;

namespace {

const N z2 = N::cyclic(2);

// Fixture labels are annotations; compare the group shape only.
N strip(N n) {
    if (n.kind != N::Kind::BlackBox)
        n.label.clear();
    for (auto& c : n.children)
        c = strip(c);
    return n;
}

GroupWord random_word(const GeneratorSet& g, size_t max_len) {
    auto& rng = test::rng();
    GroupWord w;
    size_t len = rng() % (max_len + 1);
    for (size_t i = 0; i < len; ++i)
        w.push(rng() % g.size());
    return w;
}

LatticeAutomorphism aut(const ManifoldModel& m, std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix a(rows.size(), rows.size());
    size_t i = 0;
    for (const auto& r : rows) {
        size_t j = 0;
        for (long x : r)
            a(i, j++) = x;
        ++i;
    }
    return LatticeAutomorphism(m, a);
}

} // namespace

TEST_CASE("closed-case fixtures") {
    auto cp2 = describe_diffeotopy("CP2");
    CHECK(strip(cp2.structure) == z2);
    CHECK(cp2.realized_as == "W(A1)");

    auto b2 = N::semidirect(N::direct_sum({z2, z2}), z2, N::Normal::Left);
    CHECK(strip(describe_diffeotopy("S2xS2").structure) == b2);
    CHECK(strip(describe_diffeotopy("S2~xS2").structure) == b2);
    CHECK(describe_diffeotopy("S2xS2").realized_as == "W(B2)");

    for (const char* y : {"YxS2", "Y~xS2"}) {
        auto d = describe_diffeotopy(y, 2);
        CHECK(strip(d.structure) == N::direct_sum({z2, z2}));
        CHECK(d.name.find("g=2") != std::string::npos);
        CHECK_THROWS_AS(describe_diffeotopy(y, 0), ValidationError);
    }

    auto l3 = describe_diffeotopy("(S2xS2)#CP2bar");
    REQUIRE(l3.structure.kind == N::Kind::Coxeter);
    CHECK(*l3.structure.system == CoxeterSystem::L3_4_inf());
    CHECK(l3.realized_as == "W(L3(4,inf))");

    auto i2 = describe_diffeotopy("(YxS2)#CP2bar", 3);
    CHECK(i2.structure == N::semidirect(z2, N::free_abelian(1), N::Normal::Right));
    CHECK(i2.structure.to_string() == "Z2 |x Z");
    CHECK(i2.realized_as == "W(I2(inf))");

    CHECK(catalog_labels().size() == 7);
    CHECK_THROWS_AS(describe_diffeotopy("K3"), ValidationError);
}

TEST_CASE("general blow-ups") {
    auto r5 = describe_diffeotopy(ManifoldModel::rational(5));
    CHECK(r5.structure == N::semidirect(N::black_box("Gamma_box"), N::coxeter(CoxeterSystem::BE(6))));
    CHECK(r5.structure.to_string() == "Gamma_box x| W(BE6)");

    // small l routes to the closed cases
    CHECK(strip(describe_diffeotopy(ManifoldModel::rational(0)).structure) == z2);
    CHECK(describe_diffeotopy(ManifoldModel::rational(2)).name == "(S2xS2)#CP2bar");
    CHECK(describe_diffeotopy(ManifoldModel::ruled(0, 0)).name == "S2xS2");
    CHECK(describe_diffeotopy(ManifoldModel::ruled(2, 0)).structure ==
          describe_diffeotopy(ManifoldModel::rational(3)).structure);
    CHECK(strip(describe_diffeotopy(ManifoldModel::ruled(0, 2)).structure) == N::direct_sum({z2, z2}));
    CHECK(describe_diffeotopy(ManifoldModel::ruled(1, 2)).realized_as == "W(I2(inf))");

    auto d = describe_diffeotopy(ManifoldModel::ruled(3, 2));
    CHECK(d.structure.to_string() == "((Gamma_box x| ((Z2)^4)) x| Map~(Y,3)) x| W(BD4)");
    const auto& outer = d.structure;
    REQUIRE(outer.kind == N::Kind::Semidirect);
    CHECK(*outer.children[1].system == CoxeterSystem::BD(4));
    const auto& map = outer.children[0].children[1];
    REQUIRE(map.kind == N::Kind::Extension);
    CHECK(map.children[0] == N::free_abelian(8, "H1(Y;Z)^2"));
    CHECK(map.children[1] == N::black_box("Map(Y)"));
    const auto& bullet = outer.children[0].children[0];
    CHECK(bullet.children[0] == N::black_box("Gamma_box"));
    CHECK(bullet.children[1].children.size() == 4);
}

TEST_CASE("description JSON") {
    auto j = to_json(describe_diffeotopy("(YxS2)#CP2bar"));
    CHECK(j["structure"].dump() ==
          R"({"type":"semidirect","normal":"right","left":{"type":"cyclic","order":2},"right":{"type":"free_abelian","rank":1}})");
    CHECK(j["realized_as"] == "W(I2(inf))");
    auto k = to_json(describe_diffeotopy(ManifoldModel::ruled(2, 1)));
    CHECK(k["structure"]["right"]["coxeter"]["rank"] == 3);
    CHECK(k["summary"] == "((Gamma_box x| ((Z2)^2)) x| Map~(Y,2)) x| W(L3(4,4))");
}

TEST_CASE("decompose_O12 fixtures") {
    auto m = ManifoldModel::rational(2);
    const auto& g = GeneratorSet::cached(m);
    CHECK(decompose_O12(LatticeAutomorphism::identity(m)).empty());
    auto w = decompose_O12(reflection_along(HomologyClass::exceptional(m, 2)));
    CHECK(w.names(g) == std::vector<std::string>{"s2"});
    CHECK(decompose_O12(g[g.index_of("s0*")].action).names(g) == std::vector<std::string>{"s0*"});

    CHECK_THROWS_AS(decompose_O12(aut(m, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), PreconditionError);
    CHECK_THROWS_AS(decompose_O12(LatticeAutomorphism::identity(ManifoldModel::rational(3))),
                    PreconditionError);
    CHECK_THROWS_AS(aut(m, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), ValidationError);
}

TEST_CASE("decompose_O12 round trip on random words") {
    auto m = ManifoldModel::rational(2);
    const auto& g = GeneratorSet::cached(m);
    for (int t = 0; t < 1000; ++t) {
        auto w = random_word(g, 30);
        auto a = w.evaluate(g);
        auto d = decompose_O12(a);
        REQUIRE(d.evaluate(g) == a);
    }
}

TEST_CASE("every bounded O+(1,2;Z) matrix decomposes") {
    // Columns: v1 with v1.v1 = 1 and a > 0, v2 orthogonal with v2.v2 = -1,
    // v3 = +-G(v1 x v2).  Independent of the reflection machinery.
    auto m = ManifoldModel::rational(2);
    const auto& g = GeneratorSet::cached(m);
    const long B = 50;
    auto dot = [](const long* x, const long* y) { return x[0] * y[0] - x[1] * y[1] - x[2] * y[2]; };
    size_t count = 0;
    for (long a = 1; a <= B; ++a)
        for (long b = -B; b <= B; ++b)
            for (long c = -B; c <= B; ++c) {
                long v1[3] = {a, b, c};
                if (dot(v1, v1) != 1)
                    continue;
                for (long e = -B; e <= B; ++e)
                    for (long f = -B; f <= B; ++f) {
                        long num = b * e + c * f;
                        if (num % a != 0)
                            continue;
                        long v2[3] = {num / a, e, f};
                        if (std::abs(v2[0]) > B || dot(v2, v2) != -1)
                            continue;
                        long cr[3] = {v1[1] * v2[2] - v1[2] * v2[1], v1[2] * v2[0] - v1[0] * v2[2],
                                      v1[0] * v2[1] - v1[1] * v2[0]};
                        long v3[3] = {cr[0], -cr[1], -cr[2]};
                        for (int s : {1, -1}) {
                            long u[3] = {s * v3[0], s * v3[1], s * v3[2]};
                            if (std::abs(u[0]) > B || std::abs(u[1]) > B || std::abs(u[2]) > B)
                                continue;
                            IntMatrix M(3, 3);
                            for (int i = 0; i < 3; ++i) {
                                M(i, 0) = v1[i];
                                M(i, 1) = v2[i];
                                M(i, 2) = u[i];
                            }
                            REQUIRE(preserves_form(m, M));
                            LatticeAutomorphism A(m, M);
                            REQUIRE(decompose_O12(A).evaluate(g) == A);
                            ++count;
                        }
                    }
            }
    MESSAGE(count << " matrices with entries bounded by " << B);
    CHECK(count > 300);
}
