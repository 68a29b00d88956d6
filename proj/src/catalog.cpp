#include "ruled/catalog.hpp"

#include "ruled/errors.hpp"

namespace ruled {

GroupNode GroupNode::cyclic(unsigned n, std::string label) {
    GroupNode g{Kind::Cyclic, n, std::move(label), std::nullopt, Normal::Left, {}};
    return g;
}

GroupNode GroupNode::free_abelian(unsigned rank, std::string label) {
    return GroupNode{Kind::FreeAbelian, rank, std::move(label), std::nullopt, Normal::Left, {}};
}

GroupNode GroupNode::coxeter(const CoxeterSystem& s, std::string label) {
    return GroupNode{Kind::Coxeter, static_cast<unsigned>(s.rank()),
                     label.empty() ? "W(" + s.name() + ")" : std::move(label), s, Normal::Left, {}};
}

GroupNode GroupNode::semidirect(GroupNode left, GroupNode right, Normal normal, std::string label) {
    return GroupNode{Kind::Semidirect, 0, std::move(label), std::nullopt, normal,
                     {std::move(left), std::move(right)}};
}

GroupNode GroupNode::direct_sum(std::vector<GroupNode> parts, std::string label) {
    return GroupNode{Kind::DirectSum, 0, std::move(label), std::nullopt, Normal::Left, std::move(parts)};
}

GroupNode GroupNode::extension(GroupNode kernel, GroupNode quotient, std::string label) {
    return GroupNode{Kind::Extension, 0, std::move(label), std::nullopt, Normal::Left,
                     {std::move(kernel), std::move(quotient)}};
}

GroupNode GroupNode::black_box(std::string label) {
    return GroupNode{Kind::BlackBox, 0, std::move(label), std::nullopt, Normal::Left, {}};
}

bool GroupNode::operator==(const GroupNode& o) const {
    if (kind != o.kind || n != o.n || label != o.label || normal != o.normal ||
        children != o.children || system.has_value() != o.system.has_value())
        return false;
    return !system || *system == *o.system;
}

std::string GroupNode::to_string() const {
    auto paren = [](const GroupNode& g) {
        bool compound = g.kind == Kind::Semidirect || g.kind == Kind::DirectSum;
        return compound ? "(" + g.to_string() + ")" : g.to_string();
    };
    switch (kind) {
    case Kind::Cyclic:
        return "Z" + std::to_string(n);
    case Kind::FreeAbelian:
        return n == 1 ? "Z" : "Z^" + std::to_string(n);
    case Kind::Coxeter:
        return label;
    case Kind::BlackBox:
        return label;
    case Kind::Extension:
        return label.empty() ? "ext(" + children[0].to_string() + ", " + children[1].to_string() + ")"
                             : label;
    case Kind::DirectSum: {
        if (!label.empty())
            return label;
        std::string s;
        for (size_t i = 0; i < children.size(); ++i)
            s += (i ? " + " : "") + paren(children[i]);
        return s;
    }
    case Kind::Semidirect:
        return paren(children[0]) + (normal == Normal::Left ? " x| " : " |x ") + paren(children[1]);
    }
    return "?";
}

namespace {

using K = GroupNode;

GroupNode z2(std::string label = "") { return K::cyclic(2, std::move(label)); }

GroupNode gamma_box() { return K::black_box("Gamma_box"); }

GroupNode h1_z2(unsigned genus) {
    std::vector<GroupNode> parts;
    for (unsigned i = 0; i < 2 * genus; ++i)
        parts.push_back(z2());
    return K::direct_sum(std::move(parts), "(Z2)^" + std::to_string(2 * genus));
}

GroupNode map_bar(unsigned genus, unsigned ell) {
    auto kernel = K::free_abelian(2 * genus * (ell >= 1 ? ell - 1 : 0), "H1(Y;Z)^" + std::to_string(ell >= 1 ? ell - 1 : 0));
    return K::extension(std::move(kernel), K::black_box("Map(Y)"),
                        "Map~(Y," + std::to_string(ell) + ")");
}

GroupDescription fixture(const std::string& label, unsigned genus) {
    if (label == "CP2")
        return {"CP2", z2("complex conjugation"), {"acts on H2 = <L> by -1"}, "W(A1)"};
    if (label == "S2xS2")
        return {"S2xS2",
                K::semidirect(K::direct_sum({z2("conj 1st factor"), z2("conj 2nd factor")}),
                              z2("factor swap"), K::Normal::Left),
                {"Z2 + Z2: conjugation on each CP1 factor", "Z2: (z,w) -> (w,z)"},
                "W(B2)"};
    if (label == "S2~xS2")
        return {"S2~xS2",
                K::semidirect(K::direct_sum({z2("-L"), z2("-E")}), z2("L <-> E"), K::Normal::Left),
                {"H2 = <L, E>", "Z2 + Z2: L -> -L, E -> -E", "Z2: L <-> E, orientation reversing"},
                "W(B2)"};
    if (genus == 0 && (label == "YxS2" || label == "Y~xS2" || label == "(YxS2)#CP2bar"))
        throw ValidationError("'" + label + "' needs genus >= 1");
    if (label == "YxS2")
        return {"YxS2 (g=" + std::to_string(genus) + ")",
                K::direct_sum({z2("-Y0"), z2("-F")}),
                {"H2 = <Y0, F>", "Z2 + Z2: Y0 -> -Y0, F -> -F"},
                "W(D2) = W(A1+A1)"};
    if (label == "Y~xS2")
        return {"Y~xS2 (g=" + std::to_string(genus) + ")",
                K::direct_sum({z2("-Y1, -F"), z2("-F, Y+1 <-> Y-1")}),
                {"H2 = <Y1, F>", "Z2: (Y1, F) -> (-Y1, -F)", "Z2: F -> -F, Y+1 <-> Y-1, orientation reversing"},
                "W(D2) = W(A1+A1)"};
    if (label == "(S2xS2)#CP2bar")
        return {"(S2xS2)#CP2bar", K::coxeter(CoxeterSystem::L3_4_inf()),
                {"O+(1,2,Z) on H2 = <L, E1, E2>", "s1, s2, s0* = reflections in E1-E2, E2, L-E1-E2"},
                "W(L3(4,inf))"};
    if (label == "(YxS2)#CP2bar")
        return {"(YxS2)#CP2bar (g=" + std::to_string(genus) + ")",
                K::semidirect(z2(), K::free_abelian(1), K::Normal::Right),
                {"s1, s0* = reflections in E1, F-E1"},
                "W(I2(inf))"};
    throw ValidationError("unknown catalog label '" + label + "'");
}

} // namespace

std::vector<std::string> catalog_labels() {
    return {"CP2", "S2xS2", "S2~xS2", "YxS2", "Y~xS2", "(S2xS2)#CP2bar", "(YxS2)#CP2bar"};
}

GroupDescription describe_diffeotopy(const std::string& label, unsigned genus) {
    return fixture(label, genus);
}

GroupDescription describe_diffeotopy(const ManifoldModel& model) {
    unsigned ell = model.ell();
    if (model.is_rational()) {
        if (ell == 0)
            return fixture("CP2", 0);
        if (ell == 1)
            return fixture("S2~xS2", 0);
        if (ell == 2)
            return fixture("(S2xS2)#CP2bar", 0);
        auto w = K::coxeter(CoxeterSystem::BE(ell + 1));
        return {"CP2#" + std::to_string(ell) + "CP2bar",
                K::semidirect(gamma_box(), w, K::Normal::Left),
                {"Gamma_box: opaque"},
                ""};
    }
    if (model.genus() == 0) {
        if (ell == 0)
            return fixture("S2xS2", 0);
        return describe_diffeotopy(ManifoldModel::rational(ell + 1));
    }
    unsigned g = model.genus();
    if (ell == 0)
        return fixture("YxS2", g);
    if (ell == 1)
        return fixture("(YxS2)#CP2bar", g);
    auto gamma_bullet = K::semidirect(gamma_box(), h1_z2(g), K::Normal::Left, "");
    auto inner = K::semidirect(gamma_bullet, map_bar(g, ell), K::Normal::Left);
    auto w = K::coxeter(CoxeterSystem::BD(ell + 1));
    return {"(Y_g x S2)#" + std::to_string(ell) + "CP2bar (g=" + std::to_string(g) + ")",
            K::semidirect(inner, w, K::Normal::Left),
            {"Gamma_box: opaque",
             "Map~(Y,l) extends Map(Y) by H1(Y;Z)^(l-1), rank " + std::to_string(2 * g * (ell - 1))},
            ""};
}

Json to_json(const GroupNode& g) {
    Json j;
    switch (g.kind) {
    case GroupNode::Kind::Cyclic:
        j["type"] = "cyclic";
        j["order"] = g.n;
        break;
    case GroupNode::Kind::FreeAbelian:
        j["type"] = "free_abelian";
        j["rank"] = g.n;
        break;
    case GroupNode::Kind::Coxeter:
        j["type"] = "coxeter";
        j["system"] = g.system->name();
        j["coxeter"] = to_json(*g.system);
        break;
    case GroupNode::Kind::Semidirect:
        j["type"] = "semidirect";
        j["normal"] = g.normal == GroupNode::Normal::Left ? "left" : "right";
        j["left"] = to_json(g.children[0]);
        j["right"] = to_json(g.children[1]);
        break;
    case GroupNode::Kind::DirectSum: {
        j["type"] = "direct_sum";
        Json parts = Json::array();
        for (const auto& c : g.children)
            parts.push_back(to_json(c));
        j["parts"] = parts;
        break;
    }
    case GroupNode::Kind::Extension:
        j["type"] = "extension";
        j["kernel"] = to_json(g.children[0]);
        j["quotient"] = to_json(g.children[1]);
        break;
    case GroupNode::Kind::BlackBox:
        j["type"] = "black_box";
        break;
    }
    if (!g.label.empty())
        j["label"] = g.label;
    return j;
}

Json to_json(const GroupDescription& d) {
    Json j;
    j["name"] = d.name;
    j["summary"] = d.structure.to_string();
    j["structure"] = to_json(d.structure);
    j["notes"] = d.notes;
    if (!d.realized_as.empty())
        j["realized_as"] = d.realized_as;
    return j;
}

} // namespace ruled
