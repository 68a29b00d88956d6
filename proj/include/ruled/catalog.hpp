#pragma once

#include "ruled/coxeter.hpp"
#include "ruled/lattice_json.hpp"
#include "ruled/weyl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ruled {

struct GroupNode {
    enum class Kind { Cyclic, FreeAbelian, Coxeter, Semidirect, DirectSum, Extension, BlackBox };
    // Which factor of a semidirect product is normal.
    enum class Normal { Left, Right };

    Kind kind;
    unsigned n = 0;               // order (cyclic) or rank (free abelian)
    std::string label;            // black boxes, extensions, annotations
    std::optional<CoxeterSystem> system;
    Normal normal = Normal::Left;
    std::vector<GroupNode> children;  // semidirect: (left, right); extension: (kernel, quotient)

    static GroupNode cyclic(unsigned n, std::string label = "");
    static GroupNode free_abelian(unsigned rank, std::string label = "");
    static GroupNode coxeter(const CoxeterSystem& s, std::string label = "");
    // left x| right with the normal factor on the given side.
    static GroupNode semidirect(GroupNode left, GroupNode right, Normal normal = Normal::Left,
                                std::string label = "");
    static GroupNode direct_sum(std::vector<GroupNode> parts, std::string label = "");
    static GroupNode extension(GroupNode kernel, GroupNode quotient, std::string label = "");
    static GroupNode black_box(std::string label);

    std::string to_string() const;
    bool operator==(const GroupNode& o) const;
};

struct GroupDescription {
    std::string name;
    GroupNode structure;
    std::vector<std::string> notes;
    std::string realized_as;  // empty unless the group is a concrete reflection group
};

// Small closed cases: "CP2", "S2xS2", "S2~xS2", "YxS2", "Y~xS2",
// "(S2xS2)#CP2bar", "(YxS2)#CP2bar".  genus is used by the Y cases (>= 1).
GroupDescription describe_diffeotopy(const std::string& label, unsigned genus = 1);
// General blow-ups; small ell falls back to the closed cases.
GroupDescription describe_diffeotopy(const ManifoldModel& model);
std::vector<std::string> catalog_labels();

Json to_json(const GroupNode& g);
Json to_json(const GroupDescription& d);

// Word over the rational l = 2 generators (s1, s2, s0*) evaluating to m.
// Requires m to preserve the form and the positive cone.
GroupWord decompose_O12(const LatticeAutomorphism& m);

} // namespace ruled
