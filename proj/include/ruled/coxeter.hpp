#pragma once

#include "ruled/lattice_json.hpp"
#include "ruled/matrix.hpp"
#include "ruled/qsqrt2.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ruled {

// Entry of a Coxeter matrix.  Infinity is its own variant so that it can
// never be fed into arithmetic by accident.
class CoxeterLabel {
  public:
    enum class Kind { Finite, Infinite };

    static CoxeterLabel finite(unsigned m) { return CoxeterLabel(Kind::Finite, m); }
    static CoxeterLabel infinity() { return CoxeterLabel(Kind::Infinite, 0); }

    Kind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    // Only valid for finite labels.
    unsigned value() const;
    std::string to_string() const;

    bool operator==(const CoxeterLabel& o) const { return kind_ == o.kind_ && m_ == o.m_; }
    bool operator!=(const CoxeterLabel& o) const { return !(*this == o); }

  private:
    CoxeterLabel(Kind k, unsigned m) : kind_(k), m_(m) {}
    Kind kind_;
    unsigned m_;
};

class CoxeterSystem {
  public:
    CoxeterSystem(std::vector<std::vector<CoxeterLabel>> matrix, std::string name = "");

    static CoxeterSystem A(unsigned n);
    static CoxeterSystem B(unsigned n);
    static CoxeterSystem D(unsigned n);
    // Index 0 is the branch generator attached to index 3; indices 1..n-1
    // form a chain.  E3 = A2+A1, E4 = A4, E5 = D5, E9 = affine E8.
    static CoxeterSystem E(unsigned n);
    // E_n with a double edge appended at the end of the chain, n >= 4.
    // Index 0 (branch), chain 1..n-1, m(n-2, n-1) = 4.  BE4 = L4(3,4,4).
    static CoxeterSystem BE(unsigned n);
    // Affine B_{n-1}: chain 1..n-1 ending in a double edge, index 0
    // attached to 2 (to the far end when n = 3).
    static CoxeterSystem BD(unsigned n);
    static CoxeterSystem affine_B(unsigned ell) { return BD(ell + 1); }
    static CoxeterSystem I2_infinity();
    // Chain with labels m_1..m_{r-1} between consecutive generators.
    static CoxeterSystem linear(const std::vector<CoxeterLabel>& labels, std::string name = "");
    // s1 =4= s2 --inf-- s0*, indexed (s1, s2, s0*).
    static CoxeterSystem L3_4_inf();
    // s1 --- s2 =4= s3 =4= s0 with index 0 = s0 (same as BE(4)).
    static CoxeterSystem L4_3_4_4();

    // "E6".."E9", "BEn", "BDn", "An", "Bn", "Dn", "L4-3-4-4", "L3-4-inf",
    // "L3-4-4", "I2-inf".
    static CoxeterSystem by_name(const std::string& name);

    size_t rank() const { return m_.size(); }
    const CoxeterLabel& m(size_t i, size_t j) const { return m_[i][j]; }
    const std::string& name() const { return name_; }
    // Display name of generator i; "s<i>" unless overridden.
    std::string vertex_name(size_t i) const;
    void set_vertex_names(std::vector<std::string> names);
    // Subsystem on the given generator indices (in the given order).
    CoxeterSystem restrict_to(const std::vector<size_t>& idx, std::string name = "") const;

    bool operator==(const CoxeterSystem& o) const { return m_ == o.m_; }

  private:
    std::vector<std::vector<CoxeterLabel>> m_;
    std::string name_;
    std::vector<std::string> vertex_names_;
};

struct GeometricRepresentation {
    Matrix<QSqrt2> gram;
    std::vector<Matrix<QSqrt2>> generators;
};

// cos(pi/m) for m in {2,3,4,inf}; throws UnsupportedLabel otherwise.
QSqrt2 coxeter_cosine(const CoxeterLabel& m);

GeometricRepresentation build_geometric_representation(const CoxeterSystem& s);

// Leading principal minors of -gram, all exactly.
std::vector<QSqrt2> leading_minors_of_negated_gram(const CoxeterSystem& s);
QSqrt2 determinant(const Matrix<QSqrt2>& m);
bool is_finite_type(const CoxeterSystem& s);

struct CrystallographicStructure {
    CoxeterSystem system;
    std::set<size_t> short_set;
    std::set<size_t> long_set;
};

bool verify_crystallographic(const CrystallographicStructure& c);
// Generator matrices rewritten in the basis v_j = e_j (short) or
// sqrt2 e_j (long).
std::vector<Matrix<QSqrt2>> crystallographic_generators(const CrystallographicStructure& c);
bool crystallographic_lattice_invariance(const CrystallographicStructure& c);

// Standard structures of the diffeotopy Coxeter groups: long = (-2)-roots,
// short = (-1)-roots.
CrystallographicStructure standard_structure_BE(unsigned n);
CrystallographicStructure standard_structure_BD(unsigned n);
CrystallographicStructure standard_structure_L3_4_inf();

// Smallest n <= cap with (sigma_i sigma_j)^n = 1, or nullopt.
std::optional<unsigned> generator_product_order(const GeometricRepresentation& rep, size_t i,
                                                size_t j, unsigned cap = 64);

// Dynkin / Coxeter graph as ASCII.  With a crystallographic structure,
// double edges carry an arrow pointing at the short vertex.
std::string render_ascii(const CoxeterSystem& s,
                         const std::optional<CrystallographicStructure>& crystal = std::nullopt);

Json to_json(const CoxeterSystem& s);
CoxeterSystem coxeter_from_json(const Json& j);

// Finite-type label of a simply laced system given only by its edges
// (graph on n vertices), as a sum of A/D/E components sorted by rank
// descending then E, D, A.  Non-ADE components are reported with a "?"
// prefix.
struct ComponentType {
    char series;  // 'A', 'D', 'E' or '?'
    unsigned rank;
    std::vector<size_t> vertices;
};
std::vector<ComponentType> classify_simply_laced(const CoxeterSystem& s);
std::string type_label(const std::vector<ComponentType>& comps);

} // namespace ruled
