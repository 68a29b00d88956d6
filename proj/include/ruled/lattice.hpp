#pragma once

#include "ruled/bigint.hpp"
#include "ruled/matrix.hpp"

#include <string>
#include <vector>

namespace ruled {

using IntMatrix = Matrix<Int>;

enum class ModelKind { Rational, Ruled };

// Which intersection lattice we are working in.
//   Rational: basis (L, E1..El), form diag(1, -1, ..., -1).
//   Ruled:    basis (Y, F, E1..El), Y.F = 1, Y^2 = F^2 = 0, Ei^2 = -1.
class ManifoldModel {
  public:
    static ManifoldModel rational(unsigned ell);
    static ManifoldModel ruled(unsigned ell, unsigned genus);

    ModelKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == ModelKind::Rational; }
    unsigned ell() const { return ell_; }
    unsigned genus() const { return genus_; }
    size_t rank() const { return ell_ + (is_rational() ? 1 : 2); }

    // Index of E_i (1-based i) in the basis.
    size_t e_index(unsigned i) const;
    int form(size_t i, size_t j) const;
    const IntMatrix& gram() const { return gram_; }
    std::vector<std::string> basis_names() const;
    std::string describe() const;

    bool operator==(const ManifoldModel& o) const {
        return kind_ == o.kind_ && ell_ == o.ell_ && genus_ == o.genus_;
    }
    bool operator!=(const ManifoldModel& o) const { return !(*this == o); }

  private:
    ManifoldModel(ModelKind kind, unsigned ell, unsigned genus);
    ModelKind kind_;
    unsigned ell_;
    unsigned genus_;
    IntMatrix gram_;
};

class HomologyClass {
  public:
    HomologyClass(const ManifoldModel& model, std::vector<Int> coeffs);
    static HomologyClass zero(const ManifoldModel& model);

    static HomologyClass line(const ManifoldModel& model);
    static HomologyClass section(const ManifoldModel& model);
    static HomologyClass fiber(const ManifoldModel& model);
    static HomologyClass exceptional(const ManifoldModel& model, unsigned i);
    // E_i - E_{i+1}
    static HomologyClass S(const ManifoldModel& model, unsigned i);
    // L - E1 - E2 - E3 (rational) or F - E1 - E2 (ruled).
    static HomologyClass S_prime(const ManifoldModel& model);
    // F - E_i (ruled only).
    static HomologyClass E_prime(const ManifoldModel& model, unsigned i);
    // 3L - sum E_i (rational only).
    static HomologyClass anticanonical(const ManifoldModel& model);

    const ManifoldModel& model() const { return model_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](size_t i) const { return coeffs_[i]; }

    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass operator-() const;
    HomologyClass operator*(const Int& k) const;

    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const HomologyClass& o) const {
        return model_ == o.model_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }
    bool operator<(const HomologyClass& o) const { return coeffs_ < o.coeffs_; }

  private:
    ManifoldModel model_;
    std::vector<Int> coeffs_;
};

inline HomologyClass operator*(const Int& k, const HomologyClass& c) { return c * k; }

// Integer matrix acting on coefficient columns from the left, checked to
// preserve the intersection form.
class LatticeAutomorphism {
  public:
    LatticeAutomorphism(const ManifoldModel& model, IntMatrix matrix);
    static LatticeAutomorphism identity(const ManifoldModel& model);

    const ManifoldModel& model() const { return model_; }
    const IntMatrix& matrix() const { return matrix_; }

    HomologyClass apply(const HomologyClass& c) const;
    // (this * o): first o, then this.
    LatticeAutomorphism compose(const LatticeAutomorphism& o) const;
    LatticeAutomorphism inverse() const;
    bool is_identity() const { return matrix_.is_identity(); }

    bool operator==(const LatticeAutomorphism& o) const {
        return model_ == o.model_ && matrix_ == o.matrix_;
    }
    bool operator!=(const LatticeAutomorphism& o) const { return !(*this == o); }

  private:
    ManifoldModel model_;
    IntMatrix matrix_;
};

bool preserves_form(const ManifoldModel& model, const IntMatrix& m);

Int pairing(const HomologyClass& a, const HomologyClass& b);
inline Int square(const HomologyClass& a) { return pairing(a, a); }

// A -> A - 2 (A.s)/(s.s) s, only for s.s in {-1, -2}.
LatticeAutomorphism reflection_along(const HomologyClass& s);

bool positive_cone_contains(const HomologyClass& c);

struct Signature {
    unsigned positive = 0;
    unsigned negative = 0;
    unsigned zero = 0;
};
// Exact inertia via symmetric Gaussian elimination over Q.
Signature signature(const IntMatrix& gram);

Int determinant(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

} // namespace ruled
