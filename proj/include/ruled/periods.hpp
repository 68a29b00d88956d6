#pragma once

#include "ruled/weyl.hpp"

#include <string>
#include <vector>

namespace ruled {

// Periods of a cohomology class against the basis curves.
//   rational: lambda = <w, L>, mu_i = <w, E_i>
//   ruled:    sigma = <w, F>, nu = <w, Y>, mu_i = <w, E_i>
// The Poincare-dual class is lambda L - sum mu_i E_i, respectively
// sigma Y + nu F - sum mu_i E_i.  Generators act on periods through the
// dual class: reflecting the dual class by M is the period action, so one
// matrix per generator serves both.
class PeriodVector {
  public:
    static PeriodVector rational(const ManifoldModel& m, Rat lambda, std::vector<Rat> mu);
    static PeriodVector ruled(const ManifoldModel& m, Rat sigma, Rat nu, std::vector<Rat> mu);
    // Flat list in the order (lambda, mu...) or (sigma, nu, mu...).
    static PeriodVector from_list(const ManifoldModel& m, const std::vector<Rat>& values);
    static PeriodVector of_class(const HomologyClass& c);
    static PeriodVector from_dual_coefficients(const ManifoldModel& m, const std::vector<Rat>& c);

    const ManifoldModel& model() const { return model_; }
    const Rat& lambda() const;
    const Rat& sigma() const;
    const Rat& nu() const;
    const std::vector<Rat>& mu() const { return mu_; }
    std::vector<Rat> as_list() const;
    std::vector<Rat> dual_class_coefficients() const;
    // Period of a homology class (its pairing with the dual class).
    Rat period_of(const HomologyClass& c) const;
    std::string to_string() const;

    bool operator==(const PeriodVector& o) const {
        return model_ == o.model_ && head_ == o.head_ && mu_ == o.mu_;
    }
    bool operator!=(const PeriodVector& o) const { return !(*this == o); }

  private:
    PeriodVector(ManifoldModel m, std::vector<Rat> head, std::vector<Rat> mu);
    ManifoldModel model_;
    std::vector<Rat> head_;  // (lambda) or (sigma, nu)
    std::vector<Rat> mu_;
};

// rational: lambda > 0, lambda^2 > sum mu^2.
// ruled:    sigma > 0, 2 sigma nu > sum mu^2 (the square of the dual class).
bool positive_cone_contains(const PeriodVector& p);

// Every generator root has non-negative period: for the standard models
// lambda >= mu1+mu2+mu3 (sigma >= mu1+mu2) and mu1 >= ... >= mu_l >= 0.
bool satisfies_period_conditions(const PeriodVector& p);

struct PeriodReduction {
    PeriodVector reduced;
    GroupWord word;
    std::vector<std::string> boundary_flags;  // "zero_period:E_i"
};

PeriodReduction reduce_periods(const PeriodVector& p);

struct LagrangianSystem {
    ManifoldModel model;
    std::vector<size_t> members;   // wall indices: 0 = S', i = S_{i,i+1}
    std::vector<HomologyClass> classes;
    std::vector<std::string> class_names;
    std::vector<ComponentType> components;
    std::string type;              // e.g. "A2+A1"; "trivial" when empty
    std::string alias;             // "E_l" / "D_l" when every wall is present
    std::optional<CoxeterSystem> subsystem;
};

// Wall classes of the standard models: S', S_{1,2}, ..., S_{l-1,l}.
std::vector<HomologyClass> wall_classes(const ManifoldModel& m);
std::vector<std::string> wall_names(const ManifoldModel& m);

LagrangianSystem lagrangian_system(const PeriodVector& reduced);

struct MaximalSystem {
    std::string label;
    std::vector<size_t> walls;
};

// Listed maximal systems, in the order tried.
std::vector<MaximalSystem> maximal_systems(const ManifoldModel& m);
MaximalSystem maximal_system_membership(const LagrangianSystem& sys);

} // namespace ruled
