#pragma once

#include "ruled/coxeter.hpp"
#include "ruled/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ruled {

struct Generator {
    std::string name;
    HomologyClass root;
    LatticeAutomorphism action;
};

// Reflections generating the diffeotopy Weyl group of a model.
//   rational l >= 3: s0 = L-E1-E2-E3, s_i = E_i-E_{i+1}, s_l = E_l   (BE_{l+1})
//   rational l = 2:  (s1, s2, s0*) = (E1-E2, E2, L-E1-E2)           (L3(4,inf))
//   ruled l >= 2:    s0 = F-E1-E2, s_i, s_l                          (BD_{l+1})
//   ruled l = 1:     (s1, s0*) = (E1, F-E1)                          (I2(inf))
// Generator index i is position i in this list.
class GeneratorSet {
  public:
    static GeneratorSet for_model(const ManifoldModel& model);
    // Process-wide memo of for_model; entries live until exit.
    static const GeneratorSet& cached(const ManifoldModel& model);

    const ManifoldModel& model() const { return model_; }
    size_t size() const { return gens_.size(); }
    const Generator& operator[](size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }
    // Coxeter system the generators are supposed to realise.
    const CoxeterSystem& expected_system() const { return expected_; }
    size_t index_of(const std::string& name) const;

    // Roles used by the reduction loops.
    std::optional<size_t> transposition(unsigned k) const;  // swaps E_k, E_{k+1}
    size_t flip() const { return flip_; }                    // negates E_l
    size_t leading() const { return leading_; }              // the non-permutation wall

  private:
    GeneratorSet(ManifoldModel model, std::vector<Generator> gens, CoxeterSystem expected);
    ManifoldModel model_;
    std::vector<Generator> gens_;
    CoxeterSystem expected_;
    size_t flip_ = 0;
    size_t leading_ = 0;
    std::vector<size_t> transpositions_;  // index k-1 -> generator
};

// Letters in application order: [a, b, c] acts as M_c * M_b * M_a.
struct GroupWord {
    std::vector<size_t> letters;

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    void push(size_t g) { letters.push_back(g); }
    void append(const GroupWord& o) { letters.insert(letters.end(), o.letters.begin(), o.letters.end()); }
    // Generators are involutions, so the inverse is the reversed word.
    GroupWord inverse() const { return {std::vector<size_t>(letters.rbegin(), letters.rend())}; }

    LatticeAutomorphism evaluate(const GeneratorSet& g) const;
    std::vector<std::string> names(const GeneratorSet& g) const;
    static GroupWord from_names(const GeneratorSet& g, const std::vector<std::string>& names);

    bool operator==(const GroupWord& o) const { return letters == o.letters; }
};

struct PairOrder {
    size_t i, j;
    CoxeterLabel expected;
    std::optional<unsigned> observed;  // nullopt: exceeds the cap
    bool matches() const;
};

struct PresentationReport {
    bool involutions = true;
    std::vector<PairOrder> pairs;
    bool ok() const;
};

// Order of M_i M_j on H2, capped.
std::optional<unsigned> product_order(const IntMatrix& a, const IntMatrix& b, unsigned cap);

PresentationReport verify_presentation(const GeneratorSet& g, unsigned cap = 16);

struct OrbitResult {
    std::vector<HomologyClass> classes;  // lexicographically sorted
    bool truncated = false;              // some image exceeded the bound
};

// Threads used by data-parallel routines: RULED_LATTICE_THREADS if set,
// else hardware concurrency.
unsigned default_thread_count();

// BFS closure of seed under the chosen generators (all if subset is empty),
// discarding vectors whose max-abs coefficient exceeds bound.
OrbitResult orbit(const GeneratorSet& g, const HomologyClass& seed, const Int& bound,
                  const std::vector<size_t>& subset = {}, unsigned threads = 0);

// Machine-integer orbit on raw coefficient vectors.  Entries are stored
// compactly; only valid while the bound keeps every intermediate product in
// range, which the constructor checks (throws DomainError otherwise).
class FlatOrbit {
  public:
    FlatOrbit(const std::vector<IntMatrix>& generators, const std::vector<Int>& seed,
              const Int& bound, unsigned threads = 0);

    size_t size() const { return count_; }
    size_t dim() const { return dim_; }
    bool truncated() const { return truncated_; }
    // Coordinates of the i-th vector in BFS order.
    void get(size_t i, int64_t* out) const;
    std::vector<int64_t> at(size_t i) const;
    bool contains(const std::vector<int64_t>& v) const;

    // Largest bound the int64 kernel accepts for these matrices.
    static Int max_safe_bound(const std::vector<IntMatrix>& generators);

  private:
    void run(const std::vector<IntMatrix>& gens, const std::vector<Int>& seed, unsigned threads);
    size_t find(const int64_t* v) const;
    bool insert(const int64_t* v);
    void rehash(size_t cap);
    uint64_t hash(const int64_t* v) const;

    size_t dim_ = 0;
    int64_t bound_ = 0;
    size_t count_ = 0;
    bool truncated_ = false;
    bool narrow_ = true;  // 32-bit storage
    std::vector<int32_t> store32_;
    std::vector<int64_t> store64_;
    std::vector<uint32_t> table_;
    size_t mask_ = 0;
};

} // namespace ruled
