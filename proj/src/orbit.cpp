#include "ruled/errors.hpp"
#include "ruled/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

namespace ruled {

unsigned default_thread_count() {
    if (const char* env = std::getenv("RULED_LATTICE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();
const Int kMaxBound = Int(1) << 40;
const Int kMaxProduct = Int(1) << 62;

struct SparseDelta {
    // (M - I) as (row, col, value) triples.
    std::vector<uint32_t> row, col;
    std::vector<int64_t> val;
};

} // namespace

Int FlatOrbit::max_safe_bound(const std::vector<IntMatrix>& gens) {
    Int worst = 1;
    for (const auto& m : gens)
        for (size_t i = 0; i < m.rows(); ++i) {
            Int s = 0;
            for (size_t j = 0; j < m.cols(); ++j)
                s += abs(m(i, j));
            worst = std::max(worst, s);
        }
    Int b = (kMaxProduct - 1) / worst;
    return std::min(b, kMaxBound);
}

FlatOrbit::FlatOrbit(const std::vector<IntMatrix>& gens, const std::vector<Int>& seed,
                     const Int& bound, unsigned threads)
    : dim_(seed.size()) {
    if (bound <= 0)
        throw PreconditionError("orbit bound must be positive");
    if (bound > max_safe_bound(gens))
        throw DomainError("orbit bound " + bound.get_str() + " too large for the machine-integer kernel");
    for (const auto& m : gens)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ValidationError("generator shape does not match the seed");
    bound_ = bound.get_si();
    narrow_ = bound_ <= std::numeric_limits<int32_t>::max();
    run(gens, seed, threads == 0 ? default_thread_count() : threads);
}

uint64_t FlatOrbit::hash(const int64_t* v) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (size_t i = 0; i < dim_; ++i) {
        uint64_t x = static_cast<uint64_t>(v[i]) + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        h = x ^ (x >> 31);
    }
    return h;
}

void FlatOrbit::get(size_t i, int64_t* out) const {
    if (narrow_)
        for (size_t k = 0; k < dim_; ++k)
            out[k] = store32_[i * dim_ + k];
    else
        for (size_t k = 0; k < dim_; ++k)
            out[k] = store64_[i * dim_ + k];
}

std::vector<int64_t> FlatOrbit::at(size_t i) const {
    std::vector<int64_t> v(dim_);
    get(i, v.data());
    return v;
}

size_t FlatOrbit::find(const int64_t* v) const {
    if (table_.empty())
        return static_cast<size_t>(-1);
    for (size_t slot = hash(v) & mask_;; slot = (slot + 1) & mask_) {
        uint32_t idx = table_[slot];
        if (idx == kEmpty)
            return static_cast<size_t>(-1);
        bool eq = true;
        if (narrow_) {
            const int32_t* p = &store32_[static_cast<size_t>(idx) * dim_];
            for (size_t k = 0; k < dim_ && eq; ++k)
                eq = p[k] == v[k];
        } else {
            const int64_t* p = &store64_[static_cast<size_t>(idx) * dim_];
            for (size_t k = 0; k < dim_ && eq; ++k)
                eq = p[k] == v[k];
        }
        if (eq)
            return idx;
    }
}

bool FlatOrbit::contains(const std::vector<int64_t>& v) const {
    return v.size() == dim_ && find(v.data()) != static_cast<size_t>(-1);
}

void FlatOrbit::rehash(size_t cap) {
    table_.assign(cap, kEmpty);
    mask_ = cap - 1;
    std::vector<int64_t> tmp(dim_);
    for (size_t i = 0; i < count_; ++i) {
        get(i, tmp.data());
        size_t slot = hash(tmp.data()) & mask_;
        while (table_[slot] != kEmpty)
            slot = (slot + 1) & mask_;
        table_[slot] = static_cast<uint32_t>(i);
    }
}

bool FlatOrbit::insert(const int64_t* v) {
    if (find(v) != static_cast<size_t>(-1))
        return false;
    if (count_ + 1 >= kEmpty)
        throw DomainError("orbit exceeds the index capacity of the hash table");
    if (narrow_)
        for (size_t k = 0; k < dim_; ++k)
            store32_.push_back(static_cast<int32_t>(v[k]));
    else
        store64_.insert(store64_.end(), v, v + dim_);
    ++count_;
    if (2 * count_ > table_.size()) {
        rehash(std::max<size_t>(64, table_.size() * 2));
    } else {
        size_t slot = hash(v) & mask_;
        while (table_[slot] != kEmpty)
            slot = (slot + 1) & mask_;
        table_[slot] = static_cast<uint32_t>(count_ - 1);
    }
    return true;
}

void FlatOrbit::run(const std::vector<IntMatrix>& gens, const std::vector<Int>& seed, unsigned threads) {
    std::vector<SparseDelta> deltas;
    for (const auto& m : gens) {
        SparseDelta d;
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) {
                Int e = m(i, j) - (i == j ? 1 : 0);
                if (e != 0) {
                    d.row.push_back(static_cast<uint32_t>(i));
                    d.col.push_back(static_cast<uint32_t>(j));
                    d.val.push_back(e.get_si());
                }
            }
        deltas.push_back(std::move(d));
    }
    std::vector<int64_t> s(dim_);
    for (size_t k = 0; k < dim_; ++k) {
        if (abs(seed[k]) > bound_) {
            truncated_ = true;
            return;
        }
        s[k] = seed[k].get_si();
    }
    rehash(64);
    insert(s.data());

    size_t lo = 0, hi = count_;
    while (lo < hi) {
        size_t frontier = hi - lo;
        unsigned nt = static_cast<unsigned>(std::min<size_t>(threads, frontier / 4096 + 1));
        std::vector<std::vector<int64_t>> found(nt);
        std::vector<char> trunc(nt, 0);
        auto work = [&](unsigned t) {
            size_t a = lo + frontier * t / nt, b = lo + frontier * (t + 1) / nt;
            std::vector<int64_t> v(dim_), w(dim_);
            auto& out = found[t];
            for (size_t i = a; i < b; ++i) {
                get(i, v.data());
                for (const auto& d : deltas) {
                    w = v;
                    for (size_t e = 0; e < d.val.size(); ++e)
                        w[d.row[e]] += d.val[e] * v[d.col[e]];
                    bool inside = true;
                    for (size_t k = 0; k < dim_ && inside; ++k)
                        inside = w[k] <= bound_ && w[k] >= -bound_;
                    if (!inside) {
                        trunc[t] = 1;
                        continue;
                    }
                    if (find(w.data()) == static_cast<size_t>(-1))
                        out.insert(out.end(), w.begin(), w.end());
                }
            }
        };
        if (nt == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nt; ++t)
                pool.emplace_back(work, t);
            for (auto& th : pool)
                th.join();
        }
        // Serial merge in chunk order keeps the BFS order schedule-independent.
        for (unsigned t = 0; t < nt; ++t) {
            truncated_ = truncated_ || trunc[t];
            for (size_t off = 0; off < found[t].size(); off += dim_)
                insert(&found[t][off]);
        }
        lo = hi;
        hi = count_;
    }
}

OrbitResult orbit(const GeneratorSet& g, const HomologyClass& seed, const Int& bound,
                  const std::vector<size_t>& subset, unsigned threads) {
    if (seed.model() != g.model())
        throw ModelMismatch("orbit seed belongs to a different model");
    if (bound <= 0)
        throw PreconditionError("orbit bound must be positive");
    std::vector<IntMatrix> mats;
    if (subset.empty()) {
        for (const auto& gen : g.generators())
            mats.push_back(gen.action.matrix());
    } else {
        for (size_t i : subset) {
            if (i >= g.size())
                throw ValidationError("generator index " + std::to_string(i) + " out of range");
            mats.push_back(g[i].action.matrix());
        }
    }
    OrbitResult res;
    if (bound <= FlatOrbit::max_safe_bound(mats)) {
        FlatOrbit fo(mats, seed.coeffs(), bound, threads);
        res.truncated = fo.truncated();
        res.classes.reserve(fo.size());
        std::vector<int64_t> v(fo.dim());
        for (size_t i = 0; i < fo.size(); ++i) {
            fo.get(i, v.data());
            std::vector<Int> c(v.size());
            for (size_t k = 0; k < v.size(); ++k)
                c[k] = static_cast<long>(v[k]);
            res.classes.emplace_back(g.model(), std::move(c));
        }
    } else {
        // Arbitrary-precision fallback for huge bounds.
        std::set<std::vector<Int>> seen;
        std::vector<std::vector<Int>> frontier;
        auto inside = [&](const std::vector<Int>& v) {
            for (const auto& x : v)
                if (abs(x) > bound)
                    return false;
            return true;
        };
        if (inside(seed.coeffs())) {
            seen.insert(seed.coeffs());
            frontier.push_back(seed.coeffs());
        } else {
            res.truncated = true;
        }
        while (!frontier.empty()) {
            std::vector<std::vector<Int>> next;
            for (const auto& v : frontier)
                for (const auto& m : mats) {
                    auto w = m * v;
                    if (!inside(w)) {
                        res.truncated = true;
                        continue;
                    }
                    if (seen.insert(w).second)
                        next.push_back(std::move(w));
                }
            frontier = std::move(next);
        }
        for (const auto& v : seen)
            res.classes.emplace_back(g.model(), v);
    }
    std::sort(res.classes.begin(), res.classes.end());
    return res;
}

} // namespace ruled
