#include "ruled/coxeter.hpp"

#include "ruled/errors.hpp"

#include <algorithm>
#include <regex>

namespace ruled {

unsigned CoxeterLabel::value() const {
    if (is_infinite())
        throw DomainError("infinite Coxeter label has no integer value");
    return m_;
}

std::string CoxeterLabel::to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

CoxeterSystem::CoxeterSystem(std::vector<std::vector<CoxeterLabel>> matrix, std::string name)
    : m_(std::move(matrix)), name_(std::move(name)) {
    size_t n = m_.size();
    if (n == 0)
        throw ValidationError("Coxeter system needs at least one generator");
    for (size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n)
            throw ValidationError("Coxeter matrix must be square");
        if (m_[i][i] != CoxeterLabel::finite(1))
            throw ValidationError("Coxeter matrix diagonal must be 1");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (m_[i][j] != m_[j][i])
                throw ValidationError("Coxeter matrix must be symmetric");
            if (!m_[i][j].is_infinite() && m_[i][j].value() < 2)
                throw ValidationError("off-diagonal Coxeter entries must be >= 2");
        }
}

std::string CoxeterSystem::vertex_name(size_t i) const {
    if (i < vertex_names_.size())
        return vertex_names_[i];
    return "s" + std::to_string(i);
}

void CoxeterSystem::set_vertex_names(std::vector<std::string> names) {
    if (names.size() != rank())
        throw ValidationError("one name per generator required");
    vertex_names_ = std::move(names);
}

namespace {

using LabelMatrix = std::vector<std::vector<CoxeterLabel>>;

LabelMatrix commuting(size_t n) {
    LabelMatrix m(n, std::vector<CoxeterLabel>(n, CoxeterLabel::finite(2)));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = CoxeterLabel::finite(1);
    return m;
}

void set_edge(LabelMatrix& m, size_t i, size_t j, CoxeterLabel l) {
    m[i][j] = l;
    m[j][i] = l;
}

void set_edge(LabelMatrix& m, size_t i, size_t j, unsigned v) {
    set_edge(m, i, j, CoxeterLabel::finite(v));
}

} // namespace

CoxeterSystem CoxeterSystem::A(unsigned n) {
    if (n < 1)
        throw ValidationError("A_n needs n >= 1");
    auto m = commuting(n);
    for (size_t i = 0; i + 1 < n; ++i)
        set_edge(m, i, i + 1, 3);
    return CoxeterSystem(m, "A" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::B(unsigned n) {
    if (n < 2)
        throw ValidationError("B_n needs n >= 2");
    auto m = commuting(n);
    for (size_t i = 0; i + 2 < n; ++i)
        set_edge(m, i, i + 1, 3);
    set_edge(m, n - 2, n - 1, 4);
    return CoxeterSystem(m, "B" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::D(unsigned n) {
    if (n < 2)
        throw ValidationError("D_n needs n >= 2");
    auto m = commuting(n);
    for (size_t i = 0; i + 2 < n; ++i)
        set_edge(m, i, i + 1, 3);
    if (n >= 3)
        set_edge(m, n - 1, n - 3, 3);
    return CoxeterSystem(m, "D" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::E(unsigned n) {
    if (n < 3 || n > 9)
        throw ValidationError("E_n is defined here for 3 <= n <= 9");
    auto m = commuting(n);
    for (size_t i = 1; i + 1 < n; ++i)
        set_edge(m, i, i + 1, 3);
    if (n > 3)
        set_edge(m, 0, 3, 3);
    return CoxeterSystem(m, "E" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::BE(unsigned n) {
    if (n < 4)
        throw ValidationError("BE_n needs n >= 4");
    auto m = commuting(n);
    for (size_t i = 1; i + 2 < n; ++i)
        set_edge(m, i, i + 1, 3);
    set_edge(m, n - 2, n - 1, 4);
    // For n = 4 the branch vertex meets the short end; the -2/-1 pairing
    // there has order 4.
    set_edge(m, 0, 3, n == 4 ? 4u : 3u);
    return CoxeterSystem(m, n == 4 ? "L4(3,4,4)" : "BE" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::BD(unsigned n) {
    if (n < 3)
        throw ValidationError("BD_n needs n >= 3");
    auto m = commuting(n);
    for (size_t i = 1; i + 2 < n; ++i)
        set_edge(m, i, i + 1, 3);
    set_edge(m, n - 2, n - 1, 4);
    set_edge(m, 0, 2, n == 3 ? 4u : 3u);
    return CoxeterSystem(m, n == 3 ? "L3(4,4)" : "BD" + std::to_string(n));
}

CoxeterSystem CoxeterSystem::I2_infinity() {
    auto m = commuting(2);
    set_edge(m, 0, 1, CoxeterLabel::infinity());
    return CoxeterSystem(m, "I2(inf)");
}

CoxeterSystem CoxeterSystem::linear(const std::vector<CoxeterLabel>& labels, std::string name) {
    auto m = commuting(labels.size() + 1);
    for (size_t i = 0; i < labels.size(); ++i)
        set_edge(m, i, i + 1, labels[i]);
    if (name.empty()) {
        name = "L" + std::to_string(labels.size() + 1) + "(";
        for (size_t i = 0; i < labels.size(); ++i)
            name += (i ? "," : "") + labels[i].to_string();
        name += ")";
    }
    return CoxeterSystem(m, name);
}

CoxeterSystem CoxeterSystem::L3_4_inf() {
    auto s = linear({CoxeterLabel::finite(4), CoxeterLabel::infinity()}, "L3(4,inf)");
    s.set_vertex_names({"s1", "s2", "s0*"});
    return s;
}

CoxeterSystem CoxeterSystem::L4_3_4_4() { return BE(4); }

CoxeterSystem CoxeterSystem::by_name(const std::string& raw) {
    std::string name = raw;
    if (name == "L4-3-4-4" || name == "L4(3,4,4)")
        return L4_3_4_4();
    if (name == "L3-4-inf" || name == "L3(4,inf)")
        return L3_4_inf();
    if (name == "L3-4-4" || name == "L3(4,4)")
        return BD(3);
    if (name == "I2-inf" || name == "I2(inf)" || name == "A1~")
        return I2_infinity();
    static const std::regex re(R"(^(BE|BD|B~|A|B|D|E)([0-9]{1,3})$)");
    std::smatch mt;
    if (std::regex_match(name, mt, re)) {
        std::string fam = mt[1];
        unsigned n = static_cast<unsigned>(std::stoul(mt[2]));
        if (fam == "BE")
            return BE(n);
        if (fam == "BD")
            return BD(n);
        if (fam == "B~")
            return affine_B(n);
        if (fam == "A")
            return A(n);
        if (fam == "B")
            return B(n);
        if (fam == "D")
            return D(n);
        return E(n);
    }
    throw ValidationError("unknown Coxeter system name '" + raw + "'");
}

CoxeterSystem CoxeterSystem::restrict_to(const std::vector<size_t>& idx, std::string name) const {
    if (idx.empty())
        throw ValidationError("empty subsystem");
    LabelMatrix m(idx.size(), std::vector<CoxeterLabel>(idx.size(), CoxeterLabel::finite(1)));
    std::vector<std::string> names;
    for (size_t a = 0; a < idx.size(); ++a) {
        names.push_back(vertex_name(idx[a]));
        for (size_t b = 0; b < idx.size(); ++b)
            m[a][b] = m_.at(idx[a]).at(idx[b]);
    }
    CoxeterSystem s(m, std::move(name));
    s.set_vertex_names(std::move(names));
    return s;
}

QSqrt2 coxeter_cosine(const CoxeterLabel& m) {
    if (m.is_infinite())
        return QSqrt2(1);
    switch (m.value()) {
    case 2:
        return QSqrt2(0);
    case 3:
        return QSqrt2(Rat(1, 2));
    case 4:
        return QSqrt2(Rat(0), Rat(1, 2));
    default:
        throw UnsupportedLabel("Coxeter label " + m.to_string() +
                               " is outside {2,3,4,inf}; no exact cosine in Q(sqrt2)");
    }
}

GeometricRepresentation build_geometric_representation(const CoxeterSystem& s) {
    size_t n = s.rank();
    GeometricRepresentation rep;
    rep.gram = Matrix<QSqrt2>(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            rep.gram(i, j) = i == j ? QSqrt2(-1) : coxeter_cosine(s.m(i, j));
    // sigma_j(v) = v + 2 <v, e_j> e_j since <e_j, e_j> = -1.
    for (size_t j = 0; j < n; ++j) {
        auto sig = Matrix<QSqrt2>::identity(n);
        for (size_t k = 0; k < n; ++k)
            sig(j, k) = (j == k ? QSqrt2(1) : QSqrt2(0)) + QSqrt2(2) * rep.gram(j, k);
        rep.generators.push_back(std::move(sig));
    }
    return rep;
}

QSqrt2 determinant(const Matrix<QSqrt2>& m0) {
    Matrix<QSqrt2> m = m0;
    size_t n = m.rows();
    QSqrt2 det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k).is_zero())
            ++p;
        if (p == n)
            return QSqrt2(0);
        if (p != k) {
            for (size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero())
                continue;
            QSqrt2 f = m(i, k) / m(k, k);
            for (size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

std::vector<QSqrt2> leading_minors_of_negated_gram(const CoxeterSystem& s) {
    auto rep = build_geometric_representation(s);
    size_t n = s.rank();
    std::vector<QSqrt2> minors;
    for (size_t k = 1; k <= n; ++k) {
        Matrix<QSqrt2> sub(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                sub(i, j) = -rep.gram(i, j);
        minors.push_back(determinant(sub));
    }
    return minors;
}

bool is_finite_type(const CoxeterSystem& s) {
    // Sylvester: -gram positive definite iff every leading minor is > 0.
    for (const auto& d : leading_minors_of_negated_gram(s))
        if (d.sign() <= 0)
            return false;
    return true;
}

bool verify_crystallographic(const CrystallographicStructure& c) {
    size_t n = c.system.rank();
    for (size_t i : c.short_set)
        if (c.long_set.count(i))
            throw ValidationError("generator " + std::to_string(i) + " is both short and long");
    for (size_t i = 0; i < n; ++i)
        if (!c.short_set.count(i) && !c.long_set.count(i))
            throw ValidationError("generator " + std::to_string(i) + " is neither short nor long");
    for (size_t i : c.short_set)
        if (i >= n)
            throw ValidationError("short index out of range");
    for (size_t i : c.long_set)
        if (i >= n)
            throw ValidationError("long index out of range");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto& m = c.system.m(i, j);
            bool same = c.short_set.count(i) == c.short_set.count(j);
            if (m.is_infinite() || m.value() == 3) {
                if (!same)
                    return false;
            } else if (m.value() == 4) {
                if (same)
                    return false;
            } else if (m.value() != 2) {
                return false;
            }
        }
    return true;
}

std::vector<Matrix<QSqrt2>> crystallographic_generators(const CrystallographicStructure& c) {
    if (!verify_crystallographic(c))
        throw ValidationError("structure violates the short/long adjacency rules");
    auto rep = build_geometric_representation(c.system);
    size_t n = c.system.rank();
    std::vector<QSqrt2> scale(n), inv(n);
    for (size_t j = 0; j < n; ++j) {
        bool is_long = c.long_set.count(j) > 0;
        scale[j] = is_long ? QSqrt2::sqrt2() : QSqrt2(1);
        inv[j] = is_long ? QSqrt2(Rat(0), Rat(1, 2)) : QSqrt2(1);
    }
    std::vector<Matrix<QSqrt2>> out;
    for (const auto& g : rep.generators) {
        Matrix<QSqrt2> r(n, n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                r(a, b) = inv[a] * g(a, b) * scale[b];
        out.push_back(std::move(r));
    }
    return out;
}

bool crystallographic_lattice_invariance(const CrystallographicStructure& c) {
    for (const auto& g : crystallographic_generators(c))
        for (size_t a = 0; a < g.rows(); ++a)
            for (size_t b = 0; b < g.cols(); ++b)
                if (!g(a, b).is_integer())
                    return false;
    return true;
}

namespace {

std::set<size_t> range_set(size_t lo, size_t hi) {
    std::set<size_t> s;
    for (size_t i = lo; i < hi; ++i)
        s.insert(i);
    return s;
}

} // namespace

CrystallographicStructure standard_structure_BE(unsigned n) {
    return {CoxeterSystem::BE(n), {n - 1}, range_set(0, n - 1)};
}

CrystallographicStructure standard_structure_BD(unsigned n) {
    return {CoxeterSystem::BD(n), {n - 1}, range_set(0, n - 1)};
}

CrystallographicStructure standard_structure_L3_4_inf() {
    return {CoxeterSystem::L3_4_inf(), {1, 2}, {0}};
}

std::optional<unsigned> generator_product_order(const GeometricRepresentation& rep, size_t i,
                                                size_t j, unsigned cap) {
    if (i == j)
        throw ValidationError("product order needs two distinct generators");
    const auto p = rep.generators.at(i) * rep.generators.at(j);
    auto acc = p;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc * p;
    }
    return std::nullopt;
}

Json to_json(const CoxeterSystem& s) {
    Json j;
    j["rank"] = s.rank();
    Json rows = Json::array();
    for (size_t a = 0; a < s.rank(); ++a) {
        Json row = Json::array();
        for (size_t b = 0; b < s.rank(); ++b) {
            const auto& l = s.m(a, b);
            if (l.is_infinite())
                row.push_back("inf");
            else
                row.push_back(l.value());
        }
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

CoxeterSystem coxeter_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError("Coxeter system needs a 'matrix'");
    const Json& rows = j.at("matrix");
    if (!rows.is_array())
        throw ParseError("'matrix' must be an array");
    LabelMatrix m;
    for (const auto& row : rows) {
        if (!row.is_array())
            throw ParseError("Coxeter matrix rows must be arrays");
        std::vector<CoxeterLabel> r;
        for (const auto& e : row) {
            if (e.is_string() && e.get<std::string>() == "inf")
                r.push_back(CoxeterLabel::infinity());
            else if (e.is_number_integer() && e.get<int64_t>() >= 1 && e.get<int64_t>() < 1000000)
                r.push_back(CoxeterLabel::finite(static_cast<unsigned>(e.get<int64_t>())));
            else
                throw ParseError("Coxeter entries are positive integers or \"inf\", got " + e.dump());
        }
        m.push_back(std::move(r));
    }
    if (j.contains("rank") && int_from_json(j.at("rank")) != static_cast<long>(m.size()))
        throw ValidationError("'rank' disagrees with the matrix size");
    return CoxeterSystem(m);
}

std::vector<ComponentType> classify_simply_laced(const CoxeterSystem& s) {
    size_t n = s.rank();
    std::vector<std::vector<size_t>> adj(n);
    std::vector<bool> non_simple(n, false);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto& m = s.m(i, j);
            if (m == CoxeterLabel::finite(2))
                continue;
            adj[i].push_back(j);
            if (m != CoxeterLabel::finite(3))
                non_simple[i] = true;
        }
    std::vector<int> comp(n, -1);
    std::vector<ComponentType> out;
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        std::vector<size_t> verts{start};
        comp[start] = static_cast<int>(out.size());
        for (size_t q = 0; q < verts.size(); ++q)
            for (size_t w : adj[verts[q]])
                if (comp[w] < 0) {
                    comp[w] = comp[start];
                    verts.push_back(w);
                }
        std::sort(verts.begin(), verts.end());
        size_t edges = 0;
        bool simple = true;
        std::vector<size_t> branch;
        for (size_t v : verts) {
            edges += adj[v].size();
            simple = simple && !non_simple[v];
            if (adj[v].size() >= 3)
                branch.push_back(v);
        }
        edges /= 2;
        ComponentType ct{'?', static_cast<unsigned>(verts.size()), verts};
        bool tree = edges + 1 == verts.size();
        if (simple && tree) {
            if (branch.empty()) {
                ct.series = 'A';
            } else if (branch.size() == 1 && adj[branch[0]].size() == 3) {
                // Arm lengths from the branch vertex.
                std::vector<unsigned> arms;
                for (size_t w : adj[branch[0]]) {
                    unsigned len = 1;
                    size_t prev = branch[0], cur = w;
                    while (adj[cur].size() == 2) {
                        size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                        prev = cur;
                        cur = nxt;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1)
                    ct.series = 'D';
                else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                    ct.series = 'E';
            }
        }
        out.push_back(std::move(ct));
    }
    auto series_rank = [](char c) { return c == 'E' ? 0 : c == 'D' ? 1 : c == 'A' ? 2 : 3; };
    std::stable_sort(out.begin(), out.end(), [&](const ComponentType& a, const ComponentType& b) {
        if (a.rank != b.rank)
            return a.rank > b.rank;
        return series_rank(a.series) < series_rank(b.series);
    });
    return out;
}

std::string type_label(const std::vector<ComponentType>& comps) {
    if (comps.empty())
        return "trivial";
    std::string s;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i)
            s += "+";
        s += comps[i].series;
        s += std::to_string(comps[i].rank);
    }
    return s;
}

} // namespace ruled
