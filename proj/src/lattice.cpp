#include "ruled/lattice.hpp"

#include "ruled/errors.hpp"

#include <sstream>

namespace ruled {

ManifoldModel::ManifoldModel(ModelKind kind, unsigned ell, unsigned genus)
    : kind_(kind), ell_(ell), genus_(genus) {
    size_t n = rank();
    gram_ = IntMatrix(n, n);
    if (is_rational()) {
        gram_(0, 0) = 1;
        for (size_t i = 1; i < n; ++i)
            gram_(i, i) = -1;
    } else {
        gram_(0, 1) = 1;
        gram_(1, 0) = 1;
        for (size_t i = 2; i < n; ++i)
            gram_(i, i) = -1;
    }
}

ManifoldModel ManifoldModel::rational(unsigned ell) {
    return ManifoldModel(ModelKind::Rational, ell, 0);
}

ManifoldModel ManifoldModel::ruled(unsigned ell, unsigned genus) {
    return ManifoldModel(ModelKind::Ruled, ell, genus);
}

size_t ManifoldModel::e_index(unsigned i) const {
    if (i < 1 || i > ell_)
        throw ValidationError("exceptional index E" + std::to_string(i) + " out of range 1.." +
                              std::to_string(ell_));
    return is_rational() ? i : i + 1;
}

int ManifoldModel::form(size_t i, size_t j) const { return static_cast<int>(gram_(i, j).get_si()); }

std::vector<std::string> ManifoldModel::basis_names() const {
    std::vector<std::string> names;
    if (is_rational()) {
        names.push_back("L");
    } else {
        names.push_back("Y");
        names.push_back("F");
    }
    for (unsigned i = 1; i <= ell_; ++i)
        names.push_back("E" + std::to_string(i));
    return names;
}

std::string ManifoldModel::describe() const {
    std::ostringstream os;
    if (is_rational())
        os << "CP2 # " << ell_ << " CP2bar";
    else
        os << "(Y_g x S2) # " << ell_ << " CP2bar, g = " << genus_;
    return os.str();
}

HomologyClass::HomologyClass(const ManifoldModel& model, std::vector<Int> coeffs)
    : model_(model), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != model_.rank())
        throw ValidationError("class has " + std::to_string(coeffs_.size()) +
                              " coefficients, model rank is " + std::to_string(model_.rank()));
}

HomologyClass HomologyClass::zero(const ManifoldModel& model) {
    return HomologyClass(model, std::vector<Int>(model.rank(), Int(0)));
}

namespace {

HomologyClass unit(const ManifoldModel& model, size_t idx) {
    std::vector<Int> c(model.rank(), Int(0));
    c[idx] = 1;
    return HomologyClass(model, std::move(c));
}

void require_rational(const ManifoldModel& m, const char* what) {
    if (!m.is_rational())
        throw ModelMismatch(std::string(what) + " exists only in the rational model");
}

void require_ruled(const ManifoldModel& m, const char* what) {
    if (m.is_rational())
        throw ModelMismatch(std::string(what) + " exists only in the ruled model");
}

} // namespace

HomologyClass HomologyClass::line(const ManifoldModel& model) {
    require_rational(model, "L");
    return unit(model, 0);
}

HomologyClass HomologyClass::section(const ManifoldModel& model) {
    require_ruled(model, "Y");
    return unit(model, 0);
}

HomologyClass HomologyClass::fiber(const ManifoldModel& model) {
    require_ruled(model, "F");
    return unit(model, 1);
}

HomologyClass HomologyClass::exceptional(const ManifoldModel& model, unsigned i) {
    return unit(model, model.e_index(i));
}

HomologyClass HomologyClass::S(const ManifoldModel& model, unsigned i) {
    return exceptional(model, i) - exceptional(model, i + 1);
}

HomologyClass HomologyClass::S_prime(const ManifoldModel& model) {
    if (model.is_rational())
        return line(model) - exceptional(model, 1) - exceptional(model, 2) - exceptional(model, 3);
    return fiber(model) - exceptional(model, 1) - exceptional(model, 2);
}

HomologyClass HomologyClass::E_prime(const ManifoldModel& model, unsigned i) {
    return fiber(model) - exceptional(model, i);
}

HomologyClass HomologyClass::anticanonical(const ManifoldModel& model) {
    require_rational(model, "-K");
    std::vector<Int> c(model.rank(), Int(-1));
    c[0] = 3;
    return HomologyClass(model, std::move(c));
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    if (model_ != o.model_)
        throw ModelMismatch("adding classes of different models");
    std::vector<Int> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += o.coeffs_[i];
    return HomologyClass(model_, std::move(c));
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
    if (model_ != o.model_)
        throw ModelMismatch("subtracting classes of different models");
    std::vector<Int> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i)
        c[i] -= o.coeffs_[i];
    return HomologyClass(model_, std::move(c));
}

HomologyClass HomologyClass::operator-() const { return *this * Int(-1); }

HomologyClass HomologyClass::operator*(const Int& k) const {
    std::vector<Int> c = coeffs_;
    for (auto& x : c)
        x *= k;
    return HomologyClass(model_, std::move(c));
}

bool HomologyClass::is_zero() const {
    for (const auto& x : coeffs_)
        if (x != 0)
            return false;
    return true;
}

std::string HomologyClass::to_string() const {
    auto names = model_.basis_names();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1)
            os << a.get_str();
        os << names[i];
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

bool preserves_form(const ManifoldModel& model, const IntMatrix& m) {
    if (m.rows() != model.rank() || m.cols() != model.rank())
        return false;
    return m.transpose() * model.gram() * m == model.gram();
}

LatticeAutomorphism::LatticeAutomorphism(const ManifoldModel& model, IntMatrix matrix)
    : model_(model), matrix_(std::move(matrix)) {
    if (!preserves_form(model_, matrix_))
        throw ValidationError("matrix does not preserve the intersection form");
}

LatticeAutomorphism LatticeAutomorphism::identity(const ManifoldModel& model) {
    return LatticeAutomorphism(model, IntMatrix::identity(model.rank()));
}

HomologyClass LatticeAutomorphism::apply(const HomologyClass& c) const {
    if (c.model() != model_)
        throw ModelMismatch("automorphism and class belong to different models");
    return HomologyClass(model_, matrix_ * c.coeffs());
}

LatticeAutomorphism LatticeAutomorphism::compose(const LatticeAutomorphism& o) const {
    if (o.model_ != model_)
        throw ModelMismatch("composing automorphisms of different models");
    return LatticeAutomorphism(model_, matrix_ * o.matrix_);
}

LatticeAutomorphism LatticeAutomorphism::inverse() const {
    // M^T G M = G and G^2 = I in both models, so M^-1 = G M^T G.
    const IntMatrix& g = model_.gram();
    return LatticeAutomorphism(model_, g * matrix_.transpose() * g);
}

Int pairing(const HomologyClass& a, const HomologyClass& b) {
    if (a.model() != b.model())
        throw ModelMismatch("pairing classes of different models");
    const auto& m = a.model();
    Int s = 0;
    if (m.is_rational()) {
        s = a[0] * b[0];
        for (size_t i = 1; i < m.rank(); ++i)
            s -= a[i] * b[i];
    } else {
        s = a[0] * b[1] + a[1] * b[0];
        for (size_t i = 2; i < m.rank(); ++i)
            s -= a[i] * b[i];
    }
    return s;
}

LatticeAutomorphism reflection_along(const HomologyClass& s) {
    Int ss = square(s);
    int factor;
    if (ss == -2)
        factor = 1;
    else if (ss == -1)
        factor = 2;
    else
        throw UnsupportedReflection("reflection needs s.s in {-1,-2}, got " + ss.get_str() +
                                    " for " + s.to_string());
    const auto& model = s.model();
    size_t n = model.rank();
    std::vector<Int> gs = model.gram() * s.coeffs();
    IntMatrix m = IntMatrix::identity(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) += factor * s[i] * gs[j];
    return LatticeAutomorphism(model, std::move(m));
}

bool positive_cone_contains(const HomologyClass& c) {
    // Leading coefficient is lambda (rational) or the Y-coefficient (ruled),
    // which equals c.F.
    return c[0] > 0 && square(c) > 0;
}

Signature signature(const IntMatrix& gram) {
    size_t n = gram.rows();
    Matrix<Rat> a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a(i, j) = gram(i, j);
    Signature sig;
    // Congruence transformations keep inertia; reduce the trailing block.
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (a(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            size_t pi = n, pj = n;
            for (size_t i = k; i < n && pi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                sig.zero += static_cast<unsigned>(n - k);
                return sig;
            }
            // row/col pi += row/col pj; new diagonal is 2 a(pi,pj) != 0
            for (size_t j = 0; j < n; ++j)
                a(pi, j) += a(pj, j);
            for (size_t i = 0; i < n; ++i)
                a(i, pi) += a(i, pj);
            piv = pi;
        }
        if (piv != k) {
            for (size_t j = 0; j < n; ++j)
                std::swap(a(piv, j), a(k, j));
            for (size_t i = 0; i < n; ++i)
                std::swap(a(i, piv), a(i, k));
        }
        Rat d = a(k, k);
        (d > 0 ? sig.positive : sig.negative) += 1;
        // Schur complement of the pivot.
        for (size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rat f = a(i, k) / d;
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
        for (size_t i = k + 1; i < n; ++i)
            a(i, k) = a(k, i) = 0;
    }
    return sig;
}

Int determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

} // namespace ruled
