#include "ruled/qsqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace ruled {

QSqrt2 QSqrt2::operator/(const QSqrt2& o) const {
    Rat n = o.norm();
    if (n == 0)
        throw std::domain_error("division by zero in Q(sqrt2)");
    QSqrt2 p = *this * o.conjugate();
    return {p.a_ / n, p.b_ / n};
}

int QSqrt2::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == 0)
        return sb;
    if (sb == 0 || sa == sb)
        return sa;
    // Opposite signs: the term with the larger square wins.
    int cmp_ = cmp(Rat(a_ * a_), Rat(2 * b_ * b_));
    return cmp_ > 0 ? sa : (cmp_ < 0 ? sb : 0);
}

std::string QSqrt2::to_string() const {
    if (b_ == 0)
        return a_.get_str();
    std::string s;
    if (a_ != 0)
        s = a_.get_str() + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0)
        s = "-";
    Rat ab = abs(b_);
    if (ab != 1)
        s += ab.get_str() + "*";
    return s + "sqrt2";
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

} // namespace ruled
