#pragma once

#include "ruled/bigint.hpp"

#include <string>

namespace ruled {

// Exact element a + b*sqrt(2) of Q(sqrt 2).
class QSqrt2 {
  public:
    QSqrt2() : a_(0), b_(0) {}
    QSqrt2(int a) : a_(a), b_(0) {}
    QSqrt2(Rat a) : a_(std::move(a)), b_(0) {}
    QSqrt2(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rat(0), Rat(1)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    QSqrt2 operator+(const QSqrt2& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QSqrt2 operator-(const QSqrt2& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QSqrt2 operator-() const { return {-a_, -b_}; }
    QSqrt2 operator*(const QSqrt2& o) const {
        return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QSqrt2 operator/(const QSqrt2& o) const;
    QSqrt2 conjugate() const { return {a_, -b_}; }
    // a^2 - 2 b^2
    Rat norm() const { return a_ * a_ - 2 * b_ * b_; }

    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    QSqrt2& operator*=(const QSqrt2& o) { return *this = *this * o; }

    bool operator==(const QSqrt2& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt2& o) const { return !(*this == o); }
    bool operator<(const QSqrt2& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QSqrt2& o) const { return (*this - o).sign() > 0; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && ruled::is_integer(a_); }
    // Exact sign in {-1, 0, 1}.
    int sign() const;

    std::string to_string() const;
    double to_double() const;

  private:
    Rat a_, b_;
};

} // namespace ruled
