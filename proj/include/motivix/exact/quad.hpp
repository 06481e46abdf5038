#pragma once

#include "motivix/exact/rational.hpp"

#include <string>

namespace motivix::exact {

bool is_squarefree(long d);

// a + b·√−d in ℚ(√−d).
class QuadInt {
public:
    QuadInt() = default;  // 0 with d = 1
    explicit QuadInt(long d, Rat a = 0, Rat b = 0);

    long d() const { return d_; }
    const Rat& re() const { return a_; }
    const Rat& im() const { return b_; }  // coefficient of √−d

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadInt conj() const { return QuadInt(d_, a_, -b_); }
    Rat norm() const { return a_ * a_ + Rat(d_) * b_ * b_; }
    QuadInt inverse() const;

    QuadInt operator-() const { return QuadInt(d_, -a_, -b_); }
    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);
    QuadInt& operator*=(const Rat& r);

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend QuadInt operator*(QuadInt x, const Rat& r) { return x *= r; }
    friend QuadInt operator*(const Rat& r, QuadInt x) { return x *= r; }
    friend QuadInt operator/(const QuadInt& x, const QuadInt& y) { return x * y.inverse(); }

    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    void check_same_field(const QuadInt& o) const;

    long d_ = 1;
    Rat a_ = 0;
    Rat b_ = 0;
};

}  // namespace motivix::exact
