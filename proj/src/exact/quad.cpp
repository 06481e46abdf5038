#include "motivix/exact/quad.hpp"

#include "motivix/errors.hpp"

namespace motivix::exact {

bool is_squarefree(long d) {
    if (d <= 0) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

QuadInt::QuadInt(long d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (!is_squarefree(d)) throw InvalidInput("d must be a positive squarefree integer");
}

void QuadInt::check_same_field(const QuadInt& o) const {
    // A zero with the default d = 1 is accepted as the neutral element of any field.
    if (d_ != o.d_ && !o.is_zero() && !is_zero())
        throw ShapeError("mixing elements of different quadratic fields");
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
    check_same_field(o);
    if (is_zero()) d_ = o.d_;
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
    check_same_field(o);
    if (is_zero()) d_ = o.d_;
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
    check_same_field(o);
    if (is_zero()) d_ = o.d_;
    Rat a = a_ * o.a_ - Rat(d_) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadInt& QuadInt::operator*=(const Rat& r) {
    a_ *= r;
    b_ *= r;
    return *this;
}

QuadInt QuadInt::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    Rat n = norm();
    return QuadInt(d_, a_ / n, -b_ / n);
}

std::string QuadInt::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s;
    if (a_ != 0) s = a_.get_str() + (b_ > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt(-" + std::to_string(d_) + ")";
}

}  // namespace motivix::exact
