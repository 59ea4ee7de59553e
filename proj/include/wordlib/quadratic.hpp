#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wordlib {

// Exact number (p + q*sqrt(d))/r with integer p, q, r > 0 and a fixed
// positive radicand d.  q = 0 encodes a plain rational; values with q != 0
// can only be combined when they share d.
class QuadraticReal {
public:
    QuadraticReal() : p_(0), q_(0), r_(1), d_(0) {}
    QuadraticReal(mpz_class p, mpz_class q, mpz_class r, unsigned long d);

    static QuadraticReal rational(const mpq_class& v) {
        return QuadraticReal(v.get_num(), 0, v.get_den(), 0);
    }
    static QuadraticReal integer(long v) { return QuadraticReal(v, 0, 1, 0); }

    // Accepts "(p+q√d)/r", the ASCII fallback "(p+q*sqrt(d))/r", bare
    // rationals "p/r", and bare radicals like "√5/2" or "-2*sqrt(2)/3".
    static QuadraticReal parse(std::string_view text);

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const mpz_class& r() const { return r_; }
    unsigned long d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    mpq_class as_rational() const;

    QuadraticReal operator+(const QuadraticReal& o) const;
    QuadraticReal operator-(const QuadraticReal& o) const;
    QuadraticReal operator-() const { return QuadraticReal(-p_, -q_, r_, d_); }
    QuadraticReal operator*(const mpq_class& f) const;

    int sign() const;
    int cmp(const QuadraticReal& o) const { return (*this - o).sign(); }
    bool operator<(const QuadraticReal& o) const { return cmp(o) < 0; }
    bool operator<=(const QuadraticReal& o) const { return cmp(o) <= 0; }
    bool operator>(const QuadraticReal& o) const { return cmp(o) > 0; }
    bool operator>=(const QuadraticReal& o) const { return cmp(o) >= 0; }
    bool operator==(const QuadraticReal& o) const { return cmp(o) == 0; }
    bool operator!=(const QuadraticReal& o) const { return cmp(o) != 0; }

    mpz_class floor() const;
    QuadraticReal frac_mod1() const { return *this - QuadraticReal(floor(), 0, 1, d_); }

    double approx() const;
    std::string str() const;

private:
    void normalize();
    static unsigned long common_d(const QuadraticReal& a, const QuadraticReal& b);

    mpz_class p_, q_, r_;
    unsigned long d_;
};

} // namespace wordlib
