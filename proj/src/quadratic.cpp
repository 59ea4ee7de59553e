#include "wordlib/quadratic.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace wordlib {

QuadraticReal::QuadraticReal(mpz_class p, mpz_class q, mpz_class r, unsigned long d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
    if (r_ == 0) throw std::invalid_argument("quadratic: zero denominator");
    if (q_ != 0 && d_ == 0) throw std::invalid_argument("quadratic: radical with d = 0");
    normalize();
}

void QuadraticReal::normalize() {
    if (r_ < 0) { p_ = -p_; q_ = -q_; r_ = -r_; }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) { p_ /= g; q_ /= g; r_ /= g; }
    if (q_ == 0) d_ = 0;
}

unsigned long QuadraticReal::common_d(const QuadraticReal& a, const QuadraticReal& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw std::invalid_argument("quadratic: mixed radicands");
}

mpq_class QuadraticReal::as_rational() const {
    if (!is_rational()) throw std::invalid_argument("quadratic: not rational");
    mpq_class v(p_, r_);
    v.canonicalize();
    return v;
}

QuadraticReal QuadraticReal::operator+(const QuadraticReal& o) const {
    unsigned long d = common_d(*this, o);
    return QuadraticReal(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d);
}

QuadraticReal QuadraticReal::operator-(const QuadraticReal& o) const {
    unsigned long d = common_d(*this, o);
    return QuadraticReal(p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_, r_ * o.r_, d);
}

QuadraticReal QuadraticReal::operator*(const mpq_class& f) const {
    return QuadraticReal(p_ * f.get_num(), q_ * f.get_num(), r_ * f.get_den(), d_);
}

int QuadraticReal::sign() const {
    // sign of p + q*sqrt(d) (r > 0 by invariant)
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: decided by p^2 vs q^2 d
    mpz_class lhs = p_ * p_, rhs = q_ * q_ * static_cast<long>(d_);
    int c = lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    return sp > 0 ? c : -c;
}

mpz_class QuadraticReal::floor() const {
    // bracket q*sqrt(d) between consecutive integers, then adjust exactly
    mpz_class s;
    mpz_class q2d = q_ * q_ * static_cast<long>(d_);
    mpz_sqrt(s.get_mpz_t(), q2d.get_mpz_t());
    mpz_class num = q_ >= 0 ? mpz_class(p_ + s) : mpz_class(p_ - s - 1);
    mpz_class c;
    mpz_fdiv_q(c.get_mpz_t(), num.get_mpz_t(), r_.get_mpz_t());
    while ((*this - QuadraticReal(c + 1, 0, 1, d_)).sign() >= 0) ++c;
    while ((*this - QuadraticReal(c, 0, 1, d_)).sign() < 0) --c;
    return c;
}

double QuadraticReal::approx() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(d_))) / r_.get_d();
}

std::string QuadraticReal::str() const {
    if (is_rational())
        return r_ == 1 ? p_.get_str() : p_.get_str() + "/" + r_.get_str();
    std::string rad = "√" + std::to_string(d_);
    std::string core = p_.get_str() + (q_ > 0 ? "+" : "-") +
                       (abs(q_) == 1 ? "" : mpz_class(abs(q_)).get_str()) + rad;
    std::string out = "(" + core + ")";
    if (r_ != 1) out += "/" + r_.get_str();
    return out;
}

QuadraticReal QuadraticReal::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    // unify the two radical spellings: "*sqrt(d)" / "sqrt(d)" -> "√d";
    // accept U+2212 for the minus sign
    static const std::regex sqrt_ascii(R"(\*?sqrt\((\d+)\))");
    s = std::regex_replace(s, sqrt_ascii, "√$1");
    static const std::regex unicode_minus("−");
    s = std::regex_replace(s, unicode_minus, "-");

    static const std::regex full(R"(^\((-?\d+)([+-])(\d*)√(\d+)\)(?:/(\d+))?$)");
    static const std::regex radical(R"(^(-?)(\d*)√(\d+)(?:/(\d+))?$)");
    static const std::regex rational(R"(^(-?\d+)(?:/(\d+))?$)");

    std::smatch m;
    if (std::regex_match(s, m, full)) {
        mpz_class p(m[1].str());
        mpz_class q(m[3].length() ? m[3].str() : "1");
        if (m[2].str() == "-") q = -q;
        mpz_class r(m[5].matched ? m[5].str() : "1");
        return QuadraticReal(p, q, r, std::stoul(m[4].str()));
    }
    if (std::regex_match(s, m, radical)) {
        mpz_class q(m[2].length() ? m[2].str() : "1");
        if (m[1].length()) q = -q;
        mpz_class r(m[4].matched ? m[4].str() : "1");
        return QuadraticReal(0, q, r, std::stoul(m[3].str()));
    }
    if (std::regex_match(s, m, rational)) {
        mpz_class p(m[1].str());
        mpz_class r(m[2].matched ? m[2].str() : "1");
        return QuadraticReal(p, 0, r, 0);
    }
    throw std::invalid_argument("quadratic: cannot parse \"" + std::string(text) + "\"");
}

} // namespace wordlib
