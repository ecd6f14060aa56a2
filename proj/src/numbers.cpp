#include "threshold_lab/numbers.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace tlab {

BigInt falling_factorial(long long n, unsigned a) {
    if (n < 0) throw DomainError("falling factorial needs n >= 0");
    BigInt out = 1;
    for (unsigned i = 0; i < a; ++i) {
        long term = static_cast<long>(n) - static_cast<long>(i);
        if (term <= 0) return 0;
        out *= BigInt(term);
    }
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational rat_pow(const Rational& base, unsigned long e) {
    Rational out(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
    out.canonicalize();
    return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

double log2_value(const BigInt& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    if (z < 0) throw DomainError("log2 of negative value");
    long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

double log2_value(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    if (q < 0) throw DomainError("log2 of negative value");
    return log2_value(BigInt(q.get_num())) - log2_value(BigInt(q.get_den()));
}

double Prob::neg_inf() { return -std::numeric_limits<double>::infinity(); }

Prob Prob::rational(Rational r) {
    if (r < 0) throw DomainError("negative probability value");
    Prob p;
    p.exact_ = true;
    p.base_ = std::move(r);
    p.base_.canonicalize();
    p.root_ = 1;
    p.log2_ = log2_value(p.base_);
    return p;
}

Prob Prob::nth_root(Rational r, unsigned long k) {
    if (k == 0) throw DomainError("0th root");
    if (r < 0) throw DomainError("negative probability value");
    Prob p;
    p.exact_ = true;
    p.base_ = std::move(r);
    p.base_.canonicalize();
    p.root_ = (p.base_ == 0 || p.base_ == 1) ? 1 : k;
    p.log2_ = log2_value(p.base_) / static_cast<double>(p.root_);
    return p;
}

double Prob::approx() const { return std::exp2(log2_); }

Prob Prob::scaled(const Rational& c) const {
    if (c < 0) throw DomainError("negative scale");
    if (!exact_) {
        if (c == 0) return zero();
        return from_log2(log2_ + log2_value(c));
    }
    // c * base^{1/k} = (c^k * base)^{1/k}
    return nth_root(rat_pow(c, root_) * base_, root_);
}

Prob Prob::powed(unsigned long e) const {
    if (e == 0) return one();
    if (!exact_) return from_log2(log2_ * static_cast<double>(e));
    unsigned long g = std::gcd(e, root_);
    return nth_root(rat_pow(base_, e / g), root_ / g);
}

CmpResult Prob::cmp_pow(unsigned long e, const Rational& rhs, double tol) const {
    if (rhs < 0) return {1, true, false};  // this^e >= 0 > rhs
    if (exact_) {
        if (e == 0) return {::cmp(Rational(1), rhs), true, false};
        // base^{e/root} vs rhs  <=>  base^e vs rhs^root (both sides >= 0)
        Rational lhs = rat_pow(base_, e);
        Rational r = rat_pow(rhs, root_);
        return {::cmp(lhs, r), true, false};
    }
    double lhs_lg = log2_ * static_cast<double>(e);
    double rhs_lg = log2_value(rhs);
    if (lhs_lg == rhs_lg) return {0, false, true};
    if (std::abs(lhs_lg - rhs_lg) <= tol) return {0, false, true};
    return {lhs_lg < rhs_lg ? -1 : 1, false, false};
}

CmpResult Prob::cmp(const Prob& o, double tol) const {
    if (exact_ && o.exact_) {
        // base^{1/r} vs obase^{1/s}  <=>  base^s vs obase^r
        Rational lhs = rat_pow(base_, o.root_);
        Rational rhs = rat_pow(o.base_, root_);
        return {::cmp(lhs, rhs), true, false};
    }
    double a = log2_, b = o.log2();
    if (a == b) return {0, false, true};
    if (std::abs(a - b) <= tol) return {0, false, true};
    return {a < b ? -1 : 1, false, false};
}

std::string Prob::describe() const {
    std::ostringstream os;
    if (exact_) {
        if (root_ == 1)
            os << base_.get_str();
        else
            os << "(" << base_.get_str() << ")^(1/" << root_ << ")";
    } else {
        os << "2^" << log2_;
    }
    return os.str();
}

CmpResult cmp_scaled_pow(const Rational& a, unsigned long s, const Rational& b, unsigned long t,
                         const Prob& p, double tol) {
    if (a < 0 || b < 0) throw DomainError("negative coefficient in scaled power comparison");
    if (p.is_exact()) {
        // a^k p^s vs b^k p^t with k = root: a^k base^s vs b^k base^t.
        unsigned long k = p.root();
        Rational lhs = rat_pow(a, k) * rat_pow(p.base(), s);
        Rational rhs = rat_pow(b, k) * rat_pow(p.base(), t);
        return {::cmp(lhs, rhs), true, false};
    }
    if (a == 0 && b == 0) return {0, true, false};
    if (a == 0) return {-1, true, false};
    if (b == 0) return {1, true, false};
    double lhs = log2_value(a) + static_cast<double>(s) * p.log2();
    double rhs = log2_value(b) + static_cast<double>(t) * p.log2();
    if (lhs == rhs) return {0, false, true};
    if (std::abs(lhs - rhs) <= tol) return {0, false, true};
    return {lhs < rhs ? -1 : 1, false, false};
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace tlab
