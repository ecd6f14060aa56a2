#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "threshold_lab/errors.hpp"

namespace tlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr double kLog2E = 1.4426950408889634074;  // log2(e)
inline constexpr double kLogTol = 1e-9;                  // tolerance for log2-space comparisons

BigInt falling_factorial(long long n, unsigned a);
BigInt binomial(unsigned long n, unsigned long k);
BigInt int_pow(const BigInt& base, unsigned long e);
Rational rat_pow(const Rational& base, unsigned long e);
Rational make_rational(const BigInt& num, const BigInt& den);

// log2 of positive big values without overflow; log2(0) = -inf.
double log2_value(const BigInt& z);
double log2_value(const Rational& q);

// Three-way comparison result.  When the decision came from exact arithmetic,
// `exact` is true and `near_tie` false.  In log2 space, |lhs-rhs| <= tol
// yields sign = 0 with near_tie set, so callers treating sign >= 0 as "≥"
// give ties the benefit of the doubt but can surface the flag in reports.
struct CmpResult {
    int sign = 0;
    bool exact = true;
    bool near_tie = false;

    bool ge() const { return sign >= 0; }
    bool le() const { return sign <= 0; }
    bool lt() const { return sign < 0; }
    bool gt() const { return sign > 0; }
};

// A probability-like nonnegative quantity, either exact (base^{1/root} for a
// nonnegative rational base) or a log2-space double.  Exact values compare
// exactly by raising both sides to integer powers; mixed or log2 values
// compare within kLogTol.
class Prob {
  public:
    Prob() : exact_(true), base_(0), root_(1), log2_(neg_inf()) {}

    static Prob rational(Rational r);
    static Prob nth_root(Rational r, unsigned long k);
    static Prob from_log2(double lg) {
        Prob p;
        p.exact_ = false;
        p.base_ = 0;
        p.root_ = 1;
        p.log2_ = lg;
        return p;
    }
    static Prob zero() { return rational(Rational(0)); }
    static Prob one() { return rational(Rational(1)); }

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ ? base_ == 0 : false; }
    // Base and root are meaningful only for exact values.
    const Rational& base() const { return base_; }
    unsigned long root() const { return root_; }

    double log2() const { return log2_; }
    double approx() const;

    // c * this, for a nonnegative rational scale c.
    Prob scaled(const Rational& c) const;
    // this^e as a Prob.
    Prob powed(unsigned long e) const;

    // this^e vs rhs (rhs any rational, possibly > 1 or <= 0).
    CmpResult cmp_pow(unsigned long e, const Rational& rhs, double tol = kLogTol) const;
    CmpResult cmp(const Prob& o, double tol = kLogTol) const;

    std::string describe() const;  // short human form, e.g. "(1/240)^(1/3)"

  private:
    static double neg_inf();

    bool exact_;
    Rational base_;       // >= 0
    unsigned long root_;  // >= 1
    double log2_;
};

// a * p^s  vs  b * p^t, with a, b >= 0.  Exact whenever p is exact.
CmpResult cmp_scaled_pow(const Rational& a, unsigned long s, const Rational& b, unsigned long t,
                         const Prob& p, double tol = kLogTol);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

}  // namespace tlab
