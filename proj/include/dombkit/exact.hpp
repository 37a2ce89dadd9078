#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dombkit/errors.hpp"

namespace dombkit {

/* All integer quantities are exact signed bigints; all fractional
 * quantities are exact rationals kept in lowest terms with positive
 * denominator (mpq_class maintains the canonical form). */
using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/* gmpxx has no long long overloads; indices and primes are funneled
 * through here. */
inline ExactInteger to_exact(long long v) {
  return ExactInteger(static_cast<long>(v));
}

/* p-adic valuation result. Finite values may be negative (valuations of
 * rationals); the Infinite marker stands for the valuation of an exact
 * zero and compares greater than every finite value. */
class Valuation {
public:
  Valuation() : finite_(true), value_(0) {}
  explicit Valuation(long long v) : finite_(true), value_(v) {}

  static Valuation infinite() {
    Valuation v;
    v.finite_ = false;
    return v;
  }

  bool is_infinite() const { return !finite_; }

  long long value() const {
    if (!finite_) throw std::domain_error("Valuation: value() of infinite valuation");
    return value_;
  }

  bool at_least(long long threshold) const {
    return !finite_ || value_ >= threshold;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : "inf";
  }

private:
  bool finite_;
  long long value_;
};

/* Immutable row n of Pascal's triangle: entries C(n,0) .. C(n,n). Rows are
 * built on demand by the multiplicative recurrence (exact division), cached
 * keyed by n, and shared; the cache is internally synchronized so concurrent
 * callers see consistent rows. */
using PascalRow = std::vector<ExactInteger>;
std::shared_ptr<const PascalRow> pascal_row(long long n);

/* C(n,k) with the degenerate convention C(n,k) = 0 for k < 0 or k > n.
 * Negative n is rejected. */
ExactInteger binomial(long long n, long long k);

bool is_prime(long long p);

/* v_p(n!) by Legendre's formula, sum of floor(n/p^i). */
Valuation factorial_valuation(long long n, long long p);

/* v_p(C(n,k)) = v_p(n!) - v_p(k!) - v_p((n-k)!); never factors the bigint. */
Valuation binomial_valuation(long long n, long long k, long long p);

/* Exact power of p dividing x, by repeated division. Infinite for x = 0. */
Valuation integer_valuation(const ExactInteger& x, long long p);

/* v_p(numerator) - v_p(denominator); Infinite for q = 0. */
Valuation rational_valuation(const ExactRational& q, long long p);

/* a == b (mod p^t) in the localization of Z at p: both inputs must be
 * p-integral, and the test is v_p(a - b) >= t. */
bool congruent_mod(const ExactRational& a, const ExactRational& b, long long p,
                   long long t);

/* Checks C(a-b,c-d) C(b,d) == C(a,c) C(c,d) C(a-c,b-d) / C(a,b) by direct
 * bigint evaluation of both sides. Requires d <= b <= a, d <= c <= a,
 * b-d <= a-c and c-d <= a-b so every factor is a standard binomial. */
bool binomial_product_identity_check(long long a, long long b, long long c,
                                     long long d);

/* Canonicalized num/den rational; den must be nonzero. */
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

ExactInteger integer_power(const ExactInteger& base, long long exponent);

/* base^exponent with negative exponents allowed (base must be nonzero then). */
ExactRational rational_power(const ExactRational& base, long long exponent);

}  // namespace dombkit
