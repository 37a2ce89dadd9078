#include "dombkit/exact.hpp"

#include <mutex>
#include <unordered_map>

namespace dombkit {

namespace {

// Rows above this are not worth caching; single entries are computed directly.
constexpr long long kMaxCachedRow = 10000;

class PascalCache {
public:
  static PascalCache& instance() {
    static PascalCache cache;
    return cache;
  }

  std::shared_ptr<const PascalRow> row(long long n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rows_.find(n);
    if (it != rows_.end()) return it->second;
    auto built = std::make_shared<PascalRow>(build(n));
    rows_.emplace(n, built);
    return built;
  }

private:
  static PascalRow build(long long n) {
    PascalRow row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    // C(n,k) = C(n,k-1) * (n-k+1) / k, an exact division at every step.
    for (long long k = 1; k <= n; ++k) {
      mpz_mul_si(row[k].get_mpz_t(), row[k - 1].get_mpz_t(), n - k + 1);
      mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(),
                      static_cast<unsigned long>(k));
    }
    return row;
  }

  std::mutex mu_;
  std::unordered_map<long long, std::shared_ptr<const PascalRow>> rows_;
};

void require_prime(long long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("expected a prime, got " + std::to_string(p));
  }
}

}  // namespace

std::shared_ptr<const PascalRow> pascal_row(long long n) {
  if (n < 0) throw std::invalid_argument("pascal_row: negative n");
  return PascalCache::instance().row(n);
}

ExactInteger binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (n > kMaxCachedRow) {
    ExactInteger result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
  }
  return (*pascal_row(n))[static_cast<std::size_t>(k)];
}

bool is_prime(long long p) {
  if (p < 2) return false;
  ExactInteger z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

Valuation factorial_valuation(long long n, long long p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("factorial_valuation: negative n");
  long long total = 0;
  for (long long q = n / p; q > 0; q /= p) total += q;
  return Valuation(total);
}

Valuation binomial_valuation(long long n, long long k, long long p) {
  require_prime(p);
  if (k < 0 || k > n) {
    throw std::invalid_argument("binomial_valuation: need 0 <= k <= n");
  }
  return Valuation(factorial_valuation(n, p).value() -
                   factorial_valuation(k, p).value() -
                   factorial_valuation(n - k, p).value());
}

Valuation integer_valuation(const ExactInteger& x, long long p) {
  require_prime(p);
  if (x == 0) return Valuation::infinite();
  ExactInteger rest;
  auto count = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(),
                          ExactInteger(std::to_string(p)).get_mpz_t());
  return Valuation(static_cast<long long>(count));
}

Valuation rational_valuation(const ExactRational& q, long long p) {
  require_prime(p);
  if (q == 0) return Valuation::infinite();
  return Valuation(integer_valuation(q.get_num(), p).value() -
                   integer_valuation(q.get_den(), p).value());
}

bool congruent_mod(const ExactRational& a, const ExactRational& b, long long p,
                   long long t) {
  if (t < 1) throw std::invalid_argument("congruent_mod: need t >= 1");
  if (!rational_valuation(a, p).at_least(0) ||
      !rational_valuation(b, p).at_least(0)) {
    throw NotPIntegral("congruent_mod: inputs must be p-integral");
  }
  return rational_valuation(a - b, p).at_least(t);
}

bool binomial_product_identity_check(long long a, long long b, long long c,
                                     long long d) {
  const bool in_domain = a >= 0 && d >= 0 && d <= b && b <= a && d <= c &&
                         c <= a && b - d <= a - c && c - d <= a - b;
  if (!in_domain) {
    throw DegenerateInstance("binomial_product_identity_check: factors out of range");
  }
  ExactRational lhs(binomial(a - b, c - d) * binomial(b, d));
  ExactRational rhs = make_rational(
      binomial(a, c) * binomial(c, d) * binomial(a - c, b - d), binomial(a, b));
  return lhs == rhs;
}

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInteger integer_power(const ExactInteger& base, long long exponent) {
  if (exponent < 0) throw std::invalid_argument("integer_power: negative exponent");
  ExactInteger result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return result;
}

ExactRational rational_power(const ExactRational& base, long long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational_power: 0 to a negative power");
    return rational_power(make_rational(base.get_den(), base.get_num()), -exponent);
  }
  return make_rational(integer_power(base.get_num(), exponent),
                       integer_power(base.get_den(), exponent));
}

}  // namespace dombkit
