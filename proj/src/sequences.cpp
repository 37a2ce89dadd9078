#include "dombkit/sequences.hpp"

namespace dombkit {

ExactInteger apery(long long n) {
  if (n < 0) throw std::invalid_argument("apery: negative index");
  auto row_n = pascal_row(n);
  ExactInteger sum = 0;
  for (long long k = 0; k <= n; ++k) {
    ExactInteger term = (*row_n)[k] * (*row_n)[k];
    const ExactInteger& lift = (*pascal_row(n + k))[k];
    term *= lift * lift;
    sum += term;
  }
  return sum;
}

ExactInteger generalized_domb(long long n, const DombSpec& spec) {
  if (n < 0) throw std::invalid_argument("generalized_domb: negative index");
  spec.validate();
  ExactInteger sum = 0;
  for (long long k = 0; k <= n; ++k) {
    sum += domb_term(n, k, spec);
  }
  return sum;
}

ExactInteger domb_term(long long n, long long k, const DombSpec& spec) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("domb_term: need 0 <= k <= n");
  }
  spec.validate();
  ExactInteger term = integer_power(binomial(n, k), spec.A);
  term *= integer_power(central_binomial(k), spec.B);
  term *= integer_power(central_binomial(n - k), spec.C);
  return term;
}

ExactInteger central_binomial(long long n) {
  if (n < 0) throw std::invalid_argument("central_binomial: negative index");
  return binomial(2 * n, n);
}

}  // namespace dombkit
