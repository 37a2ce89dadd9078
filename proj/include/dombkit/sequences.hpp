#pragma once

#include "dombkit/exact.hpp"

namespace dombkit {

/* Exponent triple (A,B,C) of the generalized Domb sum
 * D(n,A,B,C) = sum_k C(n,k)^A C(2k,k)^B C(2(n-k),n-k)^C.
 * (2,1,1) gives the Domb numbers. */
struct DombSpec {
  long long A = 2;
  long long B = 1;
  long long C = 1;

  void validate() const {
    if (A < 1 || B < 1 || C < 1) {
      throw std::invalid_argument("DombSpec: A, B, C must all be >= 1");
    }
  }

  friend bool operator==(const DombSpec&, const DombSpec&) = default;
};

struct SequenceValue {
  long long index = 0;
  ExactInteger value;
};

/* Apery numbers: sum_k C(n,k)^2 C(n+k,k)^2. */
ExactInteger apery(long long n);

/* Generalized Domb number D(n,A,B,C), evaluated directly from the sum. */
ExactInteger generalized_domb(long long n, const DombSpec& spec);

/* Single summand C(n,k)^A C(2k,k)^B C(2(n-k),n-k)^C. */
ExactInteger domb_term(long long n, long long k, const DombSpec& spec);

/* C(2n,n). */
ExactInteger central_binomial(long long n);

}  // namespace dombkit
