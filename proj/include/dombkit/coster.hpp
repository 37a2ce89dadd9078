#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dombkit/exact.hpp"
#include "dombkit/sequences.hpp"

namespace dombkit {

/* Which of the two exponent cases a check runs in: the B >= C form keeps
 * C(2k,k)^{B-C} with denominator exponent C, the C > B mirror keeps
 * C(2(n-k),n-k)^{C-B} with denominator exponent B. */
enum class BCVariant { BAtLeastC, CExceedsB };

BCVariant canonical_variant(const DombSpec& spec);

/* g_{AB}(X,k) = prod_{i=1..k} (1 - X/i)^A (1 + X/i)^B. A vanishing factor
 * short-circuits to an exact zero. */
ExactRational g_product(long long A, long long B, const ExactInteger& X,
                        long long k);

/* Same product restricted to indices i with p not dividing i; the
 * denominator is coprime to p by construction. */
ExactRational g_star(long long A, long long B, const ExactInteger& X,
                     long long k, long long p);

/* S_j(k) = sum_{i=1..k, p not dividing i} 1/i^j. */
ExactRational s_sum(long long j, long long k, long long p);

/* Divisibility of S_j(mp^r): the bound is p^r when j != 0 mod (p-1) and
 * p^{2r} when j = 2j'-1 with j' != 0 mod (p-1)/2; the stronger applicable
 * bound is required. Throws HypothesisNotMet when neither side condition
 * holds. */
bool check_prop21_i_ii(long long p, long long m, long long r, long long j);

/* The applicable required valuation for S_j(mp^r), without evaluating the
 * sum. Throws HypothesisNotMet when no clause applies. */
long long s_sum_required_valuation(long long p, long long r, long long j);

/* g_{AB}(pX,k) = g*_{AB}(pX,k) g_{AB}(X, floor(k/p)), checked exactly. */
bool check_prop21_iii(long long A, long long B, const ExactInteger& X,
                      long long k, long long p);

/* Residue of a polynomial in X modulo X^3. */
struct TruncatedPolynomial {
  ExactRational c0, c1, c2;

  friend bool operator==(const TruncatedPolynomial&,
                         const TruncatedPolynomial&) = default;
};

/* Expands prod_{i<=k, p not dividing i} (1 - X/i)^A (1 + X/i)^B as a
 * polynomial in X truncated past degree 2. */
TruncatedPolynomial g_star_truncation(long long A, long long B, long long k,
                                      long long p);

/* 1 + (B-A) S_1(k) X + (1/2)((A-B)^2 S_1(k)^2 - (A+B) S_2(k)) X^2. */
TruncatedPolynomial g_star_truncation_closed_form(long long A, long long B,
                                                  long long k, long long p);

bool check_prop21_iv(long long A, long long B, long long k, long long p);

/* C(n,k)^A C(n+k,k)^B = (-1)^{Ak} (n/(n-k))^A g_{AB}(n,k); requires k < n. */
bool check_prop21_v(long long n, long long k, long long A, long long B);

/* g*_{AB}(mp^r, np^s) = 1 (mod p^{r+2s}) for s <= r. */
bool key_congruence_check(long long m, long long n, long long r, long long s,
                          long long A, long long B, long long p);

/* The two exact factorization steps through g*:
 *   C(mp^r,np^s)^{A+2C}  = C(mp^{r-1},np^{s-1})^{A+2C} g*_{(A+2C)0}(mp^r,np^s)
 *   C(2mp^r,2np^s)^C     = C(2mp^{r-1},2np^{s-1})^C    g*_{C0}(2mp^r,2np^s) */
bool step_factorization_check(long long m, long long n, long long r,
                              long long s, long long p, const DombSpec& spec);

/* The three quantities whose p-integrality carries the main congruence:
 *   gamma: from the C-th (resp. B-th) power of the big central binomial,
 *   alpha: from the (B-C)-th (resp. (C-B)-th) power of the small one,
 *   beta:  from g* - 1 at level (r,s).
 * The C > B case uses the mirrored quantities. */
struct CosterWitness {
  ExactRational alpha, beta, gamma;
  long long p = 0, m = 0, n = 0, r = 0, s = 0;
  DombSpec spec;
  BCVariant variant = BCVariant::BAtLeastC;

  bool p_integral() const;
  Valuation min_valuation() const;
};

CosterWitness coster_witnesses(long long m, long long n, long long r,
                               long long s, long long p, const DombSpec& spec);

/* p-adic valuations of the seven products of a p-power with binomial powers
 * that arise when the witness substitutions are multiplied out; each must be
 * at least seven_term_required_valuation. */
std::vector<std::pair<std::string, Valuation>> seven_term_valuations(
    long long m, long long n, long long r, long long s, long long p,
    const DombSpec& spec);

long long seven_term_required_valuation(long long r, long long s,
                                        const DombSpec& spec);

/* The level-(r,s) ratio of binomial powers is congruent mod p^{3r} to the
 * level-(r-1,s-1) ratio:
 *   B >= C:  C(mp^r,np^s)^{A+2C} C(2np^s,np^s)^{B-C} / C(2mp^r,2np^s)^C
 *   C > B:   C(mp^r,np^s)^{A+2B} C(2(mp^r-np^s),mp^r-np^s)^{C-B}
 *                                                       / C(2mp^r,2np^s)^B */
bool ratio_congruence_check(long long m, long long n, long long r, long long s,
                            long long p, const DombSpec& spec,
                            BCVariant variant);

struct VanishingSumReport {
  bool termwise_holds = false;
  Valuation min_term_valuation;
  Valuation sum_valuation;
  long long required = 0;
  long long term_count = 0;
};

/* Every term of the p-not-dividing-k part of the rewritten Domb sum is
 * divisible by p^{3r}; the report also carries the valuation of the whole
 * partial sum. */
VanishingSumReport vanishing_sum_report(long long m, long long r, long long p,
                                        const DombSpec& spec);

bool vanishing_sum_check(long long m, long long r, long long p,
                         const DombSpec& spec);

/* p^e with overflow checking; exponents here stay desk-scale. */
long long checked_pow(long long base, long long exp);

}  // namespace dombkit
