#include "dombkit/coster.hpp"

#include <algorithm>

namespace dombkit {

namespace {

void require_prime_gt3(long long p) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("expected a prime > 3, got " + std::to_string(p));
  }
}

void require_nonneg_exponents(long long A, long long B) {
  if (A < 0 || B < 0) {
    throw std::invalid_argument("product exponents must be non-negative");
  }
}

/* Shared validation for the (m,n,r,s,p) level parameters of the reduction
 * steps: 1 <= s <= r and np^s <= mp^r (else the top binomial degenerates). */
void require_level_params(long long m, long long n, long long r, long long s,
                          long long p) {
  require_prime_gt3(p);
  if (m < 1 || n < 1 || r < 1 || s < 1) {
    throw std::invalid_argument("level parameters m, n, r, s must be >= 1");
  }
  if (s > r) throw std::invalid_argument("need s <= r");
  if (n * checked_pow(p, s) > m * checked_pow(p, r)) {
    throw DegenerateInstance("np^s exceeds mp^r");
  }
}

struct LevelContext {
  long long top_hi, bot_hi;  // mp^r, np^s
  long long top_lo, bot_lo;  // mp^{r-1}, np^{s-1}
  // Exponents and the mirrored/straight central binomial arguments.
  long long main_exp;    // A+2C, or A+2B in the mirror
  long long diff_exp;    // B-C, or C-B in the mirror
  long long denom_exp;   // C, or B in the mirror
  long long central_hi;  // np^s, or mp^r - np^s in the mirror
  long long central_lo;  // np^{s-1}, or mp^{r-1} - np^{s-1} in the mirror
  BCVariant variant;
};

LevelContext make_context(long long m, long long n, long long r, long long s,
                          long long p, const DombSpec& spec, BCVariant variant) {
  LevelContext ctx;
  ctx.top_hi = m * checked_pow(p, r);
  ctx.bot_hi = n * checked_pow(p, s);
  ctx.top_lo = m * checked_pow(p, r - 1);
  ctx.bot_lo = n * checked_pow(p, s - 1);
  ctx.variant = variant;
  if (variant == BCVariant::BAtLeastC) {
    ctx.main_exp = spec.A + 2 * spec.C;
    ctx.diff_exp = spec.B - spec.C;
    ctx.denom_exp = spec.C;
    ctx.central_hi = ctx.bot_hi;
    ctx.central_lo = ctx.bot_lo;
  } else {
    ctx.main_exp = spec.A + 2 * spec.B;
    ctx.diff_exp = spec.C - spec.B;
    ctx.denom_exp = spec.B;
    ctx.central_hi = ctx.top_hi - ctx.bot_hi;
    ctx.central_lo = ctx.top_lo - ctx.bot_lo;
  }
  return ctx;
}

ExactRational level_ratio(const LevelContext& ctx, bool lower) {
  const long long top = lower ? ctx.top_lo : ctx.top_hi;
  const long long bot = lower ? ctx.bot_lo : ctx.bot_hi;
  const long long central = lower ? ctx.central_lo : ctx.central_hi;
  ExactRational ratio(integer_power(binomial(top, bot), ctx.main_exp));
  ratio *= rational_power(ExactRational(central_binomial(central)), ctx.diff_exp);
  ratio /= ExactRational(integer_power(binomial(2 * top, 2 * bot), ctx.denom_exp));
  return ratio;
}

TruncatedPolynomial truncated_mul(const TruncatedPolynomial& a,
                                  const TruncatedPolynomial& b) {
  return TruncatedPolynomial{
      a.c0 * b.c0,
      a.c0 * b.c1 + a.c1 * b.c0,
      a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0,
  };
}

}  // namespace

long long checked_pow(long long base, long long exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  long long result = 1;
  for (long long i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw std::overflow_error("checked_pow: overflow");
    }
  }
  return result;
}

BCVariant canonical_variant(const DombSpec& spec) {
  return spec.B >= spec.C ? BCVariant::BAtLeastC : BCVariant::CExceedsB;
}

ExactRational g_product(long long A, long long B, const ExactInteger& X,
                        long long k) {
  require_nonneg_exponents(A, B);
  if (k < 0) throw std::invalid_argument("g_product: negative k");
  ExactInteger num = 1, den = 1;
  for (long long i = 1; i <= k; ++i) {
    ExactInteger lo = i - X;
    ExactInteger hi = i + X;
    if ((lo == 0 && A > 0) || (hi == 0 && B > 0)) return ExactRational(0);
    num *= integer_power(lo, A) * integer_power(hi, B);
    den *= integer_power(ExactInteger(i), A + B);
  }
  return make_rational(num, den);
}

ExactRational g_star(long long A, long long B, const ExactInteger& X,
                     long long k, long long p) {
  require_nonneg_exponents(A, B);
  if (k < 0) throw std::invalid_argument("g_star: negative k");
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("g_star: p must be prime");
  }
  ExactInteger num = 1, den = 1;
  for (long long i = 1; i <= k; ++i) {
    if (i % p == 0) continue;
    ExactInteger lo = i - X;
    ExactInteger hi = i + X;
    if ((lo == 0 && A > 0) || (hi == 0 && B > 0)) return ExactRational(0);
    num *= integer_power(lo, A) * integer_power(hi, B);
    den *= integer_power(ExactInteger(i), A + B);
  }
  return make_rational(num, den);
}

ExactRational s_sum(long long j, long long k, long long p) {
  if (j < 1) throw std::invalid_argument("s_sum: need j >= 1");
  if (k < 0) throw std::invalid_argument("s_sum: negative k");
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("s_sum: p must be prime");
  }
  ExactRational sum(0);
  for (long long i = 1; i <= k; ++i) {
    if (i % p == 0) continue;
    sum += make_rational(1, integer_power(ExactInteger(i), j));
  }
  return sum;
}

long long s_sum_required_valuation(long long p, long long r, long long j) {
  const bool clause_i = j % (p - 1) != 0;
  const bool clause_ii = (j % 2 == 1) && (((j + 1) / 2) % ((p - 1) / 2) != 0);
  if (!clause_i && !clause_ii) {
    throw HypothesisNotMet("S_" + std::to_string(j) +
                           ": neither divisibility clause applies");
  }
  if (clause_ii) return 2 * r;
  return r;
}

bool check_prop21_i_ii(long long p, long long m, long long r, long long j) {
  require_prime_gt3(p);
  if (m < 1 || r < 1 || j < 1) {
    throw std::invalid_argument("check_prop21_i_ii: need m, r, j >= 1");
  }
  const long long required = s_sum_required_valuation(p, r, j);
  return rational_valuation(s_sum(j, m * checked_pow(p, r), p), p)
      .at_least(required);
}

bool check_prop21_iii(long long A, long long B, const ExactInteger& X,
                      long long k, long long p) {
  require_nonneg_exponents(A, B);
  if (k < 0) throw std::invalid_argument("check_prop21_iii: negative k");
  ExactInteger pX = p * X;
  return g_product(A, B, pX, k) ==
         g_star(A, B, pX, k, p) * g_product(A, B, X, k / p);
}

TruncatedPolynomial g_star_truncation(long long A, long long B, long long k,
                                      long long p) {
  require_nonneg_exponents(A, B);
  if (k < 0) throw std::invalid_argument("g_star_truncation: negative k");
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("g_star_truncation: p must be prime");
  }
  TruncatedPolynomial acc{ExactRational(1), ExactRational(0), ExactRational(0)};
  for (long long i = 1; i <= k; ++i) {
    if (i % p == 0) continue;
    const TruncatedPolynomial minus{ExactRational(1), make_rational(-1, i),
                                    ExactRational(0)};
    const TruncatedPolynomial plus{ExactRational(1), make_rational(1, i),
                                   ExactRational(0)};
    for (long long e = 0; e < A; ++e) acc = truncated_mul(acc, minus);
    for (long long e = 0; e < B; ++e) acc = truncated_mul(acc, plus);
  }
  return acc;
}

TruncatedPolynomial g_star_truncation_closed_form(long long A, long long B,
                                                  long long k, long long p) {
  const ExactRational s1 = s_sum(1, k, p);
  const ExactRational s2 = s_sum(2, k, p);
  const ExactRational diff(A - B);
  TruncatedPolynomial closed;
  closed.c0 = 1;
  closed.c1 = ExactRational(B - A) * s1;
  closed.c2 = make_rational(1, 2) * (diff * diff * s1 * s1 - ExactRational(A + B) * s2);
  return closed;
}

bool check_prop21_iv(long long A, long long B, long long k, long long p) {
  return g_star_truncation(A, B, k, p) ==
         g_star_truncation_closed_form(A, B, k, p);
}

bool check_prop21_v(long long n, long long k, long long A, long long B) {
  require_nonneg_exponents(A, B);
  if (n < 1 || k < 1) throw std::invalid_argument("check_prop21_v: need n, k >= 1");
  if (k >= n) throw DegenerateInstance("check_prop21_v: requires k < n");
  ExactRational lhs(integer_power(binomial(n, k), A) *
                    integer_power(binomial(n + k, k), B));
  ExactRational rhs = rational_power(make_rational(n, n - k), A) *
                      g_product(A, B, ExactInteger(n), k);
  if ((A * k) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool key_congruence_check(long long m, long long n, long long r, long long s,
                          long long A, long long B, long long p) {
  require_prime_gt3(p);
  require_nonneg_exponents(A, B);
  if (m < 0 || n < 0 || r < 0 || s < 0 || s > r) {
    throw std::invalid_argument("key_congruence_check: need 0 <= s <= r, m, n >= 0");
  }
  const ExactInteger X = ExactInteger(m) * integer_power(ExactInteger(p), r);
  const long long k = n * checked_pow(p, s);
  const ExactRational diff = g_star(A, B, X, k, p) - 1;
  return rational_valuation(diff, p).at_least(r + 2 * s);
}

bool step_factorization_check(long long m, long long n, long long r,
                              long long s, long long p, const DombSpec& spec) {
  spec.validate();
  require_level_params(m, n, r, s, p);
  const long long top_hi = m * checked_pow(p, r), bot_hi = n * checked_pow(p, s);
  const long long top_lo = m * checked_pow(p, r - 1),
                  bot_lo = n * checked_pow(p, s - 1);
  const long long main_exp = spec.A + 2 * spec.C;

  ExactRational lhs1(integer_power(binomial(top_hi, bot_hi), main_exp));
  ExactRational rhs1 = ExactRational(integer_power(binomial(top_lo, bot_lo), main_exp)) *
                       g_star(main_exp, 0, ExactInteger(top_hi), bot_hi, p);
  if (lhs1 != rhs1) return false;

  ExactRational lhs2(integer_power(binomial(2 * top_hi, 2 * bot_hi), spec.C));
  ExactRational rhs2 =
      ExactRational(integer_power(binomial(2 * top_lo, 2 * bot_lo), spec.C)) *
      g_star(spec.C, 0, ExactInteger(2 * top_hi), 2 * bot_hi, p);
  return lhs2 == rhs2;
}

bool CosterWitness::p_integral() const { return min_valuation().at_least(0); }

Valuation CosterWitness::min_valuation() const {
  Valuation result = Valuation::infinite();
  for (const ExactRational* w : {&alpha, &beta, &gamma}) {
    const Valuation v = rational_valuation(*w, p);
    if (result.is_infinite() ||
        (!v.is_infinite() && v.value() < result.value())) {
      result = v;
    }
  }
  return result;
}

CosterWitness coster_witnesses(long long m, long long n, long long r,
                               long long s, long long p, const DombSpec& spec) {
  spec.validate();
  require_level_params(m, n, r, s, p);
  const LevelContext ctx = make_context(m, n, r, s, p, spec,
                                        canonical_variant(spec));

  const ExactInteger p_r2s = integer_power(ExactInteger(p), r + 2 * s);
  const ExactInteger p_3s = integer_power(ExactInteger(p), 3 * s);

  const ExactInteger big_hi =
      integer_power(binomial(2 * ctx.top_hi, 2 * ctx.bot_hi), ctx.denom_exp);
  const ExactInteger big_lo =
      integer_power(binomial(2 * ctx.top_lo, 2 * ctx.bot_lo), ctx.denom_exp);
  const ExactInteger cen_hi =
      integer_power(central_binomial(ctx.central_hi), ctx.diff_exp);
  const ExactInteger cen_lo =
      integer_power(central_binomial(ctx.central_lo), ctx.diff_exp);

  CosterWitness w;
  w.gamma = make_rational(big_hi - big_lo, p_r2s * big_lo);
  w.alpha = make_rational(cen_hi - cen_lo, p_3s);
  w.beta = (g_star(ctx.main_exp, 0, ExactInteger(ctx.top_hi), ctx.bot_hi, p) - 1) /
           ExactRational(p_r2s);
  w.p = p;
  w.m = m;
  w.n = n;
  w.r = r;
  w.s = s;
  w.spec = spec;
  w.variant = ctx.variant;
  return w;
}

std::vector<std::pair<std::string, Valuation>> seven_term_valuations(
    long long m, long long n, long long r, long long s, long long p,
    const DombSpec& spec) {
  spec.validate();
  require_level_params(m, n, r, s, p);
  const LevelContext ctx = make_context(m, n, r, s, p, spec,
                                        canonical_variant(spec));

  const long long v_mid = binomial_valuation(ctx.top_lo, ctx.bot_lo, p).value();
  const long long v_big = binomial_valuation(2 * ctx.top_hi, 2 * ctx.bot_hi, p).value();
  const long long v_big_lo = binomial_valuation(2 * ctx.top_lo, 2 * ctx.bot_lo, p).value();
  const long long v_cen_lo = binomial_valuation(2 * ctx.central_lo, ctx.central_lo, p).value();

  const long long E = ctx.main_exp, W = ctx.diff_exp, G = ctx.denom_exp;
  std::vector<std::pair<std::string, Valuation>> terms;
  terms.emplace_back("a", Valuation(r + 2 * s + E * v_mid + W * v_cen_lo + G * v_big_lo));
  terms.emplace_back("b", Valuation(3 * s + E * v_mid + G * v_big));
  terms.emplace_back("c", Valuation(r + 5 * s + E * v_mid + G * v_big_lo));
  terms.emplace_back("d", Valuation(r + 2 * s + G * v_big + W * v_cen_lo + E * v_mid));
  terms.emplace_back("e", Valuation(2 * r + 4 * s + W * v_cen_lo + E * v_mid + G * v_big_lo));
  terms.emplace_back("f", Valuation(r + 5 * s + G * v_big + E * v_mid));
  terms.emplace_back("g", Valuation(2 * r + 7 * s + G * v_big_lo + E * v_mid));
  return terms;
}

long long seven_term_required_valuation(long long r, long long s,
                                        const DombSpec& spec) {
  return 3 * r + std::min(spec.B, spec.C) * (r - s);
}

bool ratio_congruence_check(long long m, long long n, long long r, long long s,
                            long long p, const DombSpec& spec,
                            BCVariant variant) {
  spec.validate();
  if (spec.A < 2) {
    throw std::invalid_argument("ratio_congruence_check: requires A >= 2");
  }
  require_level_params(m, n, r, s, p);
  const LevelContext ctx = make_context(m, n, r, s, p, spec, variant);
  const ExactRational hi = level_ratio(ctx, /*lower=*/false);
  const ExactRational lo = level_ratio(ctx, /*lower=*/true);
  if (!rational_valuation(hi, p).at_least(0) ||
      !rational_valuation(lo, p).at_least(0)) {
    throw NotPIntegral("ratio_congruence_check: ratio not p-integral");
  }
  return congruent_mod(hi, lo, p, 3 * r);
}

VanishingSumReport vanishing_sum_report(long long m, long long r, long long p,
                                        const DombSpec& spec) {
  spec.validate();
  require_prime_gt3(p);
  if (m < 1 || r < 1) {
    throw std::invalid_argument("vanishing_sum_report: need m, r >= 1");
  }
  if (spec.A < 2) {
    throw std::invalid_argument("vanishing_sum_report: requires A >= 2");
  }
  const BCVariant variant = canonical_variant(spec);
  const long long N = m * checked_pow(p, r);
  const long long main_exp =
      variant == BCVariant::BAtLeastC ? spec.A + 2 * spec.C : spec.A + 2 * spec.B;
  const long long diff_exp = variant == BCVariant::BAtLeastC ? spec.B - spec.C
                                                             : spec.C - spec.B;
  const long long denom_exp = variant == BCVariant::BAtLeastC ? spec.C : spec.B;

  const ExactInteger prefactor =
      integer_power(central_binomial(N), denom_exp);
  const long long v_prefactor = integer_valuation(prefactor, p).is_infinite()
                                    ? 0
                                    : integer_valuation(prefactor, p).value();

  VanishingSumReport report;
  report.required = 3 * r;
  report.termwise_holds = true;
  report.min_term_valuation = Valuation::infinite();
  ExactRational sum(0);
  for (long long k = 1; k <= N; ++k) {
    if (k % p == 0) continue;
    const long long central_arg = variant == BCVariant::BAtLeastC ? k : N - k;
    // Valuation of the term, assembled factor by factor via Legendre.
    const long long v =
        v_prefactor + main_exp * binomial_valuation(N, k, p).value() +
        diff_exp * binomial_valuation(2 * central_arg, central_arg, p).value() -
        denom_exp * binomial_valuation(2 * N, 2 * k, p).value();
    if (report.min_term_valuation.is_infinite() ||
        v < report.min_term_valuation.value()) {
      report.min_term_valuation = Valuation(v);
    }
    if (v < report.required) report.termwise_holds = false;

    ExactRational term(prefactor * integer_power(binomial(N, k), main_exp) *
                       integer_power(central_binomial(central_arg), diff_exp));
    term /= ExactRational(integer_power(binomial(2 * N, 2 * k), denom_exp));
    sum += term;
    ++report.term_count;
  }
  report.sum_valuation = rational_valuation(sum, p);
  return report;
}

bool vanishing_sum_check(long long m, long long r, long long p,
                         const DombSpec& spec) {
  return vanishing_sum_report(m, r, p, spec).termwise_holds;
}

}  // namespace dombkit
