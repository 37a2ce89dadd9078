#pragma once

#include <stdexcept>
#include <string>

namespace dombkit {

/* Raised when a rational with negative p-adic valuation reaches an
 * operation that is only defined on the localization of Z at p. */
class NotPIntegral : public std::domain_error {
public:
  explicit NotPIntegral(const std::string& what) : std::domain_error(what) {}
};

/* Parameter combination outside the domain of the identity being checked
 * (e.g. k >= n where a factor n/(n-k) appears, or np^s > mp^r). */
class DegenerateInstance : public std::domain_error {
public:
  explicit DegenerateInstance(const std::string& what) : std::domain_error(what) {}
};

/* The side conditions of a conditional congruence are not met, so there
 * is no claim to check. */
class HypothesisNotMet : public std::domain_error {
public:
  explicit HypothesisNotMet(const std::string& what) : std::domain_error(what) {}
};

/* Eta-quotient exponents whose weighted sum is not divisible by 24; the
 * quotient would not be a series in integer powers of q. */
class NonIntegralWeight : public std::domain_error {
public:
  explicit NonIntegralWeight(const std::string& what) : std::domain_error(what) {}
};

/* Reciprocal of a series whose constant term is not a unit. */
class NonUnitConstant : public std::domain_error {
public:
  explicit NonUnitConstant(const std::string& what) : std::domain_error(what) {}
};

/* Composition with an inner series of non-positive leading exponent. */
class NonPositiveValuation : public std::domain_error {
public:
  explicit NonPositiveValuation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace dombkit
