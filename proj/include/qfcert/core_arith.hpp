#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qfcert {

using Integer = mpz_class;
using Rat = mpq_class;

/// Raised when an operation is called outside its mathematical domain
/// (zero where a unit is required, composite where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a procedure's hypothesis does not hold for the given instance
/// (e.g. a multiplier outside G(phi)). Distinct from DomainError so callers can
/// report a failed check rather than malformed input.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1u << 16;

bool is_prime(const Integer& n);

/// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
/// Trial division up to `trial_bound`, Pollard-Brent rho above it.
std::vector<std::pair<Integer, int>> factor(const Integer& n,
                                            std::uint64_t trial_bound = kDefaultTrialBound);

/// An element of Q^x / Q^x^2, held as a sign and a sorted list of distinct
/// primes. The value is their product, a nonzero square-free integer.
class SquareClass {
 public:
  SquareClass() : sign_(1), value_(1) {}

  /// Trusted constructor; `primes` must be distinct primes.
  static SquareClass from_primes(int sign, std::vector<Integer> primes);
  static SquareClass from_rational(const Rat& r);
  static SquareClass from_int(long v) { return from_rational(Rat(v)); }

  int sign() const { return sign_; }
  const std::vector<Integer>& primes() const { return primes_; }
  const Integer& value() const { return value_; }
  bool is_one() const { return sign_ > 0 && primes_.empty(); }
  bool has_prime(const Integer& p) const;

  SquareClass operator*(const SquareClass& other) const;
  SquareClass operator-() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  int sign_;
  std::vector<Integer> primes_;
  Integer value_;
};

/// The square-free integer s with r*s a nonzero rational square.
SquareClass squarefree_rep(const Rat& r);

/// Exponent of the prime p in r; negative for denominators.
int padic_valuation(const Integer& p, const Rat& r);

/// Primes dividing any item, always including 2.
std::set<Integer> prime_support(std::span<const SquareClass> items);

}  // namespace qfcert
