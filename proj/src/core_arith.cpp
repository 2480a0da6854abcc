#include "qfcert/core_arith.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace qfcert {

namespace {

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Pollard rho with Brent's cycle detection; returns a nontrivial factor of
// the odd composite n.
Integer brent_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd_int(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_int(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = brent_rho(n);
  split_large(d, out);
  split_large(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<Integer, int>> factor(const Integer& n, std::uint64_t trial_bound) {
  if (n == 0) throw DomainError("factor: zero has no factorization");
  std::map<Integer, int> found;
  Integer m = abs(n);
  auto strip = [&](unsigned long d) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) found[Integer(d)] += e;
  };
  strip(2);
  std::uint64_t d = 3;
  for (; d <= trial_bound && Integer(d) * d <= m; d += 2) strip(static_cast<unsigned long>(d));
  if (m > 1) {
    if (Integer(d) * d > m) {
      ++found[m];
    } else {
      split_large(m, found);
    }
  }
  return {found.begin(), found.end()};
}

SquareClass SquareClass::from_primes(int sign, std::vector<Integer> primes) {
  SquareClass s;
  s.sign_ = sign < 0 ? -1 : 1;
  std::sort(primes.begin(), primes.end());
  s.primes_ = std::move(primes);
  s.value_ = s.sign_;
  for (const auto& p : s.primes_) s.value_ *= p;
  return s;
}

SquareClass SquareClass::from_rational(const Rat& r) {
  if (r == 0) throw DomainError("square class of zero is undefined");
  std::vector<Integer> odd;
  // r = num/den is in the class of num*den; exponents add.
  std::map<Integer, int> exps;
  for (auto& [p, e] : factor(r.get_num())) exps[p] += e;
  for (auto& [p, e] : factor(r.get_den())) exps[p] += e;
  for (auto& [p, e] : exps)
    if (e % 2 != 0) odd.push_back(p);
  return from_primes(sgn(r), std::move(odd));
}

bool SquareClass::has_prime(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  std::vector<Integer> merged;
  std::set_symmetric_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                                other.primes_.end(), std::back_inserter(merged));
  return from_primes(sign_ * other.sign_, std::move(merged));
}

SquareClass SquareClass::operator-() const { return from_primes(-sign_, primes_); }

SquareClass squarefree_rep(const Rat& r) { return SquareClass::from_rational(r); }

int padic_valuation(const Integer& p, const Rat& r) {
  if (!is_prime(p)) throw DomainError("padic_valuation: " + p.get_str() + " is not prime");
  if (r == 0) throw DomainError("padic_valuation: zero has infinite valuation");
  auto count = [&](const Integer& v) {
    Integer t = v;
    return static_cast<int>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
  };
  return count(r.get_num()) - count(r.get_den());
}

std::set<Integer> prime_support(std::span<const SquareClass> items) {
  std::set<Integer> out{Integer(2)};
  for (const auto& s : items) out.insert(s.primes().begin(), s.primes().end());
  return out;
}

}  // namespace qfcert
