#pragma once

// Hand-rolled generators for the property tests. Fixed seeds keep every run
// reproducible.

#include <random>
#include <vector>

#include "qfcert/global_forms.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return range(0, 1) == 1; }

  /// Nonzero integer with |x| <= bound.
  long nonzero(long bound) {
    const long x = range(1, bound);
    return coin() ? x : -x;
  }

  std::vector<long> ints(int n, long bound) {
    std::vector<long> v;
    for (int i = 0; i < n; ++i) v.push_back(nonzero(bound));
    return v;
  }

  qfcert::SquareClass square_class(long bound) {
    return qfcert::SquareClass::from_int(nonzero(bound));
  }

  qfcert::QForm form(int n, long bound) {
    std::vector<qfcert::SquareClass> e;
    for (int i = 0; i < n; ++i) e.push_back(square_class(bound));
    return qfcert::QForm(std::move(e));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline qfcert::QForm form_of(const std::vector<long>& v) {
  std::vector<qfcert::SquareClass> e;
  for (long x : v) e.push_back(qfcert::SquareClass::from_int(x));
  return qfcert::QForm(std::move(e));
}

}  // namespace gen
