#pragma once

// Bounded residue searches in the rings of integers of Q_2 and its quadratic
// extensions. A field is named by the Q_2 square-class code of the adjoined
// element; code 0 is Q_2 itself.
//
// Elements are pairs over Z/2^k in the basis {1, w} with w = sqrt(d), or
// w = (1 + sqrt(d))/2 when d = 1 mod 4, which is a basis of the maximal order.

#include "qfcert/local.hpp"

namespace qfcert::dyadic {

/// Is <1, -a, -b> isotropic over the field? Decided by searching primitive
/// vectors modulo 2^5, which lies inside pi^(2e+3) times the coefficient
/// valuation slack, so every hit lifts by Hensel and every zero reduces to a hit.
/// Results are tabulated once per process; the table is immutable afterwards.
bool ternary_isotropic(QvCode field, QvCode a, QvCode b);

/// Is the rational a a square in the field? Units are tested by searching
/// x^2 = u modulo 2^3 (inside pi^(2e+1)); in a ramified field an element of
/// odd 2-adic valuation is tested against non-unit roots modulo 2^4.
bool is_square(const Rat& a, QvCode field);

/// Ramification index of the quadratic field named by code (1 for Q_2).
int ramification(QvCode field);

}  // namespace qfcert::dyadic
