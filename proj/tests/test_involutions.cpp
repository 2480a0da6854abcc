#include <doctest.h>

#include "gen.hpp"
#include "qfcert/involutions.hpp"

using namespace qfcert;

namespace {

QuaternionAlg quat(long a, long b) { return {SquareClass::from_int(a), SquareClass::from_int(b)}; }

}  // namespace

TEST_CASE("norm_form examples") {
  CHECK(norm_form(quat(1, 7)) == QForm::diag({1, -1, -7, 7}));
  CHECK(is_hyperbolic(norm_form(quat(1, 7))));
  CHECK(norm_form(quat(-1, -1)) == QForm::diag({1, 1, 1, 1}));
  CHECK(norm_form(quat(2, 5)) == QForm::diag({1, -2, -5, 10}));
}

TEST_CASE("is_split examples") {
  CHECK(is_split(quat(1, 7)));
  CHECK_FALSE(is_split(quat(-1, -1)));
  CHECK_FALSE(is_split(quat(2, 5)));
  CHECK(is_split(quat(2, 7)));  // 7 = 3^2 - 2*1^2
}

TEST_CASE("degree_index examples") {
  const auto a = degree_index({QForm::diag({1, 1, 1, 1}), quat(-1, -1)});
  CHECK(a.degree == 8);
  CHECK(a.index == 2);
  const auto b = degree_index({QForm::diag({1, 1, 1, 1, 1, 2}), quat(2, 5)});
  CHECK(b.degree == 12);
  CHECK(b.index == 2);
  const auto c = degree_index({QForm::diag({1, 1, 1, 1, 1, 2}), quat(1, 3)});
  CHECK(c.degree == 12);
  CHECK(c.index == 1);
}

TEST_CASE("involution_discriminant examples") {
  const auto d = involution_discriminant({QForm::diag({1, 1, 1, 1, 1, 2}), quat(2, 5)});
  CHECK(d.pfister3 == pfister({2, 5, -2}));
  CHECK(d.trivial);
  const auto n = involution_discriminant({QForm::diag({1, 1, 1, 1, 1, 1}), quat(-1, -1)});
  CHECK(n.pfister3 == pfister({-1, -1, -1}));
  CHECK_FALSE(n.trivial);
  gen::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const QForm phi = rng.form(2 * static_cast<int>(rng.range(1, 3)), 30);
    CHECK(involution_discriminant({phi, quat(1, rng.nonzero(30))}).trivial);
  }
  CHECK_THROWS_AS(involution_discriminant({QForm::diag({1, 2, 3}), quat(2, 5)}), DomainError);
  CHECK_NOTHROW(involution_discriminant({QForm::diag({1, 2, 3}), quat(1, 5)}));
}

TEST_CASE("reduce_to_form examples") {
  CHECK(reduce_to_form({QForm::diag({1}), quat(3, -7)}) == pfister({3, -7}));
  CHECK(reduce_to_form({QForm::diag({1, 2, 3, 5}), quat(3, -7)}).dim() == 16);
  const QForm psi = reduce_to_form({QForm::diag({1, 1, 1, 1, 1, 2}), quat(2, 5)});
  CHECK(psi.dim() == 24);
  CHECK(in_In(psi, 4));
}

TEST_CASE("property: multipliers of the reduced form") {
  gen::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const InvolutionAlgebra A{rng.form(2 * static_cast<int>(rng.range(1, 3)), 20),
                              quat(rng.nonzero(20), rng.nonzero(20))};
    const QForm psi = reduce_to_form(A);
    CHECK(in_G(psi, Rat(1)));
    const Rat c(rng.nonzero(30));
    const Rat s(rng.range(1, 12));
    if (in_G(psi, c)) CHECK(in_G(psi, c * s * s));
  }
}

TEST_CASE("property: psi and the discriminant agree modulo I^4") {
  gen::Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const InvolutionAlgebra A{rng.form(6, 25), quat(rng.nonzero(25), rng.nonzero(25))};
    const Discriminant d = involution_discriminant(A);
    const QForm diff = orth_sum(reduce_to_form(A), scale(SquareClass::from_int(-1), d.pfister3));
    CHECK(in_In(diff, 4));
    CHECK(d.trivial == in_In(reduce_to_form(A), 4));
  }
}

TEST_CASE("property: three characterizations of split quaternions") {
  gen::Rng rng(54);
  for (int i = 0; i < 300; ++i) {
    const QuaternionAlg Q = quat(rng.nonzero(50), rng.nonzero(50));
    const bool split = is_split(Q);
    CHECK(split == is_hyperbolic(norm_form(Q)));
    CHECK(split == (witt_decompose(norm_form(Q)).witt_index == 2));
  }
}
