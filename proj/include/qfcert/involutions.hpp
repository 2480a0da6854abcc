#pragma once

#include "qfcert/global_forms.hpp"

namespace qfcert {

/// The quaternion algebra (a, b) over Q.
struct QuaternionAlg {
  SquareClass a;
  SquareClass b;
  friend bool operator==(const QuaternionAlg&, const QuaternionAlg&) = default;
};

/// Ad(phi) (x) (Q, can): a symplectic involution algebra of index <= 2,
/// carried structurally by the pair (phi, Q).
struct InvolutionAlgebra {
  QForm phi;
  QuaternionAlg q;
};

QForm norm_form(const QuaternionAlg& Q);
bool is_split(const QuaternionAlg& Q);

struct DegreeIndex {
  int degree = 0;
  int index = 1;
};
DegreeIndex degree_index(const InvolutionAlgebra& A);

struct Discriminant {
  /// <<a, b, disc phi>>
  QForm pfister3;
  bool trivial = false;
};
/// DomainError unless 2 * index divides the degree.
Discriminant involution_discriminant(const InvolutionAlgebra& A);

/// psi = phi (x) <<a, b>>, the form carrying G and Hyp of the algebra.
QForm reduce_to_form(const InvolutionAlgebra& A);

}  // namespace qfcert
