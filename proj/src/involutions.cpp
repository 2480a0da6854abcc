#include "qfcert/involutions.hpp"

namespace qfcert {

QForm norm_form(const QuaternionAlg& Q) {
  const SquareClass slots[] = {Q.a, Q.b};
  return pfister(slots);
}

bool is_split(const QuaternionAlg& Q) { return is_isotropic(norm_form(Q)); }

DegreeIndex degree_index(const InvolutionAlgebra& A) {
  return {2 * A.phi.dim(), is_split(A.q) ? 1 : 2};
}

Discriminant involution_discriminant(const InvolutionAlgebra& A) {
  const DegreeIndex di = degree_index(A);
  if (di.degree % (2 * di.index) != 0)
    throw DomainError("discriminant undefined: 2 * index does not divide the degree");
  const SquareClass slots[] = {A.q.a, A.q.b, disc(A.phi)};
  Discriminant d;
  d.pfister3 = pfister(slots);
  d.trivial = is_hyperbolic(d.pfister3);
  return d;
}

QForm reduce_to_form(const InvolutionAlgebra& A) { return tensor(A.phi, norm_form(A.q)); }

}  // namespace qfcert
