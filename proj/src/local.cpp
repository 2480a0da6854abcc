#include "qfcert/local.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfcert/dyadic.hpp"

namespace qfcert {

namespace {

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Strip p from r: returns the valuation and leaves the p-adic unit in r.
int strip_prime(Rat& r, const Integer& p) {
  Integer num = r.get_num(), den = r.get_den();
  const int vn = static_cast<int>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  const int vd = static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  r = Rat(num, den);
  r.canonicalize();
  return vn - vd;
}

Integer residue_mod(const Rat& unit, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), unit.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("residue_mod: denominator not invertible");
  Integer r = (unit.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

Integer smallest_nonresidue(const Integer& p) {
  for (Integer u = 2;; ++u)
    if (legendre(u, p) == -1) return u;
}

std::vector<QvCode> span_of(const std::vector<QvCode>& gens) {
  std::vector<QvCode> span{0};
  for (QvCode g : gens) {
    std::vector<QvCode> next = span;
    for (QvCode s : span) next.push_back(static_cast<QvCode>(s ^ g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  return span;
}

bool contains(const std::vector<QvCode>& v, QvCode c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// Hilbert symbol over Q_v from class codes (closed formulas).
int qv_symbol_closed(QvCode a, QvCode b, const Place& v) {
  if (v.is_real()) return ((a & 1) && (b & 1)) ? -1 : 1;
  const int alpha = a & 1, beta = b & 1;
  if (v.is_dyadic()) {
    // (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
    const int eps_a = (a >> 1) & 1, eps_b = (b >> 1) & 1;
    const int om_a = (a >> 2) & 1, om_b = (b >> 2) & 1;
    return ((eps_a * eps_b + alpha * om_b + beta * om_a) & 1) ? -1 : 1;
  }
  const Integer half = (v.prime() - 1) / 2;
  const int eps_p = mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
  const int na = (a >> 1) & 1, nb = (b >> 1) & 1;
  return ((alpha * beta * eps_p + na * beta + nb * alpha) & 1) ? -1 : 1;
}

// Tame symbol ((-1)^{ab} u^b / w^a mod pi)^{(q-1)/2} over E with odd residue
// characteristic, for rational arguments.
int tame_symbol(const Rat& a, const Rat& b, const LocalField& E) {
  const Integer& p = E.base().prime();
  Rat ua = a, ub = b;
  const int ka = strip_prime(ua, p);
  const int kb = strip_prime(ub, p);
  Integer ra = residue_mod(ua, p), rb = residue_mod(ub, p);
  if (E.e() == 2) {
    // pi^2 = g with g = p*t, so p = pi^2 / t and p^k u = pi^{2k} (u t^{-k}).
    const SquareClass& g = *E.uniformizer_square();
    const Rat t = Rat(g.value()) / Rat(p);
    const Integer rt = residue_mod(t, p);
    Integer tinv;
    mpz_invert(tinv.get_mpz_t(), rt.get_mpz_t(), p.get_mpz_t());
    Integer fa, fb;
    mpz_powm_ui(fa.get_mpz_t(), tinv.get_mpz_t(), static_cast<unsigned long>(std::abs(ka)),
                p.get_mpz_t());
    mpz_powm_ui(fb.get_mpz_t(), tinv.get_mpz_t(), static_cast<unsigned long>(std::abs(kb)),
                p.get_mpz_t());
    if (ka < 0) mpz_invert(fa.get_mpz_t(), fa.get_mpz_t(), p.get_mpz_t());
    if (kb < 0) mpz_invert(fb.get_mpz_t(), fb.get_mpz_t(), p.get_mpz_t());
    ra = (ra * fa) % p;
    rb = (rb * fb) % p;
  }
  const long alpha = static_cast<long>(E.e()) * ka;
  const long beta = static_cast<long>(E.e()) * kb;
  Integer x, y;
  const Integer ebeta(beta), malpha(-alpha);
  mpz_powm(x.get_mpz_t(), ra.get_mpz_t(), ebeta.get_mpz_t(), p.get_mpz_t());
  mpz_powm(y.get_mpz_t(), rb.get_mpz_t(), malpha.get_mpz_t(), p.get_mpz_t());
  Integer r = (x * y) % p;
  if ((alpha * beta) % 2 != 0) r = p - r;
  // x^{(q-1)/2} for x in F_p equals legendre(x)^f since (q-1)/(p-1) = f mod 2.
  const int leg = legendre(r, p);
  return (E.f() % 2 == 1) ? leg : 1;
}

int dyadic_search_symbol(QvCode a, QvCode b, const LocalField& E) {
  const auto& gens = E.generator_codes();
  if (gens.empty()) return dyadic::ternary_isotropic(0, a, b) ? 1 : -1;
  if (gens.size() == 1) return dyadic::ternary_isotropic(gens[0], a, b) ? 1 : -1;
  // Isotropy over any quadratic subfield persists in E.
  for (QvCode sub : {gens[0], gens[1], static_cast<QvCode>(gens[0] ^ gens[1])})
    if (dyadic::ternary_isotropic(sub, a, b)) return 1;
  throw std::logic_error("dyadic search: ternary form anisotropic over every quadratic subfield");
}

Rat signed_det(int dim, const Integer& disc_rep) {
  const long pairs = static_cast<long>(dim) * (dim - 1) / 2;
  return (pairs % 2 == 0) ? Rat(disc_rep) : Rat(-disc_rep);
}

}  // namespace

Place Place::finite(Integer p) {
  if (!is_prime(p)) throw DomainError("place: " + p.get_str() + " is not prime");
  return Place(std::move(p));
}

int qv_rank(const Place& v) {
  if (v.is_real()) return 1;
  return v.is_dyadic() ? 3 : 2;
}

QvCode qv_class_code(const Rat& a, const Place& v) {
  if (a == 0) throw DomainError("square class of zero is undefined");
  if (v.is_real()) return a < 0 ? 1 : 0;
  Rat u = a;
  const int k = strip_prime(u, v.prime());
  QvCode code = (k % 2 != 0) ? 1 : 0;
  if (v.is_dyadic()) {
    const Integer r = residue_mod(u, Integer(8));
    if (r % 4 == 3) code |= 2;
    if (r == 3 || r == 5) code |= 4;
  } else {
    if (legendre(residue_mod(u, v.prime()), v.prime()) == -1) code |= 2;
  }
  return code;
}

QvCode qv_class_code(const SquareClass& a, const Place& v) {
  return qv_class_code(Rat(a.value()), v);
}

Integer qv_class_rep(QvCode code, const Place& v) {
  if (v.is_real()) return (code & 1) ? Integer(-1) : Integer(1);
  if (v.is_dyadic()) {
    Integer r = 1;
    if (code & 2) r *= -1;
    if (code & 4) r *= 5;
    if (code & 1) r *= 2;
    return r;
  }
  Integer r = 1;
  if (code & 2) r *= smallest_nonresidue(v.prime());
  if (code & 1) r *= v.prime();
  return r;
}

LocalField LocalField::base_field(const Place& v) {
  LocalField E;
  E.base_ = v;
  return E;
}

LocalField LocalField::adjoin(const Place& v, std::span<const SquareClass> gens) {
  LocalField E = base_field(v);
  for (const auto& g : gens) {
    const QvCode c = qv_class_code(g, v);
    if (contains(E.kernel_, c)) continue;
    E.gens_.push_back(g);
    E.gen_codes_.push_back(c);
    E.kernel_ = span_of(E.gen_codes_);
  }
  const int degree = static_cast<int>(E.kernel_.size());
  if (v.is_real()) {
    E.e_ = degree;
    E.f_ = 1;
    return E;
  }
  const QvCode unramified = v.is_dyadic() ? 4 : 2;
  E.f_ = contains(E.kernel_, unramified) ? 2 : 1;
  E.e_ = degree / E.f_;
  if (!v.is_dyadic() && E.e_ == 2) {
    // Pick an adjoined class of odd valuation: g1, g2 or g1*g2.
    std::vector<SquareClass> cands = E.gens_;
    if (E.gens_.size() == 2) cands.push_back(E.gens_[0] * E.gens_[1]);
    for (const auto& c : cands)
      if (qv_class_code(c, v) & 1) {
        E.uniformizer_sq_ = c;
        break;
      }
  }
  return E;
}

std::string LocalField::to_string() const {
  std::string base = base_.is_real() ? "R" : "Q_" + base_.prime().get_str();
  if (is_complex()) return "C";
  if (gens_.empty()) return base;
  std::string s = base + "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += "sqrt " + gens_[i].to_string();
  }
  return s + ")";
}

LocalSquareClass local_square_class(const Rat& a, const LocalField& E) {
  const QvCode c = qv_class_code(a, E.base());
  QvCode best = c;
  for (QvCode k : E.kernel()) best = std::min<QvCode>(best, static_cast<QvCode>(c ^ k));
  return LocalSquareClass{best, qv_class_rep(best, E.base())};
}

LocalSquareClass local_square_class(const SquareClass& a, const LocalField& E) {
  return local_square_class(Rat(a.value()), E);
}

int hilbert_symbol(const Rat& a, const Rat& b, const LocalField& E, SymbolRoute route) {
  if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
  const Place& v = E.base();
  if (route == SymbolRoute::reciprocity) {
    const int base = qv_symbol_closed(qv_class_code(a, v), qv_class_code(b, v), v);
    return (E.degree() % 2 == 0) ? 1 : base;
  }
  if (v.is_real()) {
    if (E.is_complex()) return 1;
    return (a < 0 && b < 0) ? -1 : 1;
  }
  if (v.is_dyadic()) return dyadic_search_symbol(qv_class_code(a, v), qv_class_code(b, v), E);
  return tame_symbol(a, b, E);
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const LocalField& E,
                   SymbolRoute route) {
  return hilbert_symbol(Rat(a.value()), Rat(b.value()), E, route);
}

LocalFormClass local_form_class(std::span<const SquareClass> entries, const LocalField& E,
                                SymbolRoute route) {
  LocalFormClass c;
  c.dim = static_cast<int>(entries.size());
  SquareClass det;
  int hasse = 1;
  int negatives = 0;
  for (const auto& a : entries) {
    // prod_{i<j} (a_i, a_j) = prod_j (a_1...a_{j-1}, a_j)
    if (!det.is_one()) hasse *= hilbert_symbol(det, a, E, route);
    det = det * a;
    if (a.sign() < 0) ++negatives;
  }
  const long pairs = static_cast<long>(c.dim) * (c.dim - 1) / 2;
  const SquareClass disc = (pairs % 2 == 0) ? det : -det;
  c.disc = local_square_class(disc, E);
  c.hasse = hasse;
  if (E.is_real_field()) c.signature = c.dim - 2 * negatives;
  return c;
}

int split_hasse(int dim, const LocalField& E, SymbolRoute route) {
  const long m = dim / 2;
  if ((m * (m - 1) / 2) % 2 == 0) return 1;
  return hilbert_symbol(Rat(-1), Rat(-1), E, route);
}

int local_aniso_dim(const LocalFormClass& c, const LocalField& E, SymbolRoute route) {
  const int n = c.dim;
  if (n < 0) throw DomainError("local class: negative dimension");
  if (c.hasse != 1 && c.hasse != -1) throw DomainError("local class: hasse must be +-1");

  if (E.is_complex()) {
    if (!c.disc.is_trivial() || c.hasse != 1)
      throw DomainError("local class: inconsistent invariants over C");
    return n % 2;
  }
  if (E.is_real_field()) {
    if (!c.signature) throw DomainError("local class: real place requires a signature");
    const int s = *c.signature;
    if (std::abs(s) > n || (n - s) % 2 != 0)
      throw DomainError("local class: signature inconsistent with dimension");
    const long neg = (n - s) / 2;
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const int det_sign = (neg % 2 == 0) ? 1 : -1;
    const int disc_sign = (pairs % 2 == 0) ? det_sign : -det_sign;
    const int hasse = ((neg * (neg - 1) / 2) % 2 == 0) ? 1 : -1;
    if ((disc_sign < 0) != (c.disc.code == 1) || hasse != c.hasse)
      throw DomainError("local class: real invariants inconsistent with signature");
    return std::abs(s);
  }

  Rat det = signed_det(n, c.disc.rep);
  auto square = [&](const Rat& x) { return local_square_class(x, E).is_trivial(); };
  if (n == 0 && (!c.disc.is_trivial() || c.hasse != 1))
    throw DomainError("local class: nontrivial invariants in dimension 0");
  if (n == 1 && c.hasse != 1) throw DomainError("local class: hasse of a line must be 1");
  if (n == 2 && square(-det) && c.hasse != 1)
    throw DomainError("local class: hyperbolic plane with nontrivial hasse");

  const int minus_one_minus_one = hilbert_symbol(Rat(-1), Rat(-1), E, route);
  auto isotropic = [&](int dim, const Rat& d, int eps) {
    switch (dim) {
      case 0:
      case 1:
        return false;
      case 2:
        return square(-d);
      case 3:
        return eps == hilbert_symbol(Rat(-1), -d, E, route);
      case 4:
        return !square(d) || eps == minus_one_minus_one;
      default:
        return true;
    }
  };
  int dim = n;
  int eps = c.hasse;
  while (isotropic(dim, det, eps)) {
    // phi = phi' + H: det' = -det, eps' = eps * (det', -1)
    det = -det;
    eps *= hilbert_symbol(det, Rat(-1), E, route);
    dim -= 2;
  }
  return dim;
}

bool dyadic_square_test(const Rat& a, const LocalField& E) {
  if (!E.base().is_dyadic()) throw DomainError("dyadic_square_test: residue characteristic is not 2");
  const auto& gens = E.generator_codes();
  if (gens.empty()) return dyadic::is_square(a, 0);
  if (gens.size() == 1) return dyadic::is_square(a, gens[0]);
  // E = E1(sqrt g2): a in E1 is a square in E iff a or a*g2 is a square in E1.
  const Rat g2 = Rat(E.generators()[1].value());
  return dyadic::is_square(a, gens[0]) || dyadic::is_square(a * g2, gens[0]);
}

}  // namespace qfcert
