#include "qfcert/global_forms.hpp"

#include <algorithm>

#include "qfcert/consistency.hpp"

namespace qfcert {

namespace {

SquareClass det_of(const QForm& phi) {
  SquareClass d;
  for (const auto& a : phi.entries()) d = d * a;
  return d;
}

bool odd_pairs(long n) { return ((n * (n - 1) / 2) % 2) != 0; }

int local_aniso_at(const QForm& phi, const Place& v, SymbolRoute route) {
  const LocalField E = LocalField::base_field(v);
  return local_aniso_dim(local_form_class(phi.entries(), E, route), E, route);
}

}  // namespace

QForm QForm::diag(std::initializer_list<long> entries) {
  std::vector<SquareClass> out;
  for (long a : entries) out.push_back(SquareClass::from_int(a));
  return QForm(std::move(out));
}

QForm QForm::from_rationals(std::span<const Rat> entries) {
  std::vector<SquareClass> out;
  for (const auto& a : entries) out.push_back(squarefree_rep(a));
  return QForm(std::move(out));
}

std::string QForm::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].to_string();
  }
  return s + ">";
}

QForm hyperbolic_plane() { return QForm::diag({1, -1}); }

std::set<Place> relevant_places(const QForm& phi) {
  std::set<Place> out{Place::real()};
  for (const auto& p : prime_support(phi.entries())) out.insert(Place::finite(p));
  return out;
}

SquareClass disc(const QForm& phi) {
  const SquareClass d = det_of(phi);
  return odd_pairs(phi.dim()) ? -d : d;
}

int hasse_invariant(const QForm& phi, const Place& v, SymbolRoute route) {
  return local_form_class(phi.entries(), LocalField::base_field(v), route).hasse;
}

int signature(const QForm& phi) {
  int s = 0;
  for (const auto& a : phi.entries()) s += a.sign();
  return s;
}

WittDecomposition witt_decompose(const QForm& phi, SymbolRoute route) {
  int aniso = 0;
  for (const auto& v : relevant_places(phi)) aniso = std::max(aniso, local_aniso_at(phi, v, route));
  WittDecomposition out;
  out.aniso_dim = aniso;
  out.witt_index = (phi.dim() - aniso) / 2;
  out.aniso_class = witt_class(phi, route);
  return out;
}

bool is_isotropic(const QForm& phi, SymbolRoute route) {
  if (phi.dim() < 2) return false;
  return witt_decompose(phi, route).aniso_dim < phi.dim();
}

std::optional<Place> isotropy_obstruction(const QForm& phi, SymbolRoute route) {
  if (phi.dim() == 0) return std::nullopt;
  for (const auto& v : relevant_places(phi))
    if (local_aniso_at(phi, v, route) == phi.dim()) return v;
  return std::nullopt;
}

WittClassQ witt_class(const QForm& phi, SymbolRoute route) {
  WittClassQ w;
  w.dim_parity = phi.dim() % 2;
  w.disc = disc(phi);
  w.signature = signature(phi);
  const int m = (((w.dim_parity - phi.dim()) % 8 + 8) % 8) / 2;
  for (const auto& v : relevant_places(phi)) {
    const LocalField E = LocalField::base_field(v);
    int eps = local_form_class(phi.entries(), E, route).hasse;
    SquareClass det = det_of(phi);
    for (int i = 0; i < m; ++i) {
      eps *= hilbert_symbol(det, SquareClass::from_int(-1), E, route);
      det = -det;
    }
    if (eps < 0) w.hasse_minus_places.insert(v);
  }
  return w;
}

bool is_hyperbolic(const QForm& phi, SymbolRoute route) {
  return phi.dim() % 2 == 0 && witt_decompose(phi, route).aniso_dim == 0;
}

bool is_isometric(const QForm& phi, const QForm& psi) {
  if (phi.dim() != psi.dim() || disc(phi) != disc(psi) || signature(phi) != signature(psi))
    return false;
  std::set<Place> places = relevant_places(phi);
  places.merge(relevant_places(psi));
  for (const auto& v : places)
    if (hasse_invariant(phi, v) != hasse_invariant(psi, v)) return false;
  return true;
}

bool witt_equivalent(const QForm& phi, const QForm& psi) { return witt_class(phi) == witt_class(psi); }

QForm pfister(std::span<const SquareClass> slots) {
  if (slots.size() > 4) throw DomainError("pfister: at most 4 slots are supported");
  const std::size_t n = std::size_t{1} << slots.size();
  std::vector<SquareClass> entries(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (i & (std::size_t{1} << j)) entries[i] = entries[i] * -slots[j];
  return QForm(std::move(entries));
}

QForm pfister(std::initializer_list<long> slots) {
  std::vector<SquareClass> s;
  for (long a : slots) s.push_back(SquareClass::from_int(a));
  return pfister(s);
}

QForm tensor(const QForm& phi, const QForm& psi) {
  std::vector<SquareClass> out;
  out.reserve(phi.entries().size() * psi.entries().size());
  for (const auto& b : psi.entries())
    for (const auto& a : phi.entries()) out.push_back(a * b);
  return QForm(std::move(out));
}

QForm orth_sum(const QForm& phi, const QForm& psi) {
  std::vector<SquareClass> out = phi.entries();
  out.insert(out.end(), psi.entries().begin(), psi.entries().end());
  return QForm(std::move(out));
}

QForm scale(const SquareClass& c, const QForm& phi) {
  std::vector<SquareClass> out;
  out.reserve(phi.entries().size());
  for (const auto& a : phi.entries()) out.push_back(c * a);
  return QForm(std::move(out));
}

bool represents(const QForm& phi, const Rat& c, SymbolRoute route) {
  if (c == 0) throw DomainError("represents: c must be nonzero");
  if (phi.dim() == 0) return false;
  return is_isotropic(orth_sum(phi, QForm({-squarefree_rep(c)})), route);
}

bool in_G(const QForm& phi, const Rat& c) {
  if (c == 0) throw DomainError("in_G: c must be nonzero");
  const SquareClass cls = squarefree_rep(c);
  return is_hyperbolic(tensor(pfister(std::span<const SquareClass>(&cls, 1)), phi));
}

bool in_G_by_isometry(const QForm& phi, const Rat& c) {
  if (c == 0) throw DomainError("in_G: c must be nonzero");
  return is_isometric(scale(squarefree_rep(c), phi), phi);
}

bool in_In(const QForm& phi, int n) {
  if (n < 1 || n > 4) throw DomainError("in_In: n must be between 1 and 4");
  bool member = phi.dim() % 2 == 0;
  if (member && n >= 2) member = disc(phi).is_one();
  if (member && n >= 3) {
    const int sig = signature(phi);
    member = sig % (n == 3 ? 8 : 16) == 0;
    for (const auto& v : relevant_places(phi)) {
      if (!member) break;
      if (v.is_real()) continue;
      member = hasse_invariant(phi, v) == split_hasse(phi.dim(), LocalField::base_field(v));
    }
  }
  if (member && n == 4) consistency::record_i4_aniso_dim(witt_decompose(phi).aniso_dim);
  return member;
}

}  // namespace qfcert
