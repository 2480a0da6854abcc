#include "qfcert/extensions.hpp"

#include <algorithm>

namespace qfcert {

namespace {

// Span of the generators inside Q^x/Q^x^2 (including 1).
std::vector<SquareClass> span_of(const std::vector<SquareClass>& gens) {
  std::vector<SquareClass> out{SquareClass()};
  for (const auto& g : gens) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * g);
  }
  return out;
}

}  // namespace

std::string ExtensionTower::to_string() const {
  if (gens_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += "sqrt " + gens_[i].to_string();
  }
  return s + ")";
}

TowerBuild make_tower(std::span<const SquareClass> ds) {
  TowerBuild out;
  std::vector<SquareClass> gens;
  for (const auto& d : ds) {
    const auto span = span_of(gens);
    if (std::find(span.begin(), span.end(), d) != span.end()) {
      out.downgraded = true;
      continue;
    }
    gens.push_back(d);
  }
  if (gens.size() > 2) throw DomainError("make_tower: at most two independent generators");
  out.tower.gens_ = std::move(gens);
  return out;
}

TowerBuild make_tower(std::initializer_list<long> ds) {
  std::vector<SquareClass> v;
  for (long d : ds) {
    if (d == 0) throw DomainError("make_tower: zero generator");
    v.push_back(SquareClass::from_int(d));
  }
  return make_tower(v);
}

bool is_square_in(const SquareClass& s, const ExtensionTower& M) {
  const auto span = span_of(M.generators());
  return std::find(span.begin(), span.end(), s) != span.end();
}

PlaceFiber places_over(const ExtensionTower& M, const Place& v) {
  PlaceFiber f{v, LocalField::adjoin(v, M.generators()), 1};
  f.multiplicity = M.degree() / f.completion.degree();
  return f;
}

std::set<Place> relevant_places(const QForm& phi, const ExtensionTower& M) {
  std::set<Place> out = relevant_places(phi);
  for (const auto& g : M.generators())
    for (const auto& p : g.primes()) out.insert(Place::finite(p));
  return out;
}

TowerAnalysis analyze_over(const QForm& phi, const ExtensionTower& M, SymbolRoute route) {
  TowerAnalysis a;
  for (const auto& v : relevant_places(phi, M)) {
    const PlaceFiber f = places_over(M, v);
    LocalEvidence ev{v, f.completion, f.multiplicity, {}, 0};
    ev.cls = local_form_class(phi.entries(), f.completion, route);
    ev.aniso_dim = local_aniso_dim(ev.cls, f.completion, route);
    a.aniso_dim = std::max(a.aniso_dim, ev.aniso_dim);
    a.evidence.push_back(std::move(ev));
  }
  if (phi.dim() % 2 == 0 && !is_square_in(disc(phi), M)) a.kummer_bound = 2;
  a.aniso_dim = std::max(a.aniso_dim, a.kummer_bound);
  return a;
}

bool is_hyperbolic_over(const QForm& phi, const ExtensionTower& M, SymbolRoute route) {
  return phi.dim() % 2 == 0 && analyze_over(phi, M, route).aniso_dim == 0;
}

int witt_index_over(const QForm& phi, const ExtensionTower& M, SymbolRoute route) {
  return (phi.dim() - analyze_over(phi, M, route).aniso_dim) / 2;
}

bool norm_member(const Rat& c, const SquareClass& d, SymbolRoute route) {
  if (c == 0) throw DomainError("norm_member: c must be nonzero");
  if (d.is_one()) throw DomainError("norm_member: trivial extension");
  return is_isotropic(QForm({SquareClass(), -d, -squarefree_rep(c)}), route);
}

bool norm_member_tower(const Rat& c, const ExtensionTower& M, SymbolRoute route) {
  if (c == 0) throw DomainError("norm_member_tower: c must be nonzero");
  for (const auto& d : M.generators())
    if (!norm_member(c, d, route)) return false;
  return true;
}

}  // namespace qfcert
