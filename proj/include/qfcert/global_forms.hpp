#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qfcert/core_arith.hpp"
#include "qfcert/local.hpp"

namespace qfcert {

/// A diagonal quadratic form over Q with square-free entries. The empty form
/// is the zero element of the Witt ring and counts as hyperbolic.
class QForm {
 public:
  QForm() = default;
  explicit QForm(std::vector<SquareClass> entries) : entries_(std::move(entries)) {}
  static QForm diag(std::initializer_list<long> entries);
  static QForm from_rationals(std::span<const Rat> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const std::vector<SquareClass>& entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const QForm& a, const QForm& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<SquareClass> entries_;
};

QForm hyperbolic_plane();

/// Places at which invariants of the form can be nontrivial: real, 2, and
/// every prime dividing an entry.
std::set<Place> relevant_places(const QForm& phi);

SquareClass disc(const QForm& phi);
int hasse_invariant(const QForm& phi, const Place& v,
                    SymbolRoute route = SymbolRoute::residue_search);
int signature(const QForm& phi);

bool is_isotropic(const QForm& phi, SymbolRoute route = SymbolRoute::residue_search);
/// For an anisotropic form of dimension >= 1, a place where it stays anisotropic.
std::optional<Place> isotropy_obstruction(const QForm& phi,
                                          SymbolRoute route = SymbolRoute::residue_search);

/// Complete invariant of a Witt class over Q. The Hasse data is normalized to
/// the representative phi + mH of dimension 0 or 1 mod 8, which is unchanged by
/// adding hyperbolic planes.
struct WittClassQ {
  int dim_parity = 0;
  SquareClass disc;
  std::set<Place> hasse_minus_places;
  int signature = 0;

  friend bool operator==(const WittClassQ& a, const WittClassQ& b) {
    return a.dim_parity == b.dim_parity && a.disc == b.disc &&
           a.hasse_minus_places == b.hasse_minus_places && a.signature == b.signature;
  }
};

WittClassQ witt_class(const QForm& phi, SymbolRoute route = SymbolRoute::residue_search);

struct WittDecomposition {
  int witt_index = 0;
  int aniso_dim = 0;
  WittClassQ aniso_class;
};

WittDecomposition witt_decompose(const QForm& phi,
                                 SymbolRoute route = SymbolRoute::residue_search);
bool is_hyperbolic(const QForm& phi, SymbolRoute route = SymbolRoute::residue_search);
bool is_isometric(const QForm& phi, const QForm& psi);
bool witt_equivalent(const QForm& phi, const QForm& psi);

/// <<a_1,...,a_n>> = <1,-a_1> (x) ... (x) <1,-a_n>, entry i = prod_{bit j of i} (-a_j).
QForm pfister(std::span<const SquareClass> slots);
QForm pfister(std::initializer_list<long> slots);
/// Entries phi_i * psi_j, with the index of phi varying fastest.
QForm tensor(const QForm& phi, const QForm& psi);
QForm orth_sum(const QForm& phi, const QForm& psi);
QForm scale(const SquareClass& c, const QForm& phi);

bool represents(const QForm& phi, const Rat& c, SymbolRoute route = SymbolRoute::residue_search);

/// c in G(phi), decided by hyperbolicity of <<c>> (x) phi.
bool in_G(const QForm& phi, const Rat& c);
/// c in G(phi), decided by the isometry c*phi = phi.
bool in_G_by_isometry(const QForm& phi, const Rat& c);

/// Membership of the Witt class in I^n Q for n = 1..4.
bool in_In(const QForm& phi, int n);

}  // namespace qfcert
