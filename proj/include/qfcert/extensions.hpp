#pragma once

#include <set>
#include <string>
#include <vector>

#include "qfcert/global_forms.hpp"

namespace qfcert {

/// M = Q(sqrt d1[, sqrt d2]) with independent non-square generators.
class ExtensionTower {
 public:
  ExtensionTower() = default;

  const std::vector<SquareClass>& generators() const { return gens_; }
  int degree() const { return 1 << gens_.size(); }
  /// "Q", "Q(sqrt 5)", "Q(sqrt 5, sqrt -2)".
  std::string to_string() const;

  friend bool operator==(const ExtensionTower& a, const ExtensionTower& b) {
    return a.gens_ == b.gens_;
  }

 private:
  friend struct TowerBuild make_tower(std::span<const SquareClass> ds);
  std::vector<SquareClass> gens_;
};

struct TowerBuild {
  ExtensionTower tower;
  bool downgraded = false;
};

/// Drops square and dependent generators (setting `downgraded`). More than two
/// independent generators is a DomainError.
TowerBuild make_tower(std::span<const SquareClass> ds);
TowerBuild make_tower(std::initializer_list<long> ds);

/// Whether s lies in the subgroup of Q^x/Q^x^2 generated by the tower.
bool is_square_in(const SquareClass& s, const ExtensionTower& M);

struct PlaceFiber {
  Place base;
  LocalField completion;
  /// Number of completions of M above `base`, all isomorphic to `completion`.
  int multiplicity = 1;
};

PlaceFiber places_over(const ExtensionTower& M, const Place& v);

struct LocalEvidence {
  Place place;
  LocalField completion;
  int multiplicity = 1;
  LocalFormClass cls;
  int aniso_dim = 0;
};

struct TowerAnalysis {
  std::vector<LocalEvidence> evidence;
  /// Lower bound forced by places outside the checked set: an even-dimensional
  /// form whose discriminant is not a square in M is anisotropic in dimension
  /// 2 at infinitely many inert primes.
  int kummer_bound = 0;
  int aniso_dim = 0;
};

/// Base places examined for phi over M: real, 2 and every prime dividing an
/// entry or a generator.
std::set<Place> relevant_places(const QForm& phi, const ExtensionTower& M);

TowerAnalysis analyze_over(const QForm& phi, const ExtensionTower& M,
                           SymbolRoute route = SymbolRoute::residue_search);
bool is_hyperbolic_over(const QForm& phi, const ExtensionTower& M,
                        SymbolRoute route = SymbolRoute::residue_search);
int witt_index_over(const QForm& phi, const ExtensionTower& M,
                    SymbolRoute route = SymbolRoute::residue_search);

/// c in N(Q(sqrt d)^x), i.e. <1,-d,-c> isotropic. d = 1 is a DomainError.
bool norm_member(const Rat& c, const SquareClass& d,
                 SymbolRoute route = SymbolRoute::residue_search);
/// c in Q^x^2 N(M^x); for biquadratic M the joint membership in both
/// quadratic norm groups.
bool norm_member_tower(const Rat& c, const ExtensionTower& M,
                       SymbolRoute route = SymbolRoute::residue_search);

}  // namespace qfcert
