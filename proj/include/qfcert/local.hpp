#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfcert/core_arith.hpp"

namespace qfcert {

/// A place of Q: the real place or a prime.
class Place {
 public:
  static Place real() { return Place(Integer(0)); }
  static Place finite(Integer p);

  bool is_real() const { return prime_ == 0; }
  bool is_dyadic() const { return prime_ == 2; }
  const Integer& prime() const { return prime_; }
  std::string to_string() const { return is_real() ? "real" : prime_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  friend bool operator<(const Place& a, const Place& b) { return a.prime_ < b.prime_; }

 private:
  explicit Place(Integer p) : prime_(std::move(p)) {}
  Integer prime_;
};

/// Square class of Q_v^x as a vector over F_2.
///   real:   bit 0 = sign
///   p odd:  bit 0 = valuation parity, bit 1 = unit part is a non-residue
///   p = 2:  bit 0 = valuation parity, bit 1 = unit is 3 mod 4 (the -1 part),
///           bit 2 = unit is +-3 mod 8 (the 5 part)
using QvCode = std::uint8_t;

int qv_rank(const Place& v);
QvCode qv_class_code(const Rat& a, const Place& v);
QvCode qv_class_code(const SquareClass& a, const Place& v);
/// Small integer representative of a Q_v square class.
Integer qv_class_rep(QvCode code, const Place& v);

/// A completion of a multiquadratic field, described by invariants only:
/// the base place, the adjoined square classes that are locally independent,
/// ramification index e and residue degree f. At the real place e = 2 means C.
class LocalField {
 public:
  static LocalField base_field(const Place& v);
  /// Q_v(sqrt g : g in gens); generators that are locally dependent are dropped.
  static LocalField adjoin(const Place& v, std::span<const SquareClass> gens);

  const Place& base() const { return base_; }
  const std::vector<SquareClass>& generators() const { return gens_; }
  int e() const { return e_; }
  int f() const { return f_; }
  int degree() const { return e_ * f_; }
  bool is_complex() const { return base_.is_real() && degree() == 2; }
  bool is_real_field() const { return base_.is_real() && degree() == 1; }

  /// Codes of Q_v-classes that become squares in this field.
  const std::vector<QvCode>& kernel() const { return kernel_; }
  /// Locally independent generator codes (length log2 of the degree).
  const std::vector<QvCode>& generator_codes() const { return gen_codes_; }
  /// For ramified odd-residue fields: an adjoined class of odd valuation.
  const std::optional<SquareClass>& uniformizer_square() const { return uniformizer_sq_; }

  std::string to_string() const;

  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.base_ == b.base_ && a.kernel_ == b.kernel_;
  }

 private:
  Place base_ = Place::real();
  std::vector<SquareClass> gens_;
  std::vector<QvCode> gen_codes_;
  std::vector<QvCode> kernel_{0};
  int e_ = 1;
  int f_ = 1;
  std::optional<SquareClass> uniformizer_sq_;
};

/// Class of a rational in E^x / E^x^2, canonicalized to the smallest code of
/// its coset modulo the kernel.
struct LocalSquareClass {
  QvCode code = 0;
  Integer rep = 1;
  bool is_trivial() const { return code == 0; }
  friend bool operator==(const LocalSquareClass& a, const LocalSquareClass& b) {
    return a.code == b.code;
  }
};

LocalSquareClass local_square_class(const Rat& a, const LocalField& E);
LocalSquareClass local_square_class(const SquareClass& a, const LocalField& E);

/// Two independent evaluations of the Hilbert symbol.
///   residue_search: tame formula over E for odd residue characteristic (using
///     q = p^f and the uniformizer of E), exhaustive representability search in
///     the dyadic rings of integers.
///   reciprocity: closed formulas over Q_v combined with the restriction law
///     (a,b)_E = (a,b)_{Q_v}^[E:Q_v] for a, b in Q_v.
enum class SymbolRoute { residue_search, reciprocity };

int hilbert_symbol(const Rat& a, const Rat& b, const LocalField& E,
                   SymbolRoute route = SymbolRoute::residue_search);
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const LocalField& E,
                   SymbolRoute route = SymbolRoute::residue_search);

/// Local shadow of a form: dimension, signed discriminant, Hasse invariant
/// prod_{i<j} (a_i, a_j)_E, and the signature when E = R.
struct LocalFormClass {
  int dim = 0;
  LocalSquareClass disc;
  int hasse = 1;
  std::optional<int> signature;
};

LocalFormClass local_form_class(std::span<const SquareClass> entries, const LocalField& E,
                                SymbolRoute route = SymbolRoute::residue_search);

/// Hasse invariant of the split form (dim/2) x H over E.
int split_hasse(int dim, const LocalField& E, SymbolRoute route = SymbolRoute::residue_search);

/// Dimension of the anisotropic kernel of any form over E with these invariants.
int local_aniso_dim(const LocalFormClass& c, const LocalField& E,
                    SymbolRoute route = SymbolRoute::residue_search);

/// Whether a is a square in the dyadic field E, by residue search in its ring
/// of integers followed by Hensel's criterion.
bool dyadic_square_test(const Rat& a, const LocalField& E);

}  // namespace qfcert
