#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qfcert/extensions.hpp"
#include "qfcert/involutions.hpp"

namespace qfcert {

/// Limits on the square-free candidates d tried by the tower searches.
struct SearchBound {
  Integer max_abs = 1000000;
  int max_prime_factors = 4;

  /// Default bound, with max_abs overridden by QFCERT_SEARCH_BOUND if set.
  static SearchBound from_env();
};

/// Candidates d != 1 in search order. Stage 1 uses products of primes from
/// `support` ordered by (|d|, positive first); stage 2 walks |d| upward over
/// square-free numbers with a prime outside `support`.
class CandidateStream {
 public:
  CandidateStream(const std::set<Integer>& support, SearchBound bound);
  std::optional<SquareClass> next();
  /// 1 while drawing from support primes, 2 afterwards.
  int stage() const { return stage_; }

 private:
  std::set<Integer> support_;
  SearchBound bound_;
  std::vector<SquareClass> stage1_;
  std::size_t pos1_ = 0;
  int stage_ = 1;
  Integer n_ = 1;
  bool negative_pending_ = false;
};

/// A quadratic d with witt_index_over(phi, Q(sqrt d)) > witt_index(phi) and
/// a a norm from Q(sqrt d). PreconditionError unless a in G(phi) and phi is
/// not hyperbolic; nullopt when the bound is exhausted.
std::optional<SquareClass> lemma_beta_search(const QForm& phi, const Rat& a,
                                             const SearchBound& bound = SearchBound::from_env());

/// phi is hyperbolic over `tower` and multiplier * square_adjustment lies in
/// Q^x^2 N(tower^x). `multiplier` is square-free; the input c equals
/// multiplier * square_adjustment.
struct HypCertificate {
  SquareClass multiplier;
  ExtensionTower tower;
  Rat square_adjustment = 1;
  std::vector<LocalEvidence> evidence;
};

struct NotFound {
  SearchBound bound;
  /// "quadratic" or "biquadratic": the step whose search ran out.
  std::string step;
};

using CertificateResult = std::variant<HypCertificate, NotFound>;

/// Trivial, quadratic or biquadratic M with phi_M hyperbolic and c a norm
/// from M up to squares. Same preconditions as lemma_beta_search, except that
/// hyperbolic phi yields the degree-1 certificate.
CertificateResult find_hyperbolizing_tower(const QForm& phi, const Rat& c,
                                           const SearchBound& bound = SearchBound::from_env());

/// Checks pi is a 2-fold Pfister form, psi has dimension 6, pi (x) psi is in I^4
/// and c is in its G, then searches. PreconditionError on a failed check.
CertificateResult lemma24_certificate(const QForm& pi, const QForm& psi, const Rat& c,
                                      const SearchBound& bound = SearchBound::from_env());

/// Recomputes both conclusions of a certificate with the reciprocity symbol route.
bool verify_certificate(const QForm& phi, const HypCertificate& cert);

struct PfisterDecomposition {
  SquareClass scale4;
  std::vector<SquareClass> slots4;
  SquareClass scale3;
  std::vector<SquareClass> slots3;
  /// Witt class of the reassembled sum equals that of <<a,b>> (x) phi4.
  bool verified = false;

  QForm reassemble() const;
};

/// <a1,a2,a3,a4> (x) <<a,b>> ~ a1<<-a1a3,-a1a2,a,b>> + a4<<a1a2a3a4,a,b>>.
PfisterDecomposition thm4_decompose(const QForm& phi4, const QuaternionAlg& Q);

struct MultiplierResult {
  Rat c;
  /// "certificate", "not-in-G" or "not-found-within-bounds".
  std::string status;
  std::optional<HypCertificate> certificate;
  std::optional<NotFound> not_found;
  bool verified = false;
};

struct PipelineReport {
  QForm phi;
  QuaternionAlg q;
  int degree = 0;
  int index = 0;
  Discriminant delta;
  QForm psi;
  bool psi_in_I4 = false;
  /// Name of the failing hypothesis check, if any; later steps are skipped.
  std::optional<std::string> halted;
  std::vector<MultiplierResult> results;
};

PipelineReport thm6_pipeline(const QForm& phi6, const QuaternionAlg& Q,
                             const std::vector<Rat>& multipliers,
                             const SearchBound& bound = SearchBound::from_env());

/// For phi = pi (x) psi: the anisotropic dimension of phi over M is a multiple
/// of dim pi with quotient of the same parity as dim psi.
bool prop_index_check(const QForm& pi, const QForm& psi, const ExtensionTower& M);

/// Distinct square-free c in G(phi), drawn from values represented by the
/// binary subforms <phi_i, phi_j> at small heights. Deterministic in `seed`.
std::vector<Rat> sample_multipliers(const QForm& phi, int count, std::uint64_t seed);

}  // namespace qfcert
