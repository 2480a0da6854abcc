#include "qfcert/similitude.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "qfcert/consistency.hpp"

namespace qfcert {

SearchBound SearchBound::from_env() {
  SearchBound b;
  if (const char* s = std::getenv("QFCERT_SEARCH_BOUND")) {
    Integer v;
    if (v.set_str(s, 10) == 0 && v > 0) b.max_abs = v;
  }
  return b;
}

CandidateStream::CandidateStream(const std::set<Integer>& support, SearchBound bound)
    : support_(support), bound_(std::move(bound)) {
  const std::vector<Integer> primes(support.begin(), support.end());
  // Subsets grow by appending larger primes only, so each appears once.
  std::vector<std::pair<std::vector<Integer>, Integer>> frontier{{{}, 1}};
  std::vector<std::pair<std::vector<Integer>, Integer>> all = frontier;
  for (int size = 1; size <= bound_.max_prime_factors; ++size) {
    std::vector<std::pair<std::vector<Integer>, Integer>> next;
    for (const auto& [ps, prod] : frontier) {
      for (const auto& p : primes) {
        if (!ps.empty() && p <= ps.back()) continue;
        const Integer q = prod * p;
        if (q > bound_.max_abs) continue;
        auto grown = ps;
        grown.push_back(p);
        next.emplace_back(std::move(grown), q);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& [ps, prod] : all) {
    if (!ps.empty()) stage1_.push_back(SquareClass::from_primes(1, ps));
    stage1_.push_back(SquareClass::from_primes(-1, ps));
  }
  std::sort(stage1_.begin(), stage1_.end(), [](const SquareClass& x, const SquareClass& y) {
    const int c = mpz_cmpabs(x.value().get_mpz_t(), y.value().get_mpz_t());
    if (c != 0) return c < 0;
    return x.sign() > y.sign();
  });
}

std::optional<SquareClass> CandidateStream::next() {
  if (pos1_ < stage1_.size()) return stage1_[pos1_++];
  stage_ = 2;
  if (negative_pending_) {
    negative_pending_ = false;
    return -SquareClass::from_rational(Rat(n_));
  }
  while (n_ < bound_.max_abs) {
    ++n_;
    const auto fac = factor(n_);
    if (static_cast<int>(fac.size()) > bound_.max_prime_factors) continue;
    bool squarefree = true, fresh = false;
    for (const auto& [p, e] : fac) {
      if (e > 1) squarefree = false;
      if (!support_.count(p)) fresh = true;
    }
    if (!squarefree || !fresh) continue;
    negative_pending_ = true;
    return SquareClass::from_rational(Rat(n_));
  }
  return std::nullopt;
}

namespace {

std::set<Integer> support_of(const QForm& phi, std::initializer_list<SquareClass> extra) {
  std::vector<SquareClass> items = phi.entries();
  items.insert(items.end(), extra.begin(), extra.end());
  return prime_support(items);
}

void check_beta_hypotheses(const QForm& phi, const Rat& a) {
  if (a == 0) throw DomainError("multiplier must be nonzero");
  if (!in_G(phi, a)) throw PreconditionError("multiplier is not in G(phi)");
  if (is_hyperbolic(phi)) throw PreconditionError("form is already hyperbolic");
}

HypCertificate make_certificate(const QForm& phi, const SquareClass& c, const Rat& adjust,
                                const ExtensionTower& M) {
  return HypCertificate{c, M, adjust, analyze_over(phi, M).evidence};
}

}  // namespace

std::optional<SquareClass> lemma_beta_search(const QForm& phi, const Rat& a,
                                             const SearchBound& bound) {
  check_beta_hypotheses(phi, a);
  const SquareClass ac = squarefree_rep(a);
  const int index = witt_decompose(phi).witt_index;
  CandidateStream stream(support_of(phi, {ac}), bound);
  while (auto d = stream.next()) {
    if (!norm_member(Rat(ac.value()), *d)) continue;
    const SquareClass gen[] = {*d};
    if (witt_index_over(phi, make_tower(gen).tower) > index) return d;
  }
  return std::nullopt;
}

CertificateResult find_hyperbolizing_tower(const QForm& phi, const Rat& c,
                                           const SearchBound& bound) {
  if (c == 0) throw DomainError("multiplier must be nonzero");
  const SquareClass cs = squarefree_rep(c);
  const Rat adjust = c / Rat(cs.value());
  const bool in_i4 = in_In(phi, 4);

  if (is_hyperbolic(phi)) return make_certificate(phi, cs, adjust, ExtensionTower());

  const auto d = lemma_beta_search(phi, c, bound);
  if (!d) return NotFound{bound, "quadratic"};
  const SquareClass gen[] = {*d};
  const ExtensionTower L = make_tower(gen).tower;
  const TowerAnalysis over_l = analyze_over(phi, L);
  if (in_i4) consistency::record_i4_aniso_dim(over_l.aniso_dim);
  if (over_l.aniso_dim == 0 && phi.dim() % 2 == 0)
    return HypCertificate{cs, L, adjust, over_l.evidence};

  CandidateStream stream(support_of(phi, {cs, *d}), bound);
  while (auto d2 = stream.next()) {
    const SquareClass gens[] = {*d, *d2};
    const TowerBuild M = make_tower(gens);
    if (M.downgraded || !norm_member(Rat(cs.value()), *d2)) continue;
    const TowerAnalysis over_m = analyze_over(phi, M.tower);
    if (over_m.aniso_dim != 0) continue;
    if (in_i4) consistency::record_i4_aniso_dim(over_m.aniso_dim);
    return HypCertificate{cs, M.tower, adjust, over_m.evidence};
  }
  return NotFound{bound, "biquadratic"};
}

namespace {

bool is_two_fold_pfister(const QForm& pi) {
  return pi.dim() == 4 && disc(pi).is_one() && represents(pi, Rat(1));
}

}  // namespace

CertificateResult lemma24_certificate(const QForm& pi, const QForm& psi, const Rat& c,
                                      const SearchBound& bound) {
  if (c == 0) throw DomainError("multiplier must be nonzero");
  if (!is_two_fold_pfister(pi)) throw PreconditionError("pi is not a 2-fold Pfister form");
  if (psi.dim() != 6) throw PreconditionError("psi must have dimension 6");
  const QForm phi = tensor(pi, psi);
  if (!in_In(phi, 4)) throw PreconditionError("pi (x) psi is not in I^4");
  if (!in_G(phi, c)) throw PreconditionError("multiplier is not in G(pi (x) psi)");
  return find_hyperbolizing_tower(phi, c, bound);
}

bool verify_certificate(const QForm& phi, const HypCertificate& cert) {
  constexpr auto route = SymbolRoute::reciprocity;
  if (make_tower(cert.tower.generators()).downgraded) return false;
  const Rat& s = cert.square_adjustment;
  if (s <= 0 || !squarefree_rep(s).is_one()) return false;
  const bool ok = is_hyperbolic_over(phi, cert.tower, route) &&
                  norm_member_tower(Rat(cert.multiplier.value()), cert.tower, route);
  if (ok) consistency::record_certificate_in_g(in_G(phi, Rat(cert.multiplier.value())));
  return ok;
}

QForm PfisterDecomposition::reassemble() const {
  return orth_sum(scale(scale4, pfister(slots4)), scale(scale3, pfister(slots3)));
}

PfisterDecomposition thm4_decompose(const QForm& phi4, const QuaternionAlg& Q) {
  if (phi4.dim() != 4) throw DomainError("thm4_decompose: phi must have dimension 4");
  const auto& e = phi4.entries();
  PfisterDecomposition d;
  d.scale4 = e[0];
  d.slots4 = {-(e[0] * e[2]), -(e[0] * e[1]), Q.a, Q.b};
  d.scale3 = e[3];
  d.slots3 = {e[0] * e[1] * e[2] * e[3], Q.a, Q.b};
  d.verified = witt_equivalent(d.reassemble(), tensor(phi4, norm_form(Q)));
  return d;
}

PipelineReport thm6_pipeline(const QForm& phi6, const QuaternionAlg& Q,
                             const std::vector<Rat>& multipliers, const SearchBound& bound) {
  if (phi6.dim() != 6) throw DomainError("thm6_pipeline: phi must have dimension 6");
  PipelineReport r;
  r.phi = phi6;
  r.q = Q;
  const InvolutionAlgebra A{phi6, Q};
  const DegreeIndex di = degree_index(A);
  r.degree = di.degree;
  r.index = di.index;
  r.delta = involution_discriminant(A);
  r.psi = reduce_to_form(A);
  r.psi_in_I4 = in_In(r.psi, 4);
  if (!r.delta.trivial) {
    r.halted = "delta-nontrivial";
    return r;
  }
  if (!r.psi_in_I4) {
    r.halted = "psi-not-in-I4";
    return r;
  }
  const QForm pi = norm_form(Q);
  for (const auto& c : multipliers) {
    if (c == 0) throw DomainError("thm6_pipeline: zero multiplier");
    MultiplierResult m;
    m.c = c;
    if (!in_G(r.psi, c)) {
      m.status = "not-in-G";
    } else {
      auto res = lemma24_certificate(pi, phi6, c, bound);
      if (auto* cert = std::get_if<HypCertificate>(&res)) {
        m.status = "certificate";
        m.verified = verify_certificate(r.psi, *cert);
        m.certificate = std::move(*cert);
      } else {
        m.status = "not-found-within-bounds";
        m.not_found = std::get<NotFound>(res);
      }
    }
    r.results.push_back(std::move(m));
  }
  return r;
}

bool prop_index_check(const QForm& pi, const QForm& psi, const ExtensionTower& M) {
  const QForm phi = tensor(pi, psi);
  const int a = phi.dim() - 2 * witt_index_over(phi, M);
  return a % pi.dim() == 0 && (a / pi.dim() - psi.dim()) % 2 == 0;
}

std::vector<Rat> sample_multipliers(const QForm& phi, int count, std::uint64_t seed) {
  std::vector<Rat> out;
  if (phi.dim() == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, phi.dim() - 1);
  std::uniform_int_distribution<long> coord(0, 6);
  std::set<SquareClass> seen;
  for (int attempt = 0; attempt < 50 * count && static_cast<int>(out.size()) < count; ++attempt) {
    const auto& a = phi.entries()[pick(rng)];
    const auto& b = phi.entries()[pick(rng)];
    const long x = coord(rng), y = coord(rng);
    const Integer v = a.value() * x * x + b.value() * y * y;
    if (v == 0) continue;
    const Rat c(v);
    const SquareClass cls = squarefree_rep(c);
    if (seen.count(cls) || !in_G(phi, c)) continue;
    seen.insert(cls);
    out.push_back(c);
  }
  return out;
}

}  // namespace qfcert
