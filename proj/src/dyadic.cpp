#include "qfcert/dyadic.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace qfcert::dyadic {

namespace {

// Z_2[w] / 2^k with w^2 = t*w + n. Degree 1 means Z / 2^k.
struct Ring {
  int degree = 1;
  unsigned k = 5;
  std::uint32_t mask = 31;
  std::int64_t t = 0;
  std::int64_t n = 0;

  std::uint32_t size() const { return 1u << (k * static_cast<unsigned>(degree)); }
  std::uint32_t c0(std::uint32_t x) const { return x & mask; }
  std::uint32_t c1(std::uint32_t x) const { return degree == 2 ? (x >> k) & mask : 0; }
  std::uint32_t pack(std::int64_t a, std::int64_t b) const {
    const auto m = static_cast<std::int64_t>(mask);
    const auto lo = static_cast<std::uint32_t>(((a % (m + 1)) + (m + 1)) & m);
    if (degree == 1) return lo;
    const auto hi = static_cast<std::uint32_t>(((b % (m + 1)) + (m + 1)) & m);
    return lo | (hi << k);
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    const std::int64_t x0 = c0(x), x1 = c1(x), y0 = c0(y), y1 = c1(y);
    return pack(x0 * y0 + x1 * y1 * n, x0 * y1 + x1 * y0 + x1 * y1 * t);
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
    return pack(static_cast<std::int64_t>(c0(x)) - c0(y),
                static_cast<std::int64_t>(c1(x)) - c1(y));
  }
  std::uint32_t scale(std::int64_t s, std::uint32_t x) const {
    return pack(s * c0(x), s * c1(x));
  }
  bool is_unit(std::uint32_t x) const {
    const std::int64_t x0 = c0(x), x1 = c1(x);
    const std::int64_t norm = x0 * x0 + t * x0 * x1 - n * x1 * x1;
    return (norm & 1) != 0;
  }
};

std::int64_t small_rep(QvCode code) {
  return qv_class_rep(code, Place::finite(Integer(2))).get_si();
}

Ring make_ring(QvCode field, unsigned k) {
  Ring r;
  r.k = k;
  r.mask = (1u << k) - 1;
  if (field == 0) return r;
  r.degree = 2;
  const std::int64_t d = small_rep(field);
  if (((d % 4) + 4) % 4 == 1) {
    r.t = 1;
    r.n = (d - 1) / 4;
  } else {
    r.t = 0;
    r.n = d;
  }
  return r;
}

bool search_ternary(QvCode field, std::int64_t a, std::int64_t b) {
  const Ring R = make_ring(field, 5);
  const std::uint32_t N = R.size();
  std::vector<std::uint32_t> sq(N), A(N), B(N);
  std::vector<char> unit(N);
  std::vector<char> hitB(N, 0), hitA_nonunit(N, 0);
  for (std::uint32_t x = 0; x < N; ++x) {
    sq[x] = R.mul(x, x);
    unit[x] = R.is_unit(x);
    A[x] = R.scale(a, sq[x]);
    B[x] = R.scale(b, sq[x]);
    hitB[B[x]] = 1;
    if (!unit[x]) hitA_nonunit[A[x]] = 1;
  }
  const std::uint32_t one = R.pack(1, 0);
  const std::uint32_t a1 = R.pack(a, 0);
  const std::uint32_t b1 = R.pack(b, 0);
  // x a unit, scaled to 1: need b z^2 = 1 - a y^2.
  for (std::uint32_t y = 0; y < N; ++y)
    if (hitB[R.sub(one, A[y])]) return true;
  // x a non-unit, y = 1: b z^2 = x^2 - a.
  for (std::uint32_t x = 0; x < N; ++x)
    if (!unit[x] && hitB[R.sub(sq[x], a1)]) return true;
  // x, y non-units, z = 1: a y^2 = x^2 - b.
  for (std::uint32_t x = 0; x < N; ++x)
    if (!unit[x] && hitA_nonunit[R.sub(sq[x], b1)]) return true;
  return false;
}

using Table = std::array<std::array<std::array<bool, 8>, 8>, 8>;

const Table& ternary_table() {
  static const Table table = [] {
    Table t{};
    for (QvCode f = 0; f < 8; ++f)
      for (QvCode a = 0; a < 8; ++a)
        for (QvCode b = 0; b < 8; ++b) t[f][a][b] = search_ternary(f, small_rep(a), small_rep(b));
    return t;
  }();
  return table;
}

// u mod 2^k for a rational with odd numerator and denominator.
std::int64_t unit_residue(const Rat& u, unsigned k) {
  const Integer m = Integer(1) << k;
  Integer num = u.get_num() % m;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), m.get_mpz_t());
  Integer r = (num * inv) % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace

int ramification(QvCode field) {
  if (field == 0 || field == 4) return 1;
  return 2;
}

bool ternary_isotropic(QvCode field, QvCode a, QvCode b) {
  return ternary_table().at(field & 7).at(a & 7).at(b & 7);
}

bool is_square(const Rat& a, QvCode field) {
  if (a == 0) throw DomainError("dyadic square test of zero");
  const int v = padic_valuation(Integer(2), a);
  Rat u = a;
  if (v > 0) u /= Rat(Integer(1) << static_cast<unsigned>(v));
  if (v < 0) u *= Rat(Integer(1) << static_cast<unsigned>(-v));
  const bool odd_valuation = (v % 2) != 0;
  if (odd_valuation && ramification(field) == 1) return false;

  const unsigned k = odd_valuation ? 4 : 3;
  const Ring R = make_ring(field, k);
  std::int64_t target = unit_residue(u, k);
  if (odd_valuation) target *= 2;
  const std::uint32_t goal = R.pack(target, 0);
  for (std::uint32_t x = 0; x < R.size(); ++x) {
    if (R.is_unit(x) == odd_valuation) continue;
    if (R.mul(x, x) == goal) return true;
  }
  return false;
}

}  // namespace qfcert::dyadic
