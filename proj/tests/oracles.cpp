#include "oracles.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace oracle {

long squarefree(long n) {
  if (n == 0) throw std::invalid_argument("squarefree(0)");
  long sign = n < 0 ? -1 : 1, m = std::labs(n), out = 1;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

namespace {

// Enumerate x in [0,h]^k (signs do not matter for a diagonal form).
template <class F>
void for_each_vector(int k, long h, F&& f) {
  std::vector<long> x(k, 0);
  while (true) {
    f(x);
    int i = 0;
    while (i < k && x[i] == h) x[i++] = 0;
    if (i == k) return;
    ++x[i];
  }
}

std::optional<std::vector<long>> search_at(const std::vector<long>& a, long h) {
  const int n = static_cast<int>(a.size());
  const int left = n / 2;
  std::unordered_map<long, std::vector<long>> values;
  std::optional<std::vector<long>> hit;
  for_each_vector(left, h, [&](const std::vector<long>& x) {
    if (hit) return;
    long v = 0;
    bool nonzero = false;
    for (int i = 0; i < left; ++i) {
      v += a[i] * x[i] * x[i];
      nonzero |= x[i] != 0;
    }
    if (nonzero && v == 0) {
      hit = x;
      hit->resize(n, 0);
    }
    values.emplace(v, x);
  });
  if (hit) return hit;
  for_each_vector(n - left, h, [&](const std::vector<long>& y) {
    if (hit) return;
    long v = 0;
    bool nonzero = false;
    for (int i = 0; i < n - left; ++i) {
      v += a[left + i] * y[i] * y[i];
      nonzero |= y[i] != 0;
    }
    if (!nonzero) return;
    auto it = values.find(-v);
    if (it == values.end()) return;
    std::vector<long> w = it->second;
    w.insert(w.end(), y.begin(), y.end());
    hit = w;
  });
  return hit;
}

constexpr std::size_t kBits = 8192;
using Residues = std::bitset<kBits>;

Residues rotate(const Residues& b, long s, long m, const Residues& mask) {
  if (s == 0) return b;
  return ((b << s) | (b >> (m - s))) & mask;
}

}  // namespace

std::optional<std::vector<long>> isotropic_vector(const std::vector<long>& a, long height) {
  if (a.size() < 2) return std::nullopt;
  const bool pos = std::any_of(a.begin(), a.end(), [](long x) { return x > 0; });
  const bool neg = std::any_of(a.begin(), a.end(), [](long x) { return x < 0; });
  if (!pos || !neg) return std::nullopt;
  for (long h = std::min(4L, height);; h = std::min(height, h * 3)) {
    if (auto w = search_at(a, h)) return w;
    if (h == height) return std::nullopt;
  }
}

bool locally_isotropic(const std::vector<long>& entries, long p) {
  if (entries.size() < 2) return false;
  if (p == 0) {
    const bool pos = std::any_of(entries.begin(), entries.end(), [](long x) { return x > 0; });
    const bool neg = std::any_of(entries.begin(), entries.end(), [](long x) { return x < 0; });
    return pos && neg;
  }
  const long m = p == 2 ? 32 : p * p * p;
  if (m > static_cast<long>(kBits)) throw std::invalid_argument("prime too large for oracle");
  Residues mask;
  for (long i = 0; i < m; ++i) mask.set(i);
  // reach[0]: sums from non-unit coordinates only; reach[1]: some unit coordinate.
  Residues reach[2];
  reach[0].set(0);
  for (long raw : entries) {
    const long a = squarefree(raw);
    Residues unit_vals, nonunit_vals;
    for (long x = 0; x < m; ++x) {
      const long v = (((a % m) + m) % m) * ((x * x) % m) % m;
      (x % p ? unit_vals : nonunit_vals).set(v);
    }
    Residues next[2];
    for (long s = 0; s < m; ++s) {
      if (nonunit_vals[s]) {
        next[0] |= rotate(reach[0], s, m, mask);
        next[1] |= rotate(reach[1], s, m, mask);
      }
      if (unit_vals[s]) next[1] |= rotate(reach[0], s, m, mask) | rotate(reach[1], s, m, mask);
    }
    reach[0] = next[0];
    reach[1] = next[1];
  }
  return reach[1][0];
}

int hilbert_symbol(long a, long b, long p) {
  return locally_isotropic({1, -a, -b}, p) ? 1 : -1;
}

namespace {

// Z_2[w]/2^5 with w^2 = t*w + n.
struct Ring {
  static constexpr long kMod = 32;
  long t, n;
  explicit Ring(long d) {
    if (((d % 4) + 4) % 4 == 1) {
      t = 1;
      n = (d - 1) / 4;
    } else {
      t = 0;
      n = d;
    }
  }
  static long red(long x) { return ((x % kMod) + kMod) % kMod; }
  int mul(int x, int y) const {
    const long x0 = x % kMod, x1 = x / kMod, y0 = y % kMod, y1 = y / kMod;
    const long c0 = x0 * y0 + n * x1 * y1;
    const long c1 = x0 * y1 + x1 * y0 + t * x1 * y1;
    return static_cast<int>(red(c0) + kMod * red(c1));
  }
  int add(int x, int y) const {
    return static_cast<int>(red(x % kMod + y % kMod) + kMod * red(x / kMod + y / kMod));
  }
  int neg(int x) const { return static_cast<int>(red(-(x % kMod)) + kMod * red(-(x / kMod))); }
  int from_int(long c) const { return static_cast<int>(red(c)); }
  bool is_unit(int x) const {
    const long x0 = x % kMod, x1 = x / kMod;
    return ((x0 * x0 + t * x0 * x1 - n * x1 * x1) & 1) != 0;
  }
};

}  // namespace

int dyadic_quadratic_symbol(long a, long b, long d) {
  const Ring R(d);
  constexpr int kSize = Ring::kMod * Ring::kMod;
  const int A = R.from_int(a), B = R.from_int(b);
  std::vector<int> sq(kSize);
  std::vector<bool> unit(kSize);
  for (int x = 0; x < kSize; ++x) {
    sq[x] = R.mul(x, x);
    unit[x] = R.is_unit(x);
  }
  // f = x^2 - a y^2 - b z^2; normalize the first unit coordinate to 1.
  std::vector<bool> hit(kSize);
  // x = 1: a y^2 = 1 - b z^2
  for (int y = 0; y < kSize; ++y) hit[R.mul(A, sq[y])] = true;
  for (int z = 0; z < kSize; ++z)
    if (hit[R.add(R.from_int(1), R.neg(R.mul(B, sq[z])))]) return 1;
  // x non-unit, y = 1: x^2 = a + b z^2
  std::fill(hit.begin(), hit.end(), false);
  for (int x = 0; x < kSize; ++x)
    if (!unit[x]) hit[sq[x]] = true;
  for (int z = 0; z < kSize; ++z)
    if (hit[R.add(A, R.mul(B, sq[z]))]) return 1;
  // x, y non-units, z = 1: x^2 = a y^2 + b
  for (int y = 0; y < kSize; ++y)
    if (!unit[y] && hit[R.add(R.mul(A, sq[y]), B)]) return 1;
  return -1;
}

bool square_mod_2_15(long u) {
  constexpr long m = 1L << 15;
  const long r = ((u % m) + m) % m;
  for (long x = 1; x < m; x += 2)
    if (x * x % m == r) return true;
  return false;
}

}  // namespace oracle
