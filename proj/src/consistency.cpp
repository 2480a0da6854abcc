#include "qfcert/consistency.hpp"

#include <atomic>
#include <cassert>

namespace qfcert::consistency {

namespace {
std::atomic<std::uint64_t> i4_checks{0}, i4_violations{0};
std::atomic<std::uint64_t> g_checks{0}, g_violations{0};
}  // namespace

void record_i4_aniso_dim(int aniso_dim) {
  ++i4_checks;
  const bool ok = aniso_dim == 0 || aniso_dim >= 16;
  if (!ok) ++i4_violations;
  assert(ok && "anisotropic I^4 class of dimension between 1 and 15");
}

Tally hauptsatz() { return {i4_checks.load(), i4_violations.load()}; }

void record_certificate_in_g(bool in_g) {
  ++g_checks;
  if (!in_g) ++g_violations;
  assert(in_g && "certified multiplier outside G");
}

Tally certificate_in_g() { return {g_checks.load(), g_violations.load()}; }

void reset() {
  i4_checks = 0;
  i4_violations = 0;
  g_checks = 0;
  g_violations = 0;
}

}  // namespace qfcert::consistency
