#pragma once

#include <cstdint>

// Process-wide tallies of structural consistency checks run by the engine.
// Debug builds also assert on each violation.
namespace qfcert::consistency {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

/// Arason-Pfister: an anisotropic class in I^4 has dimension 0 or >= 16.
void record_i4_aniso_dim(int aniso_dim);
Tally hauptsatz();

/// Every certified multiplier lies in G of the certified form.
void record_certificate_in_g(bool in_g);
Tally certificate_in_g();

void reset();

}  // namespace qfcert::consistency
