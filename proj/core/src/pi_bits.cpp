#include <gmpxx.h>

#include "syzkit/codes.hpp"

namespace syzkit::codes {

namespace {

// floor(atan(1/x) * 2^B) up to a few units, by the alternating series.
mpz_class atan_inv_scaled(unsigned long x, size_t bits) {
  mpz_class term = mpz_class(1) << bits;
  term /= x;
  mpz_class acc = term;
  mpz_class x2 = mpz_class(x) * x;
  for (unsigned long j = 1; term != 0; ++j) {
    term /= x2;
    if (term == 0) break;
    mpz_class t = term / (2 * j + 1);
    if (j % 2)
      acc -= t;
    else
      acc += t;
  }
  return acc;
}

}  // namespace

std::vector<uint8_t> pi_bits(size_t count) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), evaluated on scaled integers
  // with 64 guard bits (per-term floor errors stay far below the guard).
  size_t b = count + 64;
  mpz_class s = 16 * atan_inv_scaled(5, b) - 4 * atan_inv_scaled(239, b);
  size_t total = mpz_sizeinbase(s.get_mpz_t(), 2);  // pi in (2,4): b + 2 bits
  if (count > total) throw std::invalid_argument("pi_bits: count too large");
  std::vector<uint8_t> bits(count);
  for (size_t i = 0; i < count; ++i)
    bits[i] = static_cast<uint8_t>(mpz_tstbit(s.get_mpz_t(), total - 1 - i));
  return bits;
}

}  // namespace syzkit::codes
