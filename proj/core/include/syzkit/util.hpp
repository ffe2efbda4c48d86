// Small shared utilities: deterministic RNG, exact binomials, log-domain helpers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace syzkit {

// xoshiro256** with splitmix64 seeding. All randomized procedures in the
// library draw from this generator so results are reproducible from a seed
// across platforms (std:: distributions are not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  uint64_t next() {
    uint64_t& s0 = state_[0];
    uint64_t& s1 = state_[1];
    uint64_t& s2 = state_[2];
    uint64_t& s3 = state_[3];
    uint64_t result = rotl(s1 * 5, 7) * 9;
    uint64_t t = s1 << 17;
    s2 ^= s0;
    s3 ^= s1;
    s1 ^= s2;
    s0 ^= s3;
    s2 ^= t;
    s3 = rotl(s3, 45);
    return result;
  }

  // Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t threshold = -n % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool coin() { return next() >> 63; }

  // Independent stream derived from (seed material of *this, stream id).
  Rng derive(uint64_t stream) const {
    uint64_t x = state_[0] ^ (state_[3] + 0x9e3779b97f4a7c15ULL * (stream + 1));
    return Rng(x);
  }

  // k distinct values from [0, n), sorted. Floyd's algorithm.
  std::vector<size_t> sample_distinct(size_t n, size_t k);

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_[4];
};

// Exact binomial coefficient as a GMP integer.
mpz_class binom_mpz(uint64_t n, int64_t k);

// Binomial coefficient fitting in int64, throws std::overflow_error otherwise.
int64_t binom_i64(uint64_t n, int64_t k);

// log2 of binomial(n, k), via lgamma. Accurate to ~1e-9 relative.
double log2_binom(double n, double k);

// Formats an mpz for JSON: plain number when it fits in int64, decimal string
// otherwise (callers embed the result verbatim).
std::string mpz_to_json(const mpz_class& v);

}  // namespace syzkit
