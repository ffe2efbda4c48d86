#include "syzkit/util.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace syzkit {

std::vector<size_t> Rng::sample_distinct(size_t n, size_t k) {
  if (k > n) throw std::invalid_argument("sample_distinct: k > n");
  std::set<size_t> chosen;
  for (size_t j = n - k; j < n; ++j) {
    size_t t = below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return std::vector<size_t>(chosen.begin(), chosen.end());
}

mpz_class binom_mpz(uint64_t n, int64_t k) {
  if (k < 0 || static_cast<uint64_t>(k) > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

int64_t binom_i64(uint64_t n, int64_t k) {
  mpz_class r = binom_mpz(n, k);
  if (!r.fits_slong_p()) throw std::overflow_error("binom_i64 overflow");
  return r.get_si();
}

double log2_binom(double n, double k) {
  if (k < 0 || k > n) return -HUGE_VAL;
  if (k == 0 || k == n) return 0.0;
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) /
         std::log(2.0);
}

std::string mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_str();
  return "\"" + v.get_str() + "\"";
}

}  // namespace syzkit
