// Linear codes over GF(q): GRS, dual alternant and dual Goppa constructions,
// canonicalization, duals, shortening / puncturing, distances and weight
// statistics, power-code dimensions, and a few named codes used throughout.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "syzkit/linalg.hpp"
#include "syzkit/poly.hpp"

namespace syzkit::codes {

using linalg::MatrixFq;

// Generator matrix kept canonically as the RREF of whatever was supplied.
class LinearCode {
 public:
  LinearCode() = default;

  // Canonicalizes. A rank-deficient generator throws std::invalid_argument
  // unless allow_redimension is set, in which case the code gets the row
  // space's true dimension.
  explicit LinearCode(const MatrixFq& generator, bool allow_redimension = false);

  const gf::Field& field() const { return gen_.field(); }
  size_t length() const { return gen_.cols(); }
  size_t dim() const { return gen_.rows(); }
  const MatrixFq& generator() const { return gen_; }

  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

 private:
  MatrixFq gen_;
};

struct SupportMultiplier {
  gf::Field field;                 // GF(q^m)
  std::vector<uint32_t> support;   // pairwise distinct
  std::vector<uint32_t> multiplier;  // all nonzero

  size_t length() const { return support.size(); }
  void validate() const;
};

enum class CodeFamily { alt_dual, goppa_dual };
enum class GoppaMode { irr, sqfr, any };

struct FamilySpec {
  CodeFamily family = CodeFamily::goppa_dual;
  uint32_t q = 2;
  uint32_t m = 1;
  size_t n = 0;  // 0 means q^m
  uint32_t t = 1;
  GoppaMode mode = GoppaMode::irr;

  size_t effective_n() const;
  void validate() const;
  std::string name() const;
};

struct DistanceProfile {
  size_t d = 0;
  size_t d_dual = 0;
  std::vector<size_t> weight_counts;  // A_1..A_wmax when requested
};

// d by enumeration, d_dual by column search up to dual_limit (0 when above),
// and optionally A_1..A_wmax.
DistanceProfile distance_profile(const LinearCode& c, size_t dual_limit,
                                 size_t wmax = 0);

// --- constructions ---

LinearCode grs_code(const SupportMultiplier& sm, size_t k);

struct DualResult {
  LinearCode code;
  bool proper = false;  // dimension equals m*t
};

DualResult dual_alternant_code(const SupportMultiplier& sm, uint32_t t,
                               const gf::SubfieldEmbedding& emb);
DualResult dual_goppa_code(const std::vector<uint32_t>& support,
                           const gf::Poly& goppa_poly,
                           const gf::SubfieldEmbedding& emb);

// Uniform support (n distinct elements of GF(q^m)) and nonzero multiplier.
SupportMultiplier random_support_multiplier(const gf::Field& big, size_t n,
                                            Rng& rng);

struct FamilySample {
  LinearCode code;
  size_t retries = 0;  // improper draws discarded before this one
};

// Draws from the family, resampling until the dual code is proper.
FamilySample sample_family(const FamilySpec& spec, Rng& rng);

// --- derived codes ---

LinearCode dual(const LinearCode& c);
LinearCode shorten(const LinearCode& c, const std::vector<size_t>& positions);
LinearCode puncture(const LinearCode& c, const std::vector<size_t>& positions);

// --- metrics ---

// Exact minimum distance by message enumeration; requires q^k <= 2^24.
size_t min_distance(const LinearCode& c);

struct DistanceResult {
  size_t value = 0;
  bool exact = false;  // false means d >= value
};

// Column-dependency search on the parity-check side: exact d when d < cap,
// otherwise the statement d >= cap.
DistanceResult min_distance_capped(const LinearCode& c, size_t cap);

// A_1..A_wmax by message enumeration (same budget as min_distance).
std::vector<size_t> weight_counts(const LinearCode& c, size_t wmax);

// True iff some w columns of the generator are linearly dependent,
// equivalently d(C_dual) <= w. Optionally counts the weight-w dual codewords
// up to scalar.
bool dual_distance_leq(const LinearCode& c, size_t w, size_t* count = nullptr);

// Smallest w with dual_distance_leq true (w <= limit), or 0 if none found.
size_t dual_distance(const LinearCode& c, size_t limit);

struct PowerDims {
  std::vector<size_t> dims;          // dim C^{<r>} for r = 1..r_max
  std::optional<uint32_t> regularity;  // first r with dim == n, when seen
};

PowerDims power_dims(const LinearCode& c, uint32_t r_max);

// Rank of the degree-2 evaluation matrix equals n, i.e. regularity 2.
bool has_regularity_two(const LinearCode& c);

// --- random codes ---

LinearCode random_code(size_t n, size_t k, const gf::Field& f, Rng& rng);

// Rejection-samples until (d, d_dual) match exactly. Throws after the cap.
LinearCode random_code_conditioned(size_t n, size_t k, const gf::Field& f,
                                   size_t d, size_t d_dual, Rng& rng,
                                   uint64_t cap = 1000000);

// --- named codes ---

LinearCode hamming_7_4();
LinearCode binary_golay();    // [23,12]_2, d = 7
LinearCode ternary_golay();   // [11,6]_3, d = 5
LinearCode parity_code(size_t k, const gf::Field& f);  // [k+1, k]

// The 12 x 23 binary matrix whose 276 bits are the leading bits of pi in
// binary (integer part "11" included), chunked row-major.
LinearCode pi_code();
MatrixFq pi_matrix();

// First `count` bits of pi's binary expansion, MSB first, "11" included.
std::vector<uint8_t> pi_bits(size_t count);

// --- files ---

// Header "q n k", then k generator rows of n entries.
void write_code_file(std::ostream& os, const LinearCode& c);
LinearCode read_code_file(std::istream& is);

}  // namespace syzkit::codes
