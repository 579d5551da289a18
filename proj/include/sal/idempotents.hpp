#ifndef SAL_IDEMPOTENTS_HPP
#define SAL_IDEMPOTENTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sal/algebra.hpp"

namespace sal {

// Elements here are handled in the symmetric representation: all n spanning
// coefficients, determined up to adding a common constant.

// The block quadratic Q_{i,B}(x) = (beta_+ + beta_-) x_i (x_j + x_{i∘j})
//                                + (beta_+ - beta_-) x_j x_{i∘j}.
Rational q_poly(const SteinerTripleSystem& s, const Rational& beta, int i, const Block& B,
                const Vec& coords_n);

struct EpsCheck {
  bool solves = false;
  int failing_point = 0;  // 1-based, when !solves
  Rational c;             // common residual when solves
  bool nc_consistent = false;        // c matches the closed form in x-bar
  bool multiply_consistent = false;  // x∘x = eps x via the structure tensor
};

// x∘x = eps x holds iff the n residuals x_i^2 - eps x_i + sum_B Q_{i,B}(x)
// share a common value c; cross-checked against the closed form for c and
// against a direct tensor multiplication.
EpsCheck check_eps_equation(const SteinerTripleSystem& s, const Rational& beta, int eps,
                            const Vec& coords_n);

enum class CatalogKind { idempotent, square_zero, one_parameter_family };

struct CatalogEntry {
  std::string label;  // "e0_B", "z_B", "e_B_i", "e_B_j", "e_B_ij", "lambda_family"
  CatalogKind kind = CatalogKind::idempotent;
  Vec coords_n;  // spanning coordinates; descriptor entries are zero
};

struct BlockIdempotentCatalog {
  Block block{};
  Rational beta;
  std::vector<CatalogEntry> entries;
  bool has_lambda_family = false;        // beta = -n/(2(n-3))
  bool collapses_to_generators = false;  // beta = n/(2(n-1)): e_B^t = e_t
  // sum of the three e_B^* when they exist: zero exactly at beta = 1,
  // gamma_B at beta = -n/(2(n-3))
  std::optional<Vec> e_sum_n;
};

// Complete catalog of idempotent / square-zero elements supported on one
// block span. Every emitted vector is re-verified through the multiplication
// oracle before it is returned.
BlockIdempotentCatalog block_catalog(const SteinerTripleSystem& s, const Rational& beta,
                                     const Block& B);

std::string catalog_to_json(const BlockIdempotentCatalog& c);

struct Ag23Report {
  Rational beta;
  std::array<std::vector<Block>, 4> classes;  // parallel classes
  bool class_sums_zero = false;      // sum of e0_B over a class vanishes
  bool within_class_ok = false;      // e0_B ∘ e0_B' = -e0_B - e0_B'
  bool cross_class_ok = false;       // e0_A ∘ e0_B = (1-beta)/(6beta+1) (e0_C + e0_D)
  bool beta1_direct_sum = false;     // at beta = 1: four orthogonal 2-dim summands
};

// The parallel-class analysis of T_beta over an STS(9); beta = -1/6 excluded.
Ag23Report ag23_decomposition(const SteinerTripleSystem& s, const Rational& beta);

struct GammaSpectrumReport {
  Block block{};
  Rational beta;
  bool relations_ok = false;  // the six displayed gamma_B product relations
  // spectrum of L(e0_B): (eigenvalue, multiplicity), deterministic order
  std::vector<std::pair<Rational, std::size_t>> spectrum;
  bool semisimple = false;
  bool coincidence = false;  // some candidate eigenvalues collide
  bool table_ok = false;     // n = 9, off coincidences: values/mults (1,2,4,1)
};

// Block-idempotent spectral analysis for Hall systems; beta with
// 2n*beta + n - 6 = 0 excluded (no block idempotent there). For n = 9 the
// four displayed eigenvalues exhaust the spectrum; above that they are lower
// bounds and `semisimple` may legitimately come back false.
GammaSpectrumReport gamma_block_spectrum(const SteinerTripleSystem& s, const Rational& beta,
                                         const Block& B);

struct SquareZeroScan {
  std::vector<Vec> found;  // spanning coordinates, verified square-zero
  bool lambda_family_case = false;  // beta = -n/(2(n-3))
  std::string note;
};

// Scans the block-span catalog for square-zero elements. Not a completeness
// statement outside block spans.
SquareZeroScan square_zero_scan(const SteinerTripleSystem& s, const Rational& beta);

std::vector<std::vector<Block>> parallel_classes(const SteinerTripleSystem& s);

}  // namespace sal

#endif
