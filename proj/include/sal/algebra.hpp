#ifndef SAL_ALGEBRA_HPP
#define SAL_ALGEBRA_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sal/matrix.hpp"
#include "sal/sts.hpp"

namespace sal {

// Scalars of one algebra in the family. For the Steiner family T_beta:
// alpha = (beta-1)/(n-2), beta_pm = alpha +- beta, omega = (n-3)beta^2 + 1.
struct AlgebraParams {
  int n = 0;
  Rational gamma, alpha, beta, beta_plus, beta_minus, omega;

  static AlgebraParams t_family(int n, const Rational& beta);
  static AlgebraParams unreduced_family(int n, const Rational& gamma, const Rational& alpha,
                                        const Rational& beta);
};

enum class AlgebraKind { unreduced, steiner_t, matsuo, mendelsohn, simplicial };

const char* algebra_kind_name(AlgebraKind k);

// Commutative structure-constant algebra over Q. Immutable after
// construction; all queries are pure, so values can be shared across threads.
class Algebra {
public:
  Algebra(AlgebraKind kind, AlgebraParams params, std::vector<std::string> labels,
          std::vector<Vec> structure, std::shared_ptr<const SteinerTripleSystem> source);

  std::size_t dim() const { return labels_.size(); }
  AlgebraKind kind() const { return kind_; }
  const AlgebraParams& params() const { return params_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SteinerTripleSystem* source() const { return source_.get(); }
  std::shared_ptr<const SteinerTripleSystem> source_ptr() const { return source_; }

  // e_i ∘ e_j as a coefficient vector (0-based indices).
  const Vec& product(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }

  bool same_structure(const Algebra& other) const;

private:
  AlgebraKind kind_;
  AlgebraParams params_;
  std::vector<std::string> labels_;
  std::vector<Vec> structure_;  // dim*dim entries, each a dim-vector
  std::shared_ptr<const SteinerTripleSystem> source_;
};

// n-dimensional algebra on generators h_1..h_n with h_i∘h_i = gamma h_i and
// h_i∘h_j = alpha(h_i+h_j) + beta h_{i∘j} when i,j share a block, else 0.
Algebra build_unreduced(const BlockSet& b, const Rational& gamma, const Rational& alpha,
                        const Rational& beta);
Algebra build_unreduced(const SteinerTripleSystem& s, const Rational& gamma, const Rational& alpha,
                        const Rational& beta);

// The (n-1)-dimensional quotient member: basis e_1..e_{n-1}, e_n rewritten as
// -(e_1+...+e_{n-1}), products e_i∘e_j = alpha(e_i+e_j) + beta e_{i∘j}.
Algebra build_t_beta(const SteinerTripleSystem& s, const Rational& beta);

// Same algebra assembled the long way round: build the n-dimensional algebra
// and project modulo the span of h_1+...+h_n. Kept as an independent
// construction route for cross-checking.
Algebra build_t_beta_via_quotient(const SteinerTripleSystem& s, const Rational& beta);

// e_i∘e_j = -(e_i+e_j)/(n-2) on n-1 generators summing to zero.
Algebra build_simplicial(int n);

// Unital extension of the gamma=alpha=0, beta=1 algebra: square-zero h_i with
// h_i∘h_j = h_{i∘j}, plus a unit u.
Algebra build_mendelsohn(const SteinerTripleSystem& s);

// gamma=1, beta=-alpha member (Matsuo algebra of the system).
Algebra build_matsuo(const SteinerTripleSystem& s, const Rational& alpha);

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
Matrix mult_operator(const Algebra& a, const Vec& x);
// L(e_i) without assembling x first (columns are structure rows).
Matrix mult_operator_basis(const Algebra& a, std::size_t i);

// Basis-coordinate vector of the k-th spanning generator, k in 1..n
// (k = n gives the all -1 vector for steiner_t/simplicial kinds).
Vec spanning_vector(const Algebra& a, int k);
// Basis coordinates of sum x_k e_k given all n spanning coefficients.
Vec from_spanning(const Algebra& a, const Vec& coords_n);

// tr L(e_k) = 0 for every basis element.
bool is_exact(const Algebra& a);

struct BilinearForm {
  Matrix gram;
  std::string name;
};

// kappa(x, y) = tr L(x)L(y).
BilinearForm killing_form(const Algebra& a);

struct InvarianceCheck {
  bool ok = true;
  std::array<std::size_t, 3> witness{0, 0, 0};  // basis triple violating f(xy,z)=f(x,yz)
};

InvarianceCheck check_invariance(const Algebra& a, const BilinearForm& f);

// Gram of the Killing form of T_beta equals omega/(n-2) * (n I - ones).
// (The scalar differs from the one displayed in some statements of the
// identity; it is pinned down by tr L(e_i)^2 = (n-1)omega/(n-2).)
bool gram_identity_check(const Algebra& a);

// sum_i kappa(x, e_i) e_i = (n omega/(n-2)) x over the n spanning vectors.
bool tight_frame_check(const Algebra& a, const Vec& x);
bool tight_frame_check(const Algebra& a, const BilinearForm& killing, const Vec& x);

struct Ideal {
  std::vector<Vec> basis;  // echelonized
  std::size_t dim = 0;
};

// Smallest subspace containing the seeds and closed under multiplication by
// every basis element.
Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& seeds);

bool is_ideal(const Algebra& a, const std::vector<Vec>& basis);

enum class Simplicity { simple, not_simple, undecided };

struct SimplicityVerdict {
  Simplicity status = Simplicity::undecided;
  std::optional<Ideal> witness;  // a proper nontrivial ideal when not_simple
  std::string method;
};

// Generic route: when 1 has multiplicity one as an eigenvalue of every
// L(e_i) and the Killing form is nondegenerate and invariant, every nonzero
// ideal contains a generator, so full closures of all generators prove
// simplicity. Outside that regime a documented candidate list is searched
// for proper ideals (generators, block-idempotent differences, eigenvectors
// of each L(e_i)); for Hall sources the same argument is retried on the
// block idempotents. Returns undecided when neither route concludes.
SimplicityVerdict is_simple(const Algebra& a);

enum class EHatStatus { not_ideal, case_sts, case_regular_annihilated };

struct EHatIdealCheck {
  EHatStatus status;
  Rational lambda;  // x∘ê = lambda (sum x_i) ê in the case_sts branch
};

// Whether the span of ê = sum h_i is an ideal of an unreduced-kind algebra,
// by direct multiplication.
EHatIdealCheck e_hat_ideal_status(const Algebra& a);

// JSON export: {kind, n, beta, dim, labels, structure:[[i,j,k,"p/q"]...]},
// 1-based indices, i <= j, deterministic order.
std::string algebra_to_json(const Algebra& a);

}  // namespace sal

#endif
