#include "sal/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sal {

using ordered_json = nlohmann::ordered_json;

AlgebraParams AlgebraParams::t_family(int n, const Rational& beta) {
  if (n == 2) throw Error(ErrorCode::InvalidArgument, "t_family needs n != 2");
  AlgebraParams p;
  p.n = n;
  p.gamma = 1;
  p.beta = beta;
  p.alpha = (beta - 1) / Rational(n - 2);
  p.beta_plus = p.alpha + beta;
  p.beta_minus = p.alpha - beta;
  p.omega = Rational(n - 3) * beta * beta + 1;
  return p;
}

AlgebraParams AlgebraParams::unreduced_family(int n, const Rational& gamma, const Rational& alpha,
                                              const Rational& beta) {
  AlgebraParams p;
  p.n = n;
  p.gamma = gamma;
  p.alpha = alpha;
  p.beta = beta;
  p.beta_plus = alpha + beta;
  p.beta_minus = alpha - beta;
  p.omega = Rational(n - 3) * beta * beta + 1;
  return p;
}

const char* algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::unreduced: return "unreduced";
    case AlgebraKind::steiner_t: return "steiner_t";
    case AlgebraKind::matsuo: return "matsuo";
    case AlgebraKind::mendelsohn: return "mendelsohn";
    case AlgebraKind::simplicial: return "simplicial";
  }
  return "?";
}

Algebra::Algebra(AlgebraKind kind, AlgebraParams params, std::vector<std::string> labels,
                 std::vector<Vec> structure, std::shared_ptr<const SteinerTripleSystem> source)
    : kind_(kind),
      params_(std::move(params)),
      labels_(std::move(labels)),
      structure_(std::move(structure)),
      source_(std::move(source)) {
  const std::size_t d = labels_.size();
  if (structure_.size() != d * d) throw Error(ErrorCode::DimMismatch, "structure tensor shape");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (structure_[i * d + j].size() != d) throw Error(ErrorCode::DimMismatch, "structure row");
      if (structure_[i * d + j] != structure_[j * d + i])
        throw Error(ErrorCode::InvalidArgument, "structure tensor not commutative");
    }
}

bool Algebra::same_structure(const Algebra& other) const {
  if (dim() != other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (product(i, j) != other.product(i, j)) return false;
  return true;
}

namespace {

std::vector<std::string> hat_labels(int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back("h" + std::to_string(i));
  return l;
}

std::vector<std::string> e_labels(int count) {
  std::vector<std::string> l;
  for (int i = 1; i <= count; ++i) l.push_back("e" + std::to_string(i));
  return l;
}

// pair -> third point table for a partial system; 0 when the pair is uncovered
std::vector<int> pair_third(const BlockSet& b) {
  std::vector<int> t(static_cast<std::size_t>(b.n) * static_cast<std::size_t>(b.n), 0);
  for (const Block& blk : b.blocks)
    for (int x : blk)
      for (int y : blk) {
        if (x == y) continue;
        t[static_cast<std::size_t>(x - 1) * b.n + (y - 1)] = blk[0] + blk[1] + blk[2] - x - y;
      }
  return t;
}

void check_supported_order(int n) {
  if (n > 81) throw Error(ErrorCode::InvalidOrder, "orders above 81 are out of supported range");
}

Algebra build_unreduced_impl(const BlockSet& b, const Rational& gamma, const Rational& alpha,
                             const Rational& beta, AlgebraKind kind,
                             std::shared_ptr<const SteinerTripleSystem> src) {
  if (gamma.is_zero() && alpha.is_zero() && beta.is_zero())
    throw Error(ErrorCode::AllParamsZero, "unreduced algebra needs a nonzero parameter");
  check_supported_order(b.n);
  const int n = b.n;
  const std::size_t d = static_cast<std::size_t>(n);
  std::vector<int> third = pair_third(b);

  std::vector<Vec> c(d * d, Vec(d));
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i) * d + i][static_cast<std::size_t>(i)] = gamma;
    for (int j = i + 1; j < n; ++j) {
      Vec v(d);
      int t = third[static_cast<std::size_t>(i) * d + j];
      if (t != 0) {
        v[static_cast<std::size_t>(i)] += alpha;
        v[static_cast<std::size_t>(j)] += alpha;
        v[static_cast<std::size_t>(t - 1)] += beta;
      }
      c[static_cast<std::size_t>(i) * d + j] = v;
      c[static_cast<std::size_t>(j) * d + i] = std::move(v);
    }
  }
  return Algebra(kind, AlgebraParams::unreduced_family(n, gamma, alpha, beta), hat_labels(n),
                 std::move(c), std::move(src));
}

}  // namespace

Algebra build_unreduced(const BlockSet& b, const Rational& gamma, const Rational& alpha,
                        const Rational& beta) {
  return build_unreduced_impl(b, gamma, alpha, beta, AlgebraKind::unreduced, nullptr);
}

Algebra build_unreduced(const SteinerTripleSystem& s, const Rational& gamma, const Rational& alpha,
                        const Rational& beta) {
  return build_unreduced_impl(s.base(), gamma, alpha, beta, AlgebraKind::unreduced,
                              std::make_shared<SteinerTripleSystem>(s));
}

Algebra build_t_beta(const SteinerTripleSystem& s, const Rational& beta) {
  const int n = s.n();
  check_supported_order(n);
  AlgebraParams p = AlgebraParams::t_family(n, beta);
  const std::size_t d = static_cast<std::size_t>(n - 1);

  std::vector<Vec> c(d * d, Vec(d));
  for (int i = 1; i < n; ++i) {
    c[static_cast<std::size_t>(i - 1) * d + (i - 1)][static_cast<std::size_t>(i - 1)] = 1;
    for (int j = i + 1; j < n; ++j) {
      Vec v(d);
      v[static_cast<std::size_t>(i - 1)] += p.alpha;
      v[static_cast<std::size_t>(j - 1)] += p.alpha;
      int t = s.join(i, j);
      if (t < n) {
        v[static_cast<std::size_t>(t - 1)] += beta;
      } else {
        for (std::size_t k = 0; k < d; ++k) v[k] -= beta;
      }
      c[static_cast<std::size_t>(i - 1) * d + (j - 1)] = v;
      c[static_cast<std::size_t>(j - 1) * d + (i - 1)] = std::move(v);
    }
  }
  return Algebra(AlgebraKind::steiner_t, p, e_labels(n - 1), std::move(c),
                 std::make_shared<SteinerTripleSystem>(s));
}

Algebra build_t_beta_via_quotient(const SteinerTripleSystem& s, const Rational& beta) {
  const int n = s.n();
  AlgebraParams p = AlgebraParams::t_family(n, beta);
  Algebra u = build_unreduced_impl(s.base(), 1, p.alpha, beta, AlgebraKind::unreduced, nullptr);

  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<Vec> c(d * d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Vec& full = u.product(i, j);
      Vec v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = full[k] - full[d];
      c[i * d + j] = v;
      c[j * d + i] = std::move(v);
    }
  return Algebra(AlgebraKind::steiner_t, p, e_labels(n - 1), std::move(c),
                 std::make_shared<SteinerTripleSystem>(s));
}

Algebra build_simplicial(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "simplicial algebra needs n >= 2");
  check_supported_order(n);
  AlgebraParams p;
  if (n == 2) {
    p.n = 2;
    p.gamma = 1;
    p.omega = 1;
  } else {
    p = AlgebraParams::t_family(n, 0);
  }
  const std::size_t d = static_cast<std::size_t>(n - 1);
  const Rational off = n == 2 ? Rational(0) : Rational(-1, n - 2);

  std::vector<Vec> c(d * d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    c[i * d + i][i] = 1;
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec v(d);
      v[i] = off;
      v[j] = off;
      c[i * d + j] = v;
      c[j * d + i] = std::move(v);
    }
  }
  return Algebra(AlgebraKind::simplicial, p, e_labels(n - 1), std::move(c), nullptr);
}

Algebra build_mendelsohn(const SteinerTripleSystem& s) {
  const int n = s.n();
  check_supported_order(n);
  const std::size_t d = static_cast<std::size_t>(n + 1);
  std::vector<Vec> c(d * d, Vec(d));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v(d);
      v[static_cast<std::size_t>(s.join(i + 1, j + 1) - 1)] = 1;
      c[static_cast<std::size_t>(i) * d + j] = v;
      c[static_cast<std::size_t>(j) * d + i] = std::move(v);
    }
  // unit
  for (std::size_t k = 0; k < d; ++k) {
    Vec v(d);
    v[k] = 1;
    c[(d - 1) * d + k] = v;
    c[k * d + (d - 1)] = std::move(v);
  }
  std::vector<std::string> labels = hat_labels(n);
  labels.push_back("u");
  AlgebraParams p = AlgebraParams::unreduced_family(n, 0, 0, 1);
  return Algebra(AlgebraKind::mendelsohn, p, std::move(labels), std::move(c),
                 std::make_shared<SteinerTripleSystem>(s));
}

Algebra build_matsuo(const SteinerTripleSystem& s, const Rational& alpha) {
  Algebra a = build_unreduced_impl(s.base(), 1, alpha, -alpha, AlgebraKind::matsuo,
                                   std::make_shared<SteinerTripleSystem>(s));
  return a;
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  const std::size_t d = a.dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorCode::DimMismatch, "multiply");
  Vec r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      const Vec& c = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) r[k] += f * c[k];
    }
  }
  return r;
}

Matrix mult_operator(const Algebra& a, const Vec& x) {
  const std::size_t d = a.dim();
  if (x.size() != d) throw Error(ErrorCode::DimMismatch, "mult_operator");
  Matrix L(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& c = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) L.at(k, j) += x[i] * c[k];
    }
  }
  return L;
}

Matrix mult_operator_basis(const Algebra& a, std::size_t i) {
  const std::size_t d = a.dim();
  Matrix L(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec& c = a.product(i, j);
    for (std::size_t k = 0; k < d; ++k)
      if (!c[k].is_zero()) L.at(k, j) = c[k];
  }
  return L;
}

Vec spanning_vector(const Algebra& a, int k) {
  const std::size_t d = a.dim();
  const bool quotient = a.kind() == AlgebraKind::steiner_t || a.kind() == AlgebraKind::simplicial;
  const int n = a.params().n;
  Vec v(d);
  if (quotient && k == n) {
    for (auto& x : v) x = -1;
    return v;
  }
  if (k < 1 || static_cast<std::size_t>(k) > d)
    throw Error(ErrorCode::InvalidArgument, "spanning index out of range");
  v[static_cast<std::size_t>(k - 1)] = 1;
  return v;
}

Vec from_spanning(const Algebra& a, const Vec& coords_n) {
  const std::size_t d = a.dim();
  const bool quotient = a.kind() == AlgebraKind::steiner_t || a.kind() == AlgebraKind::simplicial;
  if (!quotient) {
    if (coords_n.size() != d) throw Error(ErrorCode::DimMismatch, "from_spanning");
    return coords_n;
  }
  if (coords_n.size() != d + 1) throw Error(ErrorCode::DimMismatch, "from_spanning");
  Vec v(d);
  for (std::size_t k = 0; k < d; ++k) v[k] = coords_n[k] - coords_n[d];
  return v;
}

bool is_exact(const Algebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    Rational tr;
    for (std::size_t j = 0; j < d; ++j) tr += a.product(k, j)[j];
    if (!tr.is_zero()) return false;
  }
  return true;
}

BilinearForm killing_form(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      // tr L(e_i)L(e_j) = sum_{l,k} c[i][l][k] c[j][k][l]
      Rational t;
      for (std::size_t l = 0; l < d; ++l) {
        const Vec& ci = a.product(i, l);
        for (std::size_t k = 0; k < d; ++k) {
          if (ci[k].is_zero()) continue;
          const Rational& o = a.product(j, k)[l];
          if (!o.is_zero()) t += ci[k] * o;
        }
      }
      g.at(i, j) = t;
      g.at(j, i) = std::move(t);
    }
  return {std::move(g), "killing"};
}

InvarianceCheck check_invariance(const Algebra& a, const BilinearForm& f) {
  const std::size_t d = a.dim();
  if (f.gram.rows() != d || f.gram.cols() != d)
    throw Error(ErrorCode::DimMismatch, "check_invariance");
  // P[i][j] = G (e_i ∘ e_j), so f(e_i∘e_j, e_k) = P[i][j][k] and
  // f(e_i, e_j∘e_k) = P[j][k][i] by symmetry of G.
  std::vector<Vec> P(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec v = f.gram.apply(a.product(i, j));
      P[i * d + j] = v;
      P[j * d + i] = std::move(v);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (P[i * d + j][k] != P[j * d + k][i]) return {false, {i, j, k}};
  return {true, {0, 0, 0}};
}

bool gram_identity_check(const Algebra& a) {
  if (a.kind() != AlgebraKind::steiner_t)
    throw Error(ErrorCode::InvalidArgument, "gram_identity_check needs a steiner_t algebra");
  const AlgebraParams& p = a.params();
  Matrix expected = Matrix::scaled_n_identity_minus_ones(a.dim(), Rational(p.n),
                                                         p.omega / Rational(p.n - 2));
  return killing_form(a).gram == expected;
}

bool tight_frame_check(const Algebra& a, const BilinearForm& killing, const Vec& x) {
  if (a.kind() != AlgebraKind::steiner_t && a.kind() != AlgebraKind::simplicial)
    throw Error(ErrorCode::InvalidArgument, "tight_frame_check needs the quotient family");
  const std::size_t d = a.dim();
  if (x.size() != d) throw Error(ErrorCode::DimMismatch, "tight_frame_check");
  const AlgebraParams& p = a.params();

  Vec gx = killing.gram.apply(x);  // gx[i] = kappa(x, e_{i+1}), i < n-1
  Rational kn;                     // kappa(x, e_n) = -sum of the others
  for (const Rational& v : gx) kn -= v;

  const Rational frame = Rational(p.n) * p.omega / Rational(p.n - 2);
  for (std::size_t k = 0; k < d; ++k)
    if (gx[k] - kn != frame * x[k]) return false;
  return true;
}

bool tight_frame_check(const Algebra& a, const Vec& x) {
  return tight_frame_check(a, killing_form(a), x);
}

Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& seeds) {
  const std::size_t d = a.dim();
  EchelonBasis W(d);
  for (const Vec& s : seeds) {
    if (s.size() != d) throw Error(ErrorCode::DimMismatch, "ideal_closure seed");
    W.insert(s);
  }
  bool changed = true;
  while (changed && W.rank() < d) {
    changed = false;
    std::vector<Vec> snapshot = W.rows();
    for (const Vec& w : snapshot) {
      for (std::size_t i = 0; i < d; ++i) {
        Vec p(d);
        for (std::size_t j = 0; j < d; ++j) {
          if (w[j].is_zero()) continue;
          const Vec& c = a.product(i, j);
          for (std::size_t k = 0; k < d; ++k)
            if (!c[k].is_zero()) p[k] += w[j] * c[k];
        }
        if (W.insert(p)) changed = true;
        if (W.rank() == d) break;
      }
      if (W.rank() == d) break;
    }
  }
  return {W.rows(), W.rank()};
}

bool is_ideal(const Algebra& a, const std::vector<Vec>& basis) {
  const std::size_t d = a.dim();
  EchelonBasis W = span_of(basis, d);
  for (const Vec& w : W.rows())
    for (std::size_t i = 0; i < d; ++i) {
      Vec ei(d);
      ei[i] = 1;
      if (!W.contains(multiply(a, ei, w))) return false;
    }
  return true;
}

namespace {

// gamma_B in basis coordinates
Vec gamma_vec(const Algebra& a, const Block& b) {
  Vec v = spanning_vector(a, b[0]);
  v = add(v, spanning_vector(a, b[1]));
  return add(v, spanning_vector(a, b[2]));
}

std::vector<Rational> distinct_values(std::vector<Rational> vals) {
  std::vector<Rational> out;
  for (const auto& v : vals)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// Simplicity proof over a spanning set of idempotent axes: the
// form must be nondegenerate and invariant, every axis anisotropic with
// diagonalizable multiplication operator whose 1-eigenspace is a line, and
// every axis must generate the whole algebra as an ideal.
bool axes_prove_simple(const Algebra& a, const BilinearForm& kf, const std::vector<Vec>& axes,
                       const std::vector<Rational>& eigen_candidates, std::string* note) {
  const std::size_t d = a.dim();
  if (d == 0) return false;
  if (span_of(axes, d).rank() != d) return false;
  if (determinant(kf.gram).is_zero()) return false;
  if (!check_invariance(a, kf).ok) return false;

  for (const Vec& ax : axes) {
    if (multiply(a, ax, ax) != ax) return false;
    if (dot(ax, kf.gram.apply(ax)).is_zero()) return false;
    Matrix L = mult_operator(a, ax);
    std::size_t total = 0, mult_one = 0;
    for (const Rational& lambda : distinct_values(eigen_candidates)) {
      std::size_t m = eigenspace(L, lambda).size();
      total += m;
      if (lambda == Rational(1)) mult_one = m;
    }
    if (total != d || mult_one != 1) return false;
  }
  for (const Vec& ax : axes)
    if (ideal_closure(a, {ax}).dim != d) return false;
  if (note) *note += " (all axis closures full)";
  return true;
}

}  // namespace

SimplicityVerdict is_simple(const Algebra& a) {
  const std::size_t d = a.dim();
  const AlgebraParams& p = a.params();
  if (d == 0) return {Simplicity::undecided, std::nullopt, "zero algebra"};

  const bool quotient_kind =
      a.kind() == AlgebraKind::steiner_t || a.kind() == AlgebraKind::simplicial;

  BilinearForm kf = killing_form(a);

  // Route 1: generator axes e_1..e_n.
  if (quotient_kind) {
    std::vector<Vec> axes;
    for (int k = 1; k <= p.n; ++k) axes.push_back(spanning_vector(a, k));
    std::string note = "generator axes";
    if (axes_prove_simple(a, kf, axes, {Rational(1), p.beta_plus, p.beta_minus}, &note))
      return {Simplicity::simple, std::nullopt, note};
  }

  // Route 2: search the documented candidate list for a proper ideal.
  std::vector<Vec> seeds;
  if (quotient_kind) {
    for (int k = 1; k <= p.n; ++k) seeds.push_back(spanning_vector(a, k));
  } else {
    for (std::size_t k = 0; k < d; ++k) {
      Vec v(d);
      v[k] = 1;
      seeds.push_back(std::move(v));
    }
    Vec ehat(d, Rational(1));
    if (a.kind() == AlgebraKind::mendelsohn) ehat[d - 1] = 0;  // sum of the h_i only
    seeds.push_back(std::move(ehat));
  }
  if (a.kind() == AlgebraKind::steiner_t && a.source() != nullptr) {
    const Rational denom = Rational(2 * p.n) * p.beta + Rational(p.n - 6);
    std::vector<Vec> blockies;
    for (const Block& b : a.source()->blocks()) {
      Vec g = gamma_vec(a, b);
      blockies.push_back(denom.is_zero() ? g : scale(Rational(p.n - 2) / denom, g));
    }
    for (std::size_t x = 0; x < blockies.size(); ++x)
      for (std::size_t y = x + 1; y < blockies.size(); ++y)
        seeds.push_back(sub(blockies[x], blockies[y]));
    if (denom.is_zero())
      for (auto& g : blockies) seeds.push_back(g);  // square-zero z_B are candidates too
  }
  if (quotient_kind) {
    for (int k = 1; k <= p.n; ++k) {
      Matrix L = mult_operator(a, spanning_vector(a, k));
      for (const Rational& lambda : distinct_values({Rational(1), p.beta_plus, p.beta_minus}))
        for (const Vec& v : eigenspace(L, lambda)) seeds.push_back(v);
    }
  }
  std::optional<Ideal> smallest;
  for (const Vec& s : seeds) {
    if (is_zero_vec(s)) continue;
    Ideal I = ideal_closure(a, {s});
    if (I.dim > 0 && I.dim < d && (!smallest || I.dim < smallest->dim)) smallest = std::move(I);
  }
  if (smallest)
    return {Simplicity::not_simple, std::move(smallest), "proper ideal from candidate seed"};

  // Route 3: block-idempotent axes for Hall sources (the only regime where
  // their spectra are pinned down).
  if (a.kind() == AlgebraKind::steiner_t && a.source() != nullptr && is_hall(*a.source()).hall) {
    const Rational denom = Rational(2 * p.n) * p.beta + Rational(p.n - 6);
    if (!denom.is_zero() && !determinant(kf.gram).is_zero()) {
      const Rational s = Rational(p.n - 2) / denom;
      std::vector<Vec> axes;
      for (const Block& b : a.source()->blocks()) axes.push_back(scale(s, gamma_vec(a, b)));
      // Scaled L(gamma_B) eigenvalues: gamma_B itself, the in-block
      // differences, the out-of-block point differences, and the
      // gamma-differences.
      std::vector<Rational> cands = {Rational(1), (Rational(1) + p.beta_minus) * s,
                                     Rational(3) * p.alpha * s, Rational(3) * p.beta_minus * s};
      std::string note = "block-idempotent axes";
      if (axes_prove_simple(a, kf, axes, cands, &note))
        return {Simplicity::simple, std::nullopt, note};
    }
  }

  return {Simplicity::undecided, std::nullopt, "candidate search found no proper ideal"};
}

EHatIdealCheck e_hat_ideal_status(const Algebra& a) {
  if (a.kind() != AlgebraKind::unreduced && a.kind() != AlgebraKind::matsuo)
    throw Error(ErrorCode::InvalidArgument, "e_hat_ideal_status needs an unreduced-kind algebra");
  const std::size_t d = a.dim();
  Vec ehat(d, Rational(1));

  bool all_zero = true;
  Rational lambda;
  bool have_lambda = false;
  for (std::size_t i = 0; i < d; ++i) {
    Vec gen(d);
    gen[i] = 1;
    Vec m = multiply(a, gen, ehat);
    // membership in span(ehat): all coordinates equal
    for (std::size_t k = 1; k < d; ++k)
      if (m[k] != m[0]) return {EHatStatus::not_ideal, Rational(0)};
    if (!m[0].is_zero()) all_zero = false;
    if (!have_lambda) {
      lambda = m[0];
      have_lambda = true;
    } else if (m[0] != lambda) {
      // ruled out by the classification: an absorbing span forces one scalar
      throw Error(ErrorCode::InvalidArgument, "e_hat absorbed with non-constant scalar");
    }
  }
  if (all_zero) return {EHatStatus::case_regular_annihilated, Rational(0)};
  return {EHatStatus::case_sts, lambda};
}

std::string algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["schema"] = "1";
  j["kind"] = algebra_kind_name(a.kind());
  j["n"] = a.params().n;
  j["beta"] = a.params().beta.str();
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  ordered_json entries = ordered_json::array();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j2 = i; j2 < d; ++j2) {
      const Vec& c = a.product(i, j2);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero())
          entries.push_back(ordered_json::array({i + 1, j2 + 1, k + 1, c[k].str()}));
    }
  j["structure"] = std::move(entries);
  return j.dump(2);
}

}  // namespace sal
