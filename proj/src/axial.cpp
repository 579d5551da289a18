#include "sal/axial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace sal {

using ordered_json = nlohmann::ordered_json;

const char* axis_regime_name(AxisRegime r) {
  switch (r) {
    case AxisRegime::generic: return "generic";
    case AxisRegime::beta_is_1: return "beta_is_1";
    case AxisRegime::beta_is_neg_ratio: return "beta_is_neg_ratio";
    case AxisRegime::beta_is_0: return "beta_is_0";
  }
  return "?";
}

namespace {

void require_steiner(const Algebra& a, const char* who) {
  if (a.kind() != AlgebraKind::steiner_t || a.source() == nullptr)
    throw Error(ErrorCode::InvalidArgument, std::string(who) + " needs a steiner_t algebra");
}

}  // namespace

AxisDecomposition decompose_axis(const Algebra& a, int i) {
  require_steiner(a, "decompose_axis");
  const AlgebraParams& p = a.params();
  const int n = p.n;
  const SteinerTripleSystem& s = *a.source();

  AxisDecomposition out;
  out.axis_point = i;
  if (p.beta == Rational(1))
    out.regime = AxisRegime::beta_is_1;
  else if (p.beta == Rational(0))
    out.regime = AxisRegime::beta_is_0;
  else if (n > 3 && p.beta == Rational(-(n - 1), n - 3))
    out.regime = AxisRegime::beta_is_neg_ratio;

  Matrix L = mult_operator(a, spanning_vector(a, i));
  out.eigen_1 = eigenspace(L, Rational(1));
  if (p.beta_plus != Rational(1)) out.eigen_plus = eigenspace(L, p.beta_plus);
  if (p.beta_minus != Rational(1) && p.beta_minus != p.beta_plus)
    out.eigen_minus = eigenspace(L, p.beta_minus);

  // spanning formulas: e_j - e_{i∘j} lies in the beta_minus eigenspace and
  // 2e_i + (n-1)(e_j + e_{i∘j}) in the beta_plus one; for generic beta they
  // span exactly.
  std::vector<Vec> minus_f, plus_f;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    int t = s.join(i, j);
    if (j > t) continue;  // one vector per block through i
    Vec ej = spanning_vector(a, j), et = spanning_vector(a, t);
    minus_f.push_back(sub(ej, et));
    Vec u = scale(Rational(2), spanning_vector(a, i));
    u = add(u, scale(Rational(n - 1), add(ej, et)));
    plus_f.push_back(u);
  }

  auto in_eigenspace = [&](const std::vector<Vec>& vs, const Rational& lambda) {
    for (const Vec& v : vs)
      if (L.apply(v) != scale(lambda, v)) return false;
    return true;
  };
  out.spanning_formulas_ok =
      in_eigenspace(minus_f, p.beta_minus) && in_eigenspace(plus_f, p.beta_plus);
  if (out.regime == AxisRegime::generic && out.spanning_formulas_ok) {
    // exact span equality, by rank
    EchelonBasis span_minus = span_of(minus_f, a.dim());
    EchelonBasis span_plus = span_of(plus_f, a.dim());
    out.spanning_formulas_ok = span_minus.rank() == out.eigen_minus.size() &&
                               span_plus.rank() == out.eigen_plus.size();
    for (const Vec& v : out.eigen_minus)
      if (!span_minus.contains(v)) out.spanning_formulas_ok = false;
    for (const Vec& v : out.eigen_plus)
      if (!span_plus.contains(v)) out.spanning_formulas_ok = false;
  }
  return out;
}

FusionLaw fusion_table_for(int n, const Rational& beta) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "fusion_table_for needs n >= 3");
  const Rational neg_ratio = n > 3 ? Rational(-(n - 1), n - 3) : Rational(0);
  if (beta == Rational(0) || beta == Rational(1) || (n > 3 && beta == neg_ratio))
    throw Error(ErrorCode::ExcludedBeta,
                "1, beta_plus, beta_minus are not pairwise distinct at beta=" + beta.str());

  AlgebraParams p = AlgebraParams::t_family(n, beta);
  FusionLaw law;
  law.eigenvalues = {Rational(1), p.beta_plus, p.beta_minus};
  law.grading = {+1, +1, -1};
  auto set = [](std::initializer_list<std::size_t> l) { return std::vector<std::size_t>(l); };
  if (beta == Rational(1, n - 1)) {
    // beta_plus = 0: Jordan law, Phi(1, 0) empty
    law.name = "jordan";
    law.table = {{set({0}), set({}), set({2})},
                 {set({}), set({1}), set({2})},
                 {set({2}), set({2}), set({0, 1})}};
  } else {
    law.name = "z2";
    law.table = {{set({0}), set({1}), set({2})},
                 {set({1}), set({0, 1}), set({2})},
                 {set({2}), set({2}), set({0, 1})}};
  }
  return law;
}

FusionCheck verify_fusion(const Algebra& a, int i, const FusionLaw& law) {
  require_steiner(a, "verify_fusion");
  const std::size_t d = a.dim();
  Matrix L = mult_operator(a, spanning_vector(a, i));

  std::vector<std::vector<Vec>> parts;
  std::size_t total = 0;
  for (const Rational& lambda : law.eigenvalues) {
    parts.push_back(eigenspace(L, lambda));
    total += parts.back().size();
  }
  FusionCheck out;
  if (total != d) {
    out.ok = false;
    out.semisimple = false;
    return out;
  }

  const std::size_t m = law.eigenvalues.size();
  for (std::size_t pa = 0; pa < m; ++pa) {
    // precompute multiplication operators of the a-part basis
    std::vector<Matrix> lu;
    lu.reserve(parts[pa].size());
    for (const Vec& u : parts[pa]) lu.push_back(mult_operator(a, u));
    for (std::size_t pb = pa; pb < m; ++pb) {
      EchelonBasis allowed(d);
      for (std::size_t t : law.allowed(pa, pb))
        for (const Vec& w : parts[t]) allowed.insert(w);
      for (std::size_t ui = 0; ui < parts[pa].size(); ++ui)
        for (const Vec& v : parts[pb]) {
          Vec prod = lu[ui].apply(v);
          if (!allowed.contains(prod)) {
            out.ok = false;
            out.lambda = law.eigenvalues[pa];
            out.mu = law.eigenvalues[pb];
            out.product = std::move(prod);
            return out;
          }
        }
    }
  }
  return out;
}

MiyamotoInvolution miyamoto_involution(const Algebra& a, int i) {
  require_steiner(a, "miyamoto_involution");
  const SteinerTripleSystem& s = *a.source();
  const std::size_t d = a.dim();
  const int n = a.params().n;

  MiyamotoInvolution out;
  out.axis_point = i;
  out.sigma = sigma_involution(s, i);

  Matrix M(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec img = spanning_vector(a, out.sigma[j]);
    for (std::size_t k = 0; k < d; ++k) M.at(k, j) = img[k];
  }
  out.map = M;
  out.involution_ok = (M * M) == Matrix::identity(d);

  out.reflection_ok = true;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    Vec ej = spanning_vector(a, j), et = spanning_vector(a, s.join(i, j));
    Vec plus = add(ej, et), minus = sub(ej, et);
    if (M.apply(plus) != plus || M.apply(minus) != scale(Rational(-1), minus)) {
      out.reflection_ok = false;
      break;
    }
  }

  out.is_algebra_automorphism = true;
  for (std::size_t x = 0; x < d && out.is_algebra_automorphism; ++x) {
    Vec mx = M.col(x);
    for (std::size_t y = x; y < d; ++y) {
      if (M.apply(a.product(x, y)) != multiply(a, mx, M.col(y))) {
        out.is_algebra_automorphism = false;
        break;
      }
    }
  }
  return out;
}

namespace {

// subgroup closure of the given elements under composition, capped
std::set<Permutation> close_subgroup(const std::vector<Permutation>& gens, std::uint64_t cap,
                                     const char* who) {
  std::set<Permutation> elems;
  if (gens.empty()) return elems;
  Permutation id(gens[0].size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k) + 1;
  elems.insert(id);
  std::vector<Permutation> frontier(gens.begin(), gens.end());
  for (const auto& g : gens) elems.insert(g);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        Permutation p = compose(g, h);
        if (elems.insert(p).second) {
          if (elems.size() > cap)
            throw Error(ErrorCode::ClosureCapExceeded,
                        std::string(who) + ": closure exceeds cap " + std::to_string(cap));
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return elems;
}

}  // namespace

MiyamotoGroup miyamoto_group(const SteinerTripleSystem& s, std::uint64_t cap) {
  MiyamotoGroup g;
  g.n = s.n();
  for (int i = 1; i <= s.n(); ++i) g.generators.push_back(sigma_involution(s, i));

  g.generators_are_automorphisms = true;
  for (const auto& sigma : g.generators)
    if (!is_automorphism(s, sigma)) {
      g.generators_are_automorphisms = false;
      break;
    }

  std::set<Permutation> elems = close_subgroup(g.generators, cap, "miyamoto_group");
  g.elements.assign(elems.begin(), elems.end());
  g.order = elems.size();

  // commutator subgroup = normal closure of the generator commutators;
  // close under generation and conjugation by the sigma_i alternately
  std::set<Permutation> comm;
  std::vector<Permutation> seeds;
  for (std::size_t x = 0; x < g.generators.size(); ++x)
    for (std::size_t y = x + 1; y < g.generators.size(); ++y) {
      const Permutation &ga = g.generators[x], &gb = g.generators[y];
      seeds.push_back(compose(compose(ga, gb), compose(inverse(ga), inverse(gb))));
    }
  bool grown = true;
  while (grown) {
    comm = close_subgroup(seeds, cap, "commutator closure");
    grown = false;
    for (const auto& gen : g.generators) {
      Permutation gi = inverse(gen);
      for (const auto& c : comm) {
        Permutation conj = compose(compose(gen, c), gi);
        if (!comm.count(conj)) {
          seeds.push_back(conj);
          grown = true;
        }
      }
    }
  }
  g.commutator_order = comm.size();
  g.abelianization_order = g.order / g.commutator_order;
  return g;
}

ThreeTranspositionCheck three_transposition_generators(const SteinerTripleSystem& s) {
  MiyamotoGroup g;
  g.n = s.n();
  for (int i = 1; i <= s.n(); ++i) g.generators.push_back(sigma_involution(s, i));
  g.commutator_order = 1;  // not computed here
  return three_transposition_check(s, g);
}

ThreeTranspositionCheck three_transposition_check(const SteinerTripleSystem& s,
                                                  const MiyamotoGroup& g) {
  ThreeTranspositionCheck out;
  const int n = s.n();
  Permutation id(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;

  for (const auto& t : g.generators)
    if (compose(t, t) != id || t == id) out.involutions_ok = false;

  for (int i = 1; i <= n && (out.braid_ok || out.product_order3_ok); ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Permutation& ti = g.generators[static_cast<std::size_t>(i - 1)];
      const Permutation& tj = g.generators[static_cast<std::size_t>(j - 1)];
      if (compose(compose(ti, tj), ti) != g.generators[static_cast<std::size_t>(s.join(i, j) - 1)])
        out.braid_ok = false;
      Permutation pr = compose(ti, tj);
      Permutation cube = compose(compose(pr, pr), pr);
      if (pr == id || cube != id) out.product_order3_ok = false;
    }

  std::uint64_t c = g.commutator_order;
  while (c % 3 == 0) c /= 3;
  out.commutator_power_of_3 = (c == 1);

  out.ok = out.involutions_ok && out.braid_ok && out.product_order3_ok && out.commutator_power_of_3;
  return out;
}

GradedIdealReport graded_ideal_analysis(const Algebra& a) {
  require_steiner(a, "graded_ideal_analysis");
  const AlgebraParams& p = a.params();
  const int n = p.n;
  const SteinerTripleSystem& s = *a.source();

  GradedIdealReport rep;
  rep.applicable = n > 3 && p.beta == Rational(-(n - 1), n - 3) && is_hall(s).hall;
  if (!rep.applicable) return rep;

  const std::size_t d = a.dim();
  BilinearForm kf = killing_form(a);

  // candidate seeds: generators, block-idempotent differences, eigenvectors
  std::vector<Vec> seeds;
  for (int k = 1; k <= n; ++k) seeds.push_back(spanning_vector(a, k));
  const Rational denom = Rational(2 * n) * p.beta + Rational(n - 6);
  std::vector<Vec> blockies;
  for (const Block& b : s.blocks()) {
    Vec g = add(add(spanning_vector(a, b[0]), spanning_vector(a, b[1])), spanning_vector(a, b[2]));
    blockies.push_back(denom.is_zero() ? g : scale(Rational(n - 2) / denom, g));
  }
  for (std::size_t x = 0; x < blockies.size(); ++x)
    for (std::size_t y = x + 1; y < blockies.size(); ++y)
      seeds.push_back(sub(blockies[x], blockies[y]));
  for (int k = 1; k <= n; ++k) {
    Matrix L = mult_operator(a, spanning_vector(a, k));
    for (const Rational& lambda : {Rational(1), p.beta_plus, p.beta_minus})
      for (const Vec& v : eigenspace(L, lambda)) seeds.push_back(v);
  }

  std::optional<Ideal> found;
  for (const Vec& seed : seeds) {
    if (is_zero_vec(seed)) continue;
    Ideal I = ideal_closure(a, {seed});
    if (I.dim > 0 && I.dim < d) {
      found = std::move(I);
      break;
    }
  }

  if (found) {
    rep.proper_ideal_found = true;
    rep.ideal = found;
    rep.dim_is_half = found->dim == static_cast<std::size_t>((n - 1) / 2);

    // kappa-orthogonal complement
    std::vector<Vec> rows;
    for (const Vec& v : found->basis) rows.push_back(kf.gram.apply(v));
    std::vector<Vec> comp = kernel_basis(Matrix::from_rows(rows));
    rep.complement_is_ideal = is_ideal(a, comp);
    EchelonBasis both(d);
    for (const Vec& v : found->basis) both.insert(v);
    for (const Vec& v : comp) both.insert(v);
    rep.complement_is_ideal = rep.complement_is_ideal && both.rank() == d &&
                              comp.size() + found->dim == d;

    EchelonBasis I_span = span_of(found->basis, d);
    EchelonBasis J_span = span_of(comp, d);
    rep.involutions_swap = true;
    rep.even_subgroup_stabilizes = true;
    for (int i = 1; i <= n; ++i) {
      MiyamotoInvolution tau = miyamoto_involution(a, i);
      for (const Vec& v : found->basis)
        if (!J_span.contains(tau.map.apply(v))) rep.involutions_swap = false;
      for (const Vec& v : comp)
        if (!I_span.contains(tau.map.apply(v))) rep.involutions_swap = false;
    }
    // products of two involutions generate the even subgroup, which contains
    // (and for abelianization order two equals) the commutator subgroup
    for (int i = 1; i <= n && rep.even_subgroup_stabilizes; ++i)
      for (int j = i + 1; j <= n; ++j) {
        MiyamotoInvolution ti = miyamoto_involution(a, i);
        MiyamotoInvolution tj = miyamoto_involution(a, j);
        Matrix prod = ti.map * tj.map;
        for (const Vec& v : found->basis)
          if (!I_span.contains(prod.apply(v))) {
            rep.even_subgroup_stabilizes = false;
            break;
          }
      }
    return rep;
  }

  SimplicityVerdict sv = is_simple(a);
  rep.simple_via_block_axes = sv.status == Simplicity::simple;
  rep.axis_closures_full = true;
  for (int k = 1; k <= n; ++k)
    if (ideal_closure(a, {spanning_vector(a, k)}).dim != d) rep.axis_closures_full = false;
  return rep;
}

std::string fusion_verdict_json(const Algebra& a, int axis, const FusionLaw& law) {
  FusionCheck c = verify_fusion(a, axis, law);
  ordered_json j;
  j["schema"] = "1";
  j["axis"] = axis;
  j["beta"] = a.params().beta.str();
  j["law"] = law.name;
  j["ok"] = c.ok;
  if (!c.ok && c.semisimple) {
    ordered_json w;
    w["lambda"] = c.lambda.str();
    w["mu"] = c.mu.str();
    ordered_json coords = ordered_json::array();
    for (const Rational& x : c.product) coords.push_back(x.str());
    w["product_coords"] = std::move(coords);
    j["witness"] = std::move(w);
  }
  if (!c.semisimple) j["note"] = "law eigenvalues do not exhaust the spectrum";
  return j.dump(2);
}

}  // namespace sal
