#include "sal/idempotents.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace sal {

using ordered_json = nlohmann::ordered_json;

namespace {

void require_n_coords(const SteinerTripleSystem& s, const Vec& x) {
  if (x.size() != static_cast<std::size_t>(s.n()))
    throw Error(ErrorCode::DimMismatch, "expected all n spanning coefficients");
}

Rational coeff(const Vec& x, int point) { return x[static_cast<std::size_t>(point - 1)]; }

Vec e0_coords(const SteinerTripleSystem& s, const Rational& scale_factor, const Block& B) {
  Vec v(static_cast<std::size_t>(s.n()));
  for (int p : B) v[static_cast<std::size_t>(p - 1)] = scale_factor;
  return v;
}

// verified multiplication oracle on spanning coordinates
bool solves_eps(const Algebra& a, const Vec& coords_n, int eps) {
  Vec x = from_spanning(a, coords_n);
  return multiply(a, x, x) == (eps == 1 ? x : zero_vec(a.dim()));
}

}  // namespace

Rational q_poly(const SteinerTripleSystem& s, const Rational& beta, int i, const Block& B,
                const Vec& coords_n) {
  require_n_coords(s, coords_n);
  if (std::find(B.begin(), B.end(), i) == B.end())
    throw Error(ErrorCode::PointNotInBlock,
                "point " + std::to_string(i) + " not in the given block");
  AlgebraParams p = AlgebraParams::t_family(s.n(), beta);
  int j = 0, t = 0;
  for (int q : B)
    if (q != i) (j == 0 ? j : t) = q;
  const Rational xi = coeff(coords_n, i), xj = coeff(coords_n, j), xt = coeff(coords_n, t);
  return (p.beta_plus + p.beta_minus) * xi * (xj + xt) + (p.beta_plus - p.beta_minus) * xj * xt;
}

EpsCheck check_eps_equation(const SteinerTripleSystem& s, const Rational& beta, int eps,
                            const Vec& coords_n) {
  require_n_coords(s, coords_n);
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidArgument, "eps must be 0 or 1");
  const int n = s.n();

  EpsCheck out;
  std::vector<Rational> residual(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Rational r = coeff(coords_n, i) * coeff(coords_n, i) - Rational(eps) * coeff(coords_n, i);
    for (const Block& B : s.blocks_through(i)) r += q_poly(s, beta, i, B, coords_n);
    residual[static_cast<std::size_t>(i - 1)] = std::move(r);
  }
  out.solves = true;
  for (int i = 2; i <= n; ++i)
    if (residual[static_cast<std::size_t>(i - 1)] != residual[0]) {
      out.solves = false;
      out.failing_point = i;
      break;
    }

  if (out.solves) {
    out.c = residual[0];
    // closed form: c = (1-beta_+)/(n-1) sum (x_j - xbar)^2 - eps xbar + n beta_+ xbar^2
    AlgebraParams p = AlgebraParams::t_family(n, beta);
    Rational xbar;
    for (const Rational& x : coords_n) xbar += x;
    xbar /= Rational(n);
    Rational sq;
    for (const Rational& x : coords_n) sq += (x - xbar) * (x - xbar);
    Rational c_nc = (Rational(1) - p.beta_plus) / Rational(n - 1) * sq - Rational(eps) * xbar +
                    Rational(n) * p.beta_plus * xbar * xbar;
    out.nc_consistent = (c_nc == out.c);
  }

  Algebra a = build_t_beta(s, beta);
  out.multiply_consistent = (solves_eps(a, coords_n, eps) == out.solves);
  return out;
}

BlockIdempotentCatalog block_catalog(const SteinerTripleSystem& s, const Rational& beta,
                                     const Block& B) {
  const int n = s.n();
  if (n <= 3) throw Error(ErrorCode::InvalidOrder, "block_catalog needs n > 3");
  if (!s.has_block(B)) throw Error(ErrorCode::InvalidArgument, "not a block of the system");

  AlgebraParams p = AlgebraParams::t_family(n, beta);
  Algebra a = build_t_beta(s, beta);

  BlockIdempotentCatalog cat;
  cat.block = B;
  cat.beta = beta;
  cat.has_lambda_family = (beta == Rational(-n, 2 * (n - 3)));
  cat.collapses_to_generators = (beta == Rational(n, 2 * (n - 1)));

  auto push_verified = [&](std::string label, CatalogKind kind, Vec coords) {
    if (!solves_eps(a, coords, kind == CatalogKind::square_zero ? 0 : 1))
      throw Error(ErrorCode::InvalidArgument, "catalog entry failed the multiply oracle: " + label);
    cat.entries.push_back({std::move(label), kind, std::move(coords)});
  };

  const Rational gamma_sq = Rational(2 * n) * beta + Rational(n - 6);  // (2n beta + n-6)
  if (!gamma_sq.is_zero()) {
    push_verified("e0_B", CatalogKind::idempotent, e0_coords(s, Rational(n - 2) / gamma_sq, B));
  } else {
    push_verified("z_B", CatalogKind::square_zero, e0_coords(s, Rational(1), B));
  }

  // the three block idempotents of the two-value family, when defined
  const Rational D = Rational(1) - p.beta_plus + p.beta_minus - Rational(4) * p.beta_plus * p.beta_minus;
  if (!D.is_zero()) {
    const Rational ss = (Rational(1) - Rational(2) * p.beta_plus) / D;
    const Rational tt = (p.beta_plus - p.beta_minus) / D;
    Vec sum(static_cast<std::size_t>(n));
    const char* names[3] = {"e_B_i", "e_B_j", "e_B_ij"};
    for (int which = 0; which < 3; ++which) {
      Vec v(static_cast<std::size_t>(n));
      for (int q = 0; q < 3; ++q)
        v[static_cast<std::size_t>(B[static_cast<std::size_t>(q)] - 1)] = (q == which) ? tt : ss;
      sum = add(sum, v);
      // the catalog names the distinguished coordinate: e_B_i has t at B[0]
      push_verified(names[which], CatalogKind::idempotent, std::move(v));
    }
    cat.e_sum_n = std::move(sum);
  }

  if (cat.has_lambda_family) {
    // every lambda with lambda_1+lambda_2+lambda_3 = eps and the squares
    // summing to eps^2 solves; recorded as a descriptor entry
    cat.entries.push_back({"lambda_family", CatalogKind::one_parameter_family,
                           Vec(static_cast<std::size_t>(n))});
  }
  return cat;
}

std::string catalog_to_json(const BlockIdempotentCatalog& c) {
  ordered_json j;
  j["schema"] = "1";
  j["block"] = ordered_json::array({c.block[0], c.block[1], c.block[2]});
  j["beta"] = c.beta.str();
  ordered_json entries = ordered_json::array();
  for (const CatalogEntry& e : c.entries) {
    ordered_json je;
    je["label"] = e.label;
    ordered_json coords = ordered_json::array();
    for (const Rational& x : e.coords_n) coords.push_back(x.str());
    je["coords"] = std::move(coords);
    switch (e.kind) {
      case CatalogKind::idempotent: je["kind"] = "idempotent"; break;
      case CatalogKind::square_zero: je["kind"] = "square_zero"; break;
      case CatalogKind::one_parameter_family: je["kind"] = "one_parameter_family"; break;
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["lambda_family"] = c.has_lambda_family;
  j["collapses_to_generators"] = c.collapses_to_generators;
  return j.dump(2);
}

std::vector<std::vector<Block>> parallel_classes(const SteinerTripleSystem& s) {
  const auto& blocks = s.blocks();
  auto disjoint = [](const Block& a, const Block& b) {
    for (int x : a)
      for (int y : b)
        if (x == y) return false;
    return true;
  };
  std::vector<int> cls(blocks.size(), -1);
  int nclasses = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclasses;
    // grow the component of the disjointness relation
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < blocks.size(); ++x) {
        if (cls[x] != nclasses) continue;
        for (std::size_t y = 0; y < blocks.size(); ++y)
          if (cls[y] < 0 && disjoint(blocks[x], blocks[y])) {
            cls[y] = nclasses;
            changed = true;
          }
      }
    }
    ++nclasses;
  }
  std::vector<std::vector<Block>> out(static_cast<std::size_t>(nclasses));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out[static_cast<std::size_t>(cls[i])].push_back(blocks[i]);
  return out;
}

Ag23Report ag23_decomposition(const SteinerTripleSystem& s, const Rational& beta) {
  if (s.n() != 9) throw Error(ErrorCode::InvalidOrder, "ag23_decomposition needs an STS(9)");
  if (beta == Rational(-1, 6)) throw Error(ErrorCode::ExcludedBeta, "beta = -1/6 has no e0_B");

  Ag23Report rep;
  rep.beta = beta;

  auto classes = parallel_classes(s);
  if (classes.size() != 4)
    throw Error(ErrorCode::InvalidArgument, "system is not resolvable into 4 parallel classes");
  for (std::size_t i = 0; i < 4; ++i) {
    if (classes[i].size() != 3)
      throw Error(ErrorCode::InvalidArgument, "parallel class of unexpected size");
    rep.classes[i] = classes[i];
  }

  Algebra a = build_t_beta(s, beta);
  const Rational scale_factor = Rational(7) / (Rational(18) * beta + 3);  // (n-2)/(2n beta + n - 6)
  auto e0 = [&](const Block& b) { return from_spanning(a, e0_coords(s, scale_factor, b)); };

  rep.class_sums_zero = true;
  rep.within_class_ok = true;
  for (const auto& cl : rep.classes) {
    Vec sum = zero_vec(a.dim());
    for (const Block& b : cl) sum = add(sum, e0(b));
    if (!is_zero_vec(sum)) rep.class_sums_zero = false;
    for (std::size_t x = 0; x < cl.size(); ++x)
      for (std::size_t y = x + 1; y < cl.size(); ++y) {
        Vec lhs = multiply(a, e0(cl[x]), e0(cl[y]));
        Vec rhs = scale(Rational(-1), add(e0(cl[x]), e0(cl[y])));
        if (lhs != rhs) rep.within_class_ok = false;
      }
  }

  // cross-class identity over every point: the four blocks through i lie in
  // distinct classes; product of two block idempotents is proportional to the
  // sum of the other two
  rep.cross_class_ok = true;
  const Rational cross = (Rational(1) - beta) / (Rational(6) * beta + 1);
  for (int i = 1; i <= 9; ++i) {
    const auto& through = s.blocks_through(i);
    for (std::size_t x = 0; x < through.size(); ++x)
      for (std::size_t y = 0; y < through.size(); ++y) {
        if (x == y) continue;
        Vec rest = zero_vec(a.dim());
        for (std::size_t z = 0; z < through.size(); ++z)
          if (z != x && z != y) rest = add(rest, e0(through[z]));
        if (multiply(a, e0(through[x]), e0(through[y])) != scale(cross, rest))
          rep.cross_class_ok = false;
      }
  }

  if (beta == Rational(1)) {
    rep.beta1_direct_sum = rep.class_sums_zero && rep.within_class_ok;
    BilinearForm kf = killing_form(a);
    EchelonBasis all(a.dim());
    for (std::size_t ci = 0; ci < 4 && rep.beta1_direct_sum; ++ci) {
      EchelonBasis cspan(a.dim());
      for (const Block& b : rep.classes[ci]) cspan.insert(e0(b));
      if (cspan.rank() != 2) rep.beta1_direct_sum = false;
      for (const Vec& v : cspan.rows()) all.insert(v);
      for (std::size_t cj = ci + 1; cj < 4; ++cj)
        for (const Block& bx : rep.classes[ci])
          for (const Block& by : rep.classes[cj]) {
            if (!is_zero_vec(multiply(a, e0(bx), e0(by)))) rep.beta1_direct_sum = false;
            if (!dot(e0(bx), kf.gram.apply(e0(by))).is_zero()) rep.beta1_direct_sum = false;
          }
    }
    if (all.rank() != 8) rep.beta1_direct_sum = false;
  }
  return rep;
}

GammaSpectrumReport gamma_block_spectrum(const SteinerTripleSystem& s, const Rational& beta,
                                         const Block& B) {
  const int n = s.n();
  if (!is_hall(s).hall) throw Error(ErrorCode::InvalidArgument, "gamma_block_spectrum needs a Hall system");
  if (!s.has_block(B)) throw Error(ErrorCode::InvalidArgument, "not a block of the system");
  AlgebraParams p = AlgebraParams::t_family(n, beta);
  const Rational gamma_sq = Rational(2 * n) * beta + Rational(n - 6);
  if (gamma_sq.is_zero())
    throw Error(ErrorCode::ExcludedBeta, "no block idempotent at beta = " + beta.str());

  Algebra a = build_t_beta(s, beta);
  GammaSpectrumReport rep;
  rep.block = B;
  rep.beta = beta;

  auto gamma_of = [&](int x, int y, int z) {
    Vec v = add(spanning_vector(a, x), spanning_vector(a, y));
    return add(v, spanning_vector(a, z));
  };
  auto gamma_of_block = [&](const Block& b) { return gamma_of(b[0], b[1], b[2]); };
  auto join_block = [&](int k, const Block& b) {
    return Block{s.join(k, b[0]), s.join(k, b[1]), s.join(k, b[2])};
  };

  const int i = B[0], j = B[1];
  Vec gB = gamma_of_block(B);

  // the six displayed relations, for every k outside the block
  rep.relations_ok = true;
  auto expect = [&](const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) rep.relations_ok = false;
  };
  Vec ei = spanning_vector(a, i), ej = spanning_vector(a, j);
  expect(multiply(a, gB, ei), add(scale(Rational(1) + p.beta_minus, ei), scale(p.beta_plus, gB)));
  expect(multiply(a, gB, sub(ei, ej)), scale(Rational(1) + p.beta_minus, sub(ei, ej)));
  for (int k = 1; k <= n; ++k) {
    if (k == B[0] || k == B[1] || k == B[2]) continue;
    Vec ek = spanning_vector(a, k);
    Block kB = join_block(k, B);
    Vec gkB = gamma_of_block(kB);
    expect(multiply(a, gB, ek),
           add(add(scale(p.alpha, gB), scale(Rational(3) * p.alpha, ek)), scale(p.beta, gkB)));
    Vec diff = sub(spanning_vector(a, s.join(i, k)), spanning_vector(a, s.join(j, k)));
    expect(multiply(a, gB, diff), scale(Rational(3) * (p.beta - 1) / Rational(n - 2), diff));
    Block ikB = join_block(s.join(i, k), B);
    Vec gikB = gamma_of_block(ikB);
    expect(multiply(a, gB, gkB),
           add(scale(Rational(3) * p.alpha, add(gB, gkB)), scale(Rational(3) * p.beta, gikB)));
    expect(multiply(a, gB, sub(gkB, gikB)),
           scale(Rational(3) * p.beta_minus, sub(gkB, gikB)));
  }

  // spectrum of L(e0_B) at the candidate eigenvalues
  const Rational sc = Rational(n - 2) / gamma_sq;
  Vec e0 = scale(sc, gB);
  Matrix L = mult_operator(a, e0);
  std::vector<Rational> cands = {Rational(1), (Rational(1) + p.beta_minus) * sc,
                                 Rational(3) * p.alpha * sc, Rational(3) * p.beta_minus * sc};
  std::vector<Rational> distinct;
  for (const Rational& c : cands)
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  rep.coincidence = distinct.size() != cands.size();

  std::size_t total = 0;
  for (const Rational& lambda : distinct) {
    std::size_t m = eigenspace(L, lambda).size();
    rep.spectrum.emplace_back(lambda, m);
    total += m;
  }
  rep.semisimple = (total == a.dim());

  if (n == 9 && !rep.coincidence) {
    // Table: 1, 2(1-beta)/(6beta+1), (beta-1)/(6beta+1), -1 with
    // multiplicities 1, 2, 4, 1
    const Rational den = Rational(6) * beta + 1;
    std::vector<std::pair<Rational, std::size_t>> expected = {
        {Rational(1), 1},
        {Rational(2) * (Rational(1) - beta) / den, 2},
        {(beta - Rational(1)) / den, 4},
        {Rational(-1), 1}};
    rep.table_ok = true;
    for (const auto& [lambda, mult] : expected) {
      auto it = std::find_if(rep.spectrum.begin(), rep.spectrum.end(),
                             [&](const auto& pr) { return pr.first == lambda; });
      if (it == rep.spectrum.end() || it->second != mult) rep.table_ok = false;
    }
    if (!rep.semisimple) rep.table_ok = false;
  }
  return rep;
}

SquareZeroScan square_zero_scan(const SteinerTripleSystem& s, const Rational& beta) {
  const int n = s.n();
  SquareZeroScan out;
  if (n <= 3) {
    out.note = "no block-span catalog below n = 7";
    return out;
  }
  Algebra a = build_t_beta(s, beta);
  const Rational gamma_sq = Rational(2 * n) * beta + Rational(n - 6);
  out.lambda_family_case = (beta == Rational(-n, 2 * (n - 3)));

  if (gamma_sq.is_zero()) {
    for (const Block& b : s.blocks()) {
      Vec z = e0_coords(s, Rational(1), b);
      if (!solves_eps(a, z, 0))
        throw Error(ErrorCode::InvalidArgument, "z_B failed the square-zero oracle");
      out.found.push_back(std::move(z));
    }
    out.note = "z_B = gamma_B is square-zero for every block at beta = (6-n)/(2n)";
    return out;
  }
  if (out.lambda_family_case) {
    // eps = 0 members need l1+l2+l3 = 0 and l1^2+l2^2+l3^2 = 0; over Q the
    // only solution is 0 (2(l1^2 + l1 l2 + l2^2) = (2 l1 + l2)^2/2 + 3 l2^2/2)
    out.note = "lambda family present, but its eps=0 slice has no nonzero rational point";
    return out;
  }
  out.note = "no square-zero elements in block spans at this beta";
  return out;
}

}  // namespace sal
