#include <algorithm>

#include "doctest.h"
#include "sal/idempotents.hpp"
#include "test_support.hpp"

using namespace sal;
using sal_test::random_vec;

namespace {

Vec indicator(int n, const Block& b, const Rational& value = Rational(1)) {
  Vec v(static_cast<std::size_t>(n));
  for (int p : b) v[static_cast<std::size_t>(p - 1)] = value;
  return v;
}

}  // namespace

TEST_CASE("q_poly") {
  SteinerTripleSystem ag2 = construct_ag(2);
  Block B = {1, 2, 3};

  CHECK(q_poly(ag2, Rational(1, 2), 1, B, Vec(9)) == Rational(0));

  SUBCASE("independent of which non-distinguished point is called j") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
      Vec x = random_vec(rng, 9);
      CHECK(q_poly(ag2, Rational(2, 7), 1, {1, 2, 3}, x) ==
            q_poly(ag2, Rational(2, 7), 1, {1, 3, 2}, x));
    }
  }
  SUBCASE("indicator of the block at beta = 1, n = 9") {
    CHECK(q_poly(ag2, 1, 1, B, indicator(9, B)) == Rational(2));
  }
  CHECK_THROWS_AS(q_poly(ag2, 1, 4, B, Vec(9)), Error);
}

TEST_CASE("check_eps_equation") {
  SteinerTripleSystem fano = construct_fano();

  SUBCASE("generators are idempotent") {
    Vec e1(7);
    e1[0] = 1;
    EpsCheck c = check_eps_equation(fano, Rational(2, 3), 1, e1);
    CHECK(c.solves);
    CHECK(c.nc_consistent);
    CHECK(c.multiply_consistent);
  }
  SUBCASE("block idempotent solves with eps = 1") {
    Rational beta(1, 2);
    // e0_B = (n-2)/(2n beta + n - 6) gamma_B = (5/8) gamma_B on the fano plane
    Vec e0 = indicator(7, {1, 2, 4}, Rational(5, 8));
    EpsCheck c = check_eps_equation(fano, beta, 1, e0);
    CHECK(c.solves);
    CHECK(c.nc_consistent);
    CHECK(c.multiply_consistent);
  }
  SUBCASE("z_B is square-zero exactly at beta = (6-n)/(2n)") {
    Rational special(-1, 14);  // (6-7)/14
    Vec z = indicator(7, {1, 2, 4});
    CHECK(check_eps_equation(fano, special, 0, z).solves);
    CHECK_FALSE(check_eps_equation(fano, Rational(1, 3), 0, z).solves);
  }
  SUBCASE("non-solutions report a failing point, consistently with the tensor") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
      Vec x = random_vec(rng, 7);
      for (int eps : {0, 1}) {
        EpsCheck c = check_eps_equation(fano, Rational(1, 3), eps, x);
        CHECK(c.multiply_consistent);
        if (!c.solves) CHECK(c.failing_point >= 2);
      }
    }
  }
  SUBCASE("verdicts are invariant under the coordinate gauge") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 10; ++t) {
      Vec x = random_vec(rng, 7);
      Vec shifted = x;
      for (auto& c : shifted) c += Rational(5, 2);
      CHECK(check_eps_equation(fano, Rational(1, 3), 1, x).solves ==
            check_eps_equation(fano, Rational(1, 3), 1, shifted).solves);
    }
  }
}

TEST_CASE("block catalog") {
  SteinerTripleSystem fano = construct_fano();

  SUBCASE("beta = 1: e0_B = gamma_B / 3") {
    BlockIdempotentCatalog cat = block_catalog(fano, 1, {1, 2, 4});
    auto e0 = std::find_if(cat.entries.begin(), cat.entries.end(),
                           [](const CatalogEntry& e) { return e.label == "e0_B"; });
    REQUIRE(e0 != cat.entries.end());
    CHECK(e0->coords_n == indicator(7, {1, 2, 4}, Rational(1, 3)));
    // the three e_B^* exist and sum to zero exactly at beta = 1
    REQUIRE(cat.e_sum_n.has_value());
    CHECK(is_zero_vec(*cat.e_sum_n));
  }
  SUBCASE("every entry passes both oracles at a spread of betas") {
    for (const Rational& beta : {Rational(1), Rational(2), Rational(-1, 14), Rational(7, 12),
                                 Rational(-7, 8), Rational(1, 6)}) {
      for (const Block& b : fano.blocks()) {
        BlockIdempotentCatalog cat = block_catalog(fano, beta, b);  // verifies via multiply
        for (const CatalogEntry& e : cat.entries) {
          if (e.kind == CatalogKind::one_parameter_family) continue;
          EpsCheck c = check_eps_equation(fano, beta, e.kind == CatalogKind::idempotent ? 1 : 0,
                                          e.coords_n);
          CHECK(c.solves);
          CHECK(c.nc_consistent);
        }
      }
    }
  }
  SUBCASE("beta = (6-n)/(2n): z_B replaces e0_B") {
    BlockIdempotentCatalog cat = block_catalog(fano, Rational(-1, 14), {1, 2, 4});
    CHECK(std::any_of(cat.entries.begin(), cat.entries.end(),
                      [](const CatalogEntry& e) { return e.label == "z_B"; }));
    CHECK(std::none_of(cat.entries.begin(), cat.entries.end(),
                       [](const CatalogEntry& e) { return e.label == "e0_B"; }));
  }
  SUBCASE("beta = n/(2(n-1)): the e_B^* collapse onto the generators") {
    BlockIdempotentCatalog cat = block_catalog(fano, Rational(7, 12), {1, 2, 4});
    CHECK(cat.collapses_to_generators);
    auto ei = std::find_if(cat.entries.begin(), cat.entries.end(),
                           [](const CatalogEntry& e) { return e.label == "e_B_i"; });
    REQUIRE(ei != cat.entries.end());
    Vec expect(7);
    expect[0] = 1;  // e_1 itself
    CHECK(ei->coords_n == expect);
  }
  SUBCASE("beta = -n/(2(n-3)): lambda family present; the e_B^* lie in it and sum to gamma_B") {
    Rational beta(-7, 8);
    BlockIdempotentCatalog cat = block_catalog(fano, beta, {1, 2, 4});
    CHECK(cat.has_lambda_family);
    CHECK(std::any_of(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& e) {
      return e.kind == CatalogKind::one_parameter_family;
    }));
    REQUIRE(cat.e_sum_n.has_value());
    CHECK(*cat.e_sum_n == indicator(7, {1, 2, 4}));  // gamma_B, not zero
    for (const CatalogEntry& e : cat.entries) {
      if (e.label.rfind("e_B", 0) != 0) continue;
      Rational sum, sq;
      for (const Rational& x : e.coords_n) {
        sum += x;
        sq += x * x;
      }
      CHECK(sum == Rational(1));
      CHECK(sq == Rational(1));
    }
    // arbitrary lambda-family members solve the idempotent system
    Vec member(7);
    member[0] = Rational(2, 3);
    member[1] = Rational(2, 3);
    member[3] = Rational(-1, 3);  // block {1,2,4}
    CHECK(check_eps_equation(fano, beta, 1, member).solves);
    Vec member2(7);
    member2[0] = Rational(3, 7);
    member2[1] = Rational(6, 7);
    member2[3] = Rational(-2, 7);
    CHECK(check_eps_equation(fano, beta, 1, member2).solves);
  }
  SUBCASE("the beta = 1 quadruple spans the block and is not a simplicial 3-space") {
    // products inside span{e_i, e_j, e_{i∘j}}: e0 annihilates the differences
    // and the three e_B^* follow the plane relations, so the subalgebra has a
    // 2-dimensional ideal; the 3-dimensional simplicial algebra is simple, so
    // no isomorphism exists
    Algebra a = build_t_beta(fano, 1);
    BlockIdempotentCatalog cat = block_catalog(fano, 1, {1, 2, 4});
    auto coords = [&](const char* label) {
      auto it = std::find_if(cat.entries.begin(), cat.entries.end(),
                             [&](const CatalogEntry& e) { return e.label == label; });
      REQUIRE(it != cat.entries.end());
      return from_spanning(a, it->coords_n);
    };
    Vec e0 = coords("e0_B"), fi = coords("e_B_i"), fj = coords("e_B_j"), ft = coords("e_B_ij");
    CHECK(is_zero_vec(multiply(a, e0, fi)));
    CHECK(multiply(a, fi, fj) == ft);
    CHECK(multiply(a, fi, fi) == fi);
    CHECK(add(add(fi, fj), ft) == zero_vec(a.dim()));
    // span{fi, fj} is an ideal of the generated subalgebra = span{e0, fi, fj}
    EchelonBasis sub_span(a.dim());
    sub_span.insert(e0);
    sub_span.insert(fi);
    sub_span.insert(fj);
    CHECK(sub_span.rank() == 3);
    EchelonBasis plane(a.dim());
    plane.insert(fi);
    plane.insert(fj);
    for (const Vec& x : {e0, fi, fj})
      for (const Vec& y : {fi, fj}) CHECK(plane.contains(multiply(a, x, y)));
    CHECK(is_simple(build_simplicial(4)).status == Simplicity::simple);
  }
  CHECK_THROWS_AS(block_catalog(fano, 1, {1, 2, 3}), Error);  // not a block
}

TEST_CASE("parallel classes of the affine plane") {
  auto classes = parallel_classes(construct_ag(2));
  REQUIRE(classes.size() == 4);
  for (const auto& cl : classes) {
    CHECK(cl.size() == 3);
    std::vector<bool> seen(9, false);
    for (const Block& b : cl)
      for (int p : b) seen[static_cast<std::size_t>(p - 1)] = true;
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
  }
}

TEST_CASE("ag23 decomposition") {
  SteinerTripleSystem ag2 = construct_ag(2);

  SUBCASE("identities hold at generic beta") {
    for (const Rational& beta : {Rational(0), Rational(1, 3), Rational(-4, 3)}) {
      Ag23Report r = ag23_decomposition(ag2, beta);
      CHECK(r.class_sums_zero);
      CHECK(r.within_class_ok);
      CHECK(r.cross_class_ok);
    }
  }
  SUBCASE("beta = 1 splits into four orthogonal planes") {
    Ag23Report r = ag23_decomposition(ag2, 1);
    CHECK(r.beta1_direct_sum);
  }
  SUBCASE("cross-class constant at beta = 0 is 1") {
    // direct instance of the cross-product identity
    Algebra a = build_t_beta(ag2, 0);
    auto e0 = [&](const Block& b) {
      return from_spanning(a, indicator(9, b, Rational(7, 3)));  // (n-2)/(n-6) = 7/3
    };
    Vec lhs = multiply(a, e0({1, 2, 3}), e0({1, 4, 7}));
    Vec rhs = add(e0({1, 5, 9}), e0({1, 6, 8}));
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(ag23_decomposition(ag2, Rational(-1, 6)), Error);
  CHECK_THROWS_AS(ag23_decomposition(construct_fano(), 1), Error);
}

TEST_CASE("gamma block spectrum") {
  SteinerTripleSystem ag2 = construct_ag(2);

  SUBCASE("full spectrum at beta = 1/3") {
    GammaSpectrumReport r = gamma_block_spectrum(ag2, Rational(1, 3), {1, 2, 3});
    CHECK(r.relations_ok);
    CHECK(r.semisimple);
    CHECK(r.table_ok);
    auto find_mult = [&](const Rational& lambda) {
      auto it = std::find_if(r.spectrum.begin(), r.spectrum.end(),
                             [&](const auto& p) { return p.first == lambda; });
      return it == r.spectrum.end() ? std::size_t(0) : it->second;
    };
    CHECK(find_mult(Rational(1)) == 1);
    CHECK(find_mult(Rational(4, 9)) == 2);
    CHECK(find_mult(Rational(-2, 9)) == 4);
    CHECK(find_mult(Rational(-1)) == 1);
  }
  SUBCASE("the -1 eigenvector is the difference of the parallel block idempotents") {
    Rational beta(1, 3);
    Algebra a = build_t_beta(ag2, beta);
    Rational sc = Rational(7) / (Rational(18) * beta + 3);
    Vec e0_123 = from_spanning(a, indicator(9, {1, 2, 3}, sc));
    Vec v = sub(from_spanning(a, indicator(9, {7, 8, 9}, sc)),
                from_spanning(a, indicator(9, {4, 5, 6}, sc)));
    CHECK(multiply(a, e0_123, v) == scale(Rational(-1), v));
  }
  SUBCASE("beta = -4/3 gives eigenvalues (1, -2/3, 1/3, -1) with mults (1,2,4,1)") {
    GammaSpectrumReport r = gamma_block_spectrum(ag2, Rational(-4, 3), {1, 2, 3});
    CHECK(r.table_ok);
    std::vector<std::pair<Rational, std::size_t>> expect = {
        {Rational(1), 1}, {Rational(-2, 3), 2}, {Rational(1, 3), 4}, {Rational(-1), 1}};
    CHECK(r.spectrum == expect);
  }
  SUBCASE("multiplicities always fill the algebra off coincidences") {
    GammaSpectrumReport r = gamma_block_spectrum(ag2, Rational(2, 5), {1, 4, 7});
    std::size_t total = 0;
    for (const auto& [lam, mult] : r.spectrum) total += mult;
    CHECK(total == 8);
  }
  SUBCASE("relations hold on the bigger Hall system") {
    SteinerTripleSystem ag3 = construct_ag(3);
    GammaSpectrumReport r = gamma_block_spectrum(ag3, Rational(1, 2), ag3.blocks().front());
    CHECK(r.relations_ok);
    // above n = 9 the four displayed eigenvalues are lower bounds only:
    // each eigenspace is nonempty but need not exhaust the algebra
    std::size_t total = 0;
    for (const auto& [lam, mult] : r.spectrum) {
      CHECK(mult >= 1);
      total += mult;
    }
    CHECK(r.spectrum.front() == std::pair(Rational(1), std::size_t(1)));
    CHECK(total <= 26);
  }
  CHECK_THROWS_AS(gamma_block_spectrum(construct_skolem(13), 1, {1, 2, 3}), Error);
  CHECK_THROWS_AS(gamma_block_spectrum(ag2, Rational(-1, 6), {1, 2, 3}), Error);
}

TEST_CASE("square-zero scan") {
  SteinerTripleSystem fano = construct_fano();

  SUBCASE("z_B appears for every block at the special beta") {
    SquareZeroScan s = square_zero_scan(fano, Rational(-1, 14));
    CHECK(s.found.size() == 7);
  }
  SUBCASE("nothing in block spans at generic beta") {
    CHECK(square_zero_scan(fano, 0).found.empty());
    CHECK(square_zero_scan(fano, Rational(2, 3)).found.empty());
  }
  SUBCASE("the eps = 0 lambda family has no nonzero rational members") {
    Rational beta(-7, 8);
    SquareZeroScan s = square_zero_scan(fano, beta);
    CHECK(s.lambda_family_case);
    CHECK(s.found.empty());
    // spot-check: candidates with the right sum but nonzero square-sum fail
    for (auto [l1, l2] : {std::pair{Rational(1), Rational(1)}, {Rational(1, 2), Rational(-1, 3)},
                          {Rational(-2, 5), Rational(7, 4)}}) {
      Vec cand(7);
      cand[0] = l1;
      cand[1] = l2;
      cand[3] = -(l1 + l2);  // block {1,2,4}, sum zero
      CHECK_FALSE(check_eps_equation(fano, beta, 0, cand).solves);
    }
  }
}

TEST_CASE("catalog json") {
  SteinerTripleSystem fano = construct_fano();
  std::string j = catalog_to_json(block_catalog(fano, 1, {1, 2, 4}));
  CHECK(j.find("\"block\"") != std::string::npos);
  CHECK(j.find("\"beta\": \"1/1\"") != std::string::npos);
  CHECK(j.find("e0_B") != std::string::npos);
  CHECK(j.find("\"kind\": \"idempotent\"") != std::string::npos);
}
