#include "sal/report.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "json.hpp"
#include "sal/axial.hpp"
#include "sal/idempotents.hpp"

namespace sal {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& x : v) a.push_back(x.str());
  return a;
}

struct CheckRecorder {
  ordered_json verdicts = ordered_json::object();
  int failed = 0;
  int undecided = 0;
  bool timings = false;
  ordered_json times = ordered_json::object();

  void record(const std::string& name, const std::string& status, ordered_json details,
              double ms) {
    details["status"] = status;
    // status first for readability
    ordered_json entry;
    entry["status"] = status;
    for (auto& [k, v] : details.items())
      if (k != "status") entry[k] = v;
    verdicts[name] = std::move(entry);
    if (status == "fail") ++failed;
    if (status == "undecided") ++undecided;
    if (timings) times[name] = ms;
  }
};

template <typename F>
void run_check(CheckRecorder& rec, const std::vector<std::string>& wanted,
               const std::string& name, F&& f) {
  if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) return;
  auto t0 = std::chrono::steady_clock::now();
  std::string status;
  ordered_json details = ordered_json::object();
  try {
    status = f(details);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ExcludedBeta) {
      status = "excluded";
      details["reason"] = e.what();
    } else if (e.code() == ErrorCode::ClosureCapExceeded) {
      status = "fail";
      details["reason"] = e.what();
    } else {
      throw;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec.record(name, status, std::move(details), ms);
}

Rational neg_ratio_beta(int n) { return Rational(-(n - 1), n - 3); }

// deterministic small random rationals for the frame test
Vec random_vec(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Vec v(dim);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "exactness",        "killing_gram",     "killing_invariance", "positive_definite",
      "tight_frame",      "axis_decomposition", "fusion_law",       "miyamoto_group",
      "simplicity",       "block_catalog",    "ag23_decomposition", "gamma_spectrum"};
  return names;
}

std::vector<Rational> transitional_betas(int n) {
  if (n <= 3) return {Rational(0), Rational(1)};
  return {Rational(-(n - 1), n - 3), Rational(-n, 2 * (n - 3)), Rational(-1, n - 3),
          Rational(0),               Rational(1, n - 1),        Rational(n, 2 * (n - 1)),
          Rational(1)};
}

AnalyzeOutcome analyze(const SteinerTripleSystem& s, const Rational& beta,
                       const AnalyzeOptions& opts) {
  const int n = s.n();
  const bool hall = is_hall(s).hall;
  Algebra a = build_t_beta(s, beta);
  const AlgebraParams& p = a.params();
  BilinearForm kf = killing_form(a);

  CheckRecorder rec;
  rec.timings = opts.include_timings;
  const auto& wanted = opts.checks;

  run_check(rec, wanted, "exactness", [&](ordered_json&) {
    return is_exact(a) ? "pass" : "fail";
  });

  run_check(rec, wanted, "killing_gram", [&](ordered_json& d) {
    d["omega"] = p.omega.str();
    return gram_identity_check(a) ? "pass" : "fail";
  });

  run_check(rec, wanted, "killing_invariance", [&](ordered_json& d) {
    InvarianceCheck c = check_invariance(a, kf);
    if (!c.ok)
      d["witness"] = ordered_json::array({c.witness[0] + 1, c.witness[1] + 1, c.witness[2] + 1});
    return c.ok ? "pass" : "fail";
  });

  run_check(rec, wanted, "positive_definite", [&](ordered_json&) {
    return is_positive_definite(kf.gram) ? "pass" : "fail";
  });

  run_check(rec, wanted, "tight_frame", [&](ordered_json& d) {
    d["frame_constant"] = (Rational(n) * p.omega / Rational(n - 2)).str();
    std::mt19937_64 rng(opts.rng_seed ^ (static_cast<std::uint64_t>(n) << 32));
    for (int k = 1; k <= n; ++k)
      if (!tight_frame_check(a, kf, spanning_vector(a, k))) return "fail";
    for (int t = 0; t < opts.frame_samples; ++t)
      if (!tight_frame_check(a, kf, random_vec(rng, a.dim()))) return "fail";
    d["samples"] = opts.frame_samples;
    return "pass";
  });

  run_check(rec, wanted, "axis_decomposition", [&](ordered_json& d) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      AxisDecomposition dec = decompose_axis(a, i);
      if (!dec.spanning_formulas_ok || dec.total_dim() != a.dim()) ok = false;
      switch (dec.regime) {
        case AxisRegime::generic:
          ok = ok && dec.eigen_1.size() == 1 &&
               dec.eigen_plus.size() == static_cast<std::size_t>((n - 3) / 2) &&
               dec.eigen_minus.size() == static_cast<std::size_t>((n - 1) / 2);
          break;
        case AxisRegime::beta_is_1:
          ok = ok && dec.eigen_1.size() == static_cast<std::size_t>((n - 1) / 2) &&
               dec.eigen_minus.size() == static_cast<std::size_t>((n - 1) / 2);
          break;
        case AxisRegime::beta_is_neg_ratio:
          ok = ok && dec.eigen_1.size() == static_cast<std::size_t>(1 + (n - 1) / 2) &&
               dec.eigen_plus.size() == static_cast<std::size_t>((n - 3) / 2);
          break;
        case AxisRegime::beta_is_0:
          ok = ok && dec.eigen_1.size() == 1 &&
               dec.eigen_plus.size() == static_cast<std::size_t>(n - 2);
          break;
      }
      if (i == 1) d["regime"] = axis_regime_name(dec.regime);
    }
    return ok ? "pass" : "fail";
  });

  run_check(rec, wanted, "fusion_law", [&](ordered_json& d) {
    FusionLaw law = fusion_table_for(n, beta);  // throws ExcludedBeta at the 3 values
    d["law"] = law.name;
    d["hall"] = hall;
    bool all_ok = true;
    ordered_json witness;
    for (int i = 1; i <= n; ++i) {
      FusionCheck c = verify_fusion(a, i, law);
      if (!c.ok) {
        all_ok = false;
        witness["axis"] = i;
        witness["lambda"] = c.lambda.str();
        witness["mu"] = c.mu.str();
        witness["product_coords"] = vec_json(c.product);
        break;
      }
    }
    d["fusion_holds"] = all_ok;
    if (!all_ok) d["witness"] = std::move(witness);
    // fusion holds for every axis exactly when the system is Hall
    return all_ok == hall ? "pass" : "fail";
  });

  run_check(rec, wanted, "miyamoto_group", [&](ordered_json& d) {
    if (!hall) {
      d["reason"] = "point-permutation group only; the involutions are not algebra automorphisms";
      return "excluded";
    }
    MiyamotoGroup g = miyamoto_group(s, opts.closure_cap);
    d["order"] = g.order;
    d["commutator_order"] = g.commutator_order;
    d["abelianization_order"] = g.abelianization_order;
    ThreeTranspositionCheck t = three_transposition_check(s, g);
    d["three_transposition"] = t.ok;
    return t.ok && g.generators_are_automorphisms ? "pass" : "fail";
  });

  run_check(rec, wanted, "simplicity", [&](ordered_json& d) {
    SimplicityVerdict v = is_simple(a);
    d["verdict"] = v.status == Simplicity::simple      ? "simple"
                    : v.status == Simplicity::not_simple ? "not_simple"
                                                         : "undecided";
    d["method"] = v.method;
    if (v.witness) d["witness_ideal_dim"] = v.witness->dim;
    const bool generic = beta != Rational(1) && (n <= 3 || beta != neg_ratio_beta(n));
    if (generic) return v.status == Simplicity::simple ? "pass" : "fail";
    if (v.status == Simplicity::undecided) return "undecided";
    return "pass";  // a verified verdict either way at the exceptional values
  });

  run_check(rec, wanted, "block_catalog", [&](ordered_json& d) {
    if (n <= 3) {
      d["reason"] = "catalog defined for n > 3";
      return "excluded";
    }
    std::size_t entries = 0;
    for (const Block& b : s.blocks()) {
      BlockIdempotentCatalog cat = block_catalog(s, beta, b);  // verifies internally
      for (const CatalogEntry& e : cat.entries) {
        if (e.kind == CatalogKind::one_parameter_family) continue;
        EpsCheck c = check_eps_equation(s, beta, e.kind == CatalogKind::idempotent ? 1 : 0,
                                        e.coords_n);
        if (!c.solves || !c.nc_consistent || !c.multiply_consistent) return "fail";
        ++entries;
      }
    }
    d["entries_verified"] = entries;
    return "pass";
  });

  run_check(rec, wanted, "ag23_decomposition", [&](ordered_json& d) {
    if (n != 9) {
      d["reason"] = "specific to STS(9)";
      return "excluded";
    }
    Ag23Report r = ag23_decomposition(s, beta);  // throws ExcludedBeta at -1/6
    d["class_sums_zero"] = r.class_sums_zero;
    d["within_class_ok"] = r.within_class_ok;
    d["cross_class_ok"] = r.cross_class_ok;
    bool ok = r.class_sums_zero && r.within_class_ok && r.cross_class_ok;
    if (beta == Rational(1)) {
      d["fourfold_direct_sum"] = r.beta1_direct_sum;
      ok = ok && r.beta1_direct_sum;
    }
    return ok ? "pass" : "fail";
  });

  run_check(rec, wanted, "gamma_spectrum", [&](ordered_json& d) {
    if (!hall) {
      d["reason"] = "block-idempotent spectra are pinned down for Hall systems only";
      return "excluded";
    }
    GammaSpectrumReport r = gamma_block_spectrum(s, beta, s.blocks().front());
    d["relations_ok"] = r.relations_ok;
    ordered_json spec = ordered_json::array();
    for (const auto& [lambda, mult] : r.spectrum)
      spec.push_back(ordered_json::array({lambda.str(), mult}));
    d["spectrum"] = std::move(spec);
    if (n == 9) {
      if (r.coincidence) {
        d["coincidence"] = true;
        return r.relations_ok ? "pass" : "fail";
      }
      d["table_ok"] = r.table_ok;
      return r.relations_ok && r.table_ok ? "pass" : "fail";
    }
    // above n = 9 the displayed eigenvalues are lower bounds only
    d["note"] = "spectrum entries are lower bounds for n > 9";
    return r.relations_ok ? "pass" : "fail";
  });

  ordered_json j;
  j["schema"] = "1";
  ordered_json sys;
  sys["n"] = n;
  sys["b"] = s.block_count();
  sys["r"] = s.replication();
  sys["hall"] = hall;
  j["system"] = std::move(sys);
  j["beta"] = beta.str();
  ordered_json params;
  params["alpha"] = p.alpha.str();
  params["beta_plus"] = p.beta_plus.str();
  params["beta_minus"] = p.beta_minus.str();
  params["omega"] = p.omega.str();
  j["params"] = std::move(params);
  j["verdicts"] = std::move(rec.verdicts);
  if (opts.include_timings) j["timings_ms"] = std::move(rec.times);

  return {j.dump(2), rec.failed, rec.undecided};
}

std::string sweep_json(const SteinerTripleSystem& s, const std::vector<Rational>& betas,
                       const AnalyzeOptions&) {
  const int n = s.n();
  std::vector<Rational> all = betas;
  for (const Rational& t : transitional_betas(n))
    if (std::find(all.begin(), all.end(), t) == all.end()) all.push_back(t);

  ordered_json rows = ordered_json::array();
  for (const Rational& beta : all) {
    AlgebraParams p = AlgebraParams::t_family(n, beta);
    ordered_json row;
    row["beta"] = beta.str();
    row["beta_plus"] = p.beta_plus.str();
    row["beta_minus"] = p.beta_minus.str();
    row["omega"] = p.omega.str();
    ordered_json flags = ordered_json::array();
    auto flag = [&](const Rational& v, const char* name, const char* which) {
      if ((which[0] == '+' ? p.beta_plus : p.beta_minus) == v)
        flags.push_back(std::string("beta_") + (which[0] == '+' ? "plus" : "minus") + " = " + name);
    };
    flag(Rational(1), "1", "+");
    flag(Rational(1), "1", "-");
    flag(Rational(0), "0", "+");
    flag(Rational(0), "0", "-");
    flag(Rational(1, 2), "1/2", "+");
    flag(Rational(1, 2), "1/2", "-");
    if (p.beta_plus == p.beta_minus) flags.push_back("beta_plus = beta_minus");
    row["flags"] = std::move(flags);
    Algebra a = build_t_beta(s, beta);
    SimplicityVerdict v = is_simple(a);
    row["simplicity"] = v.status == Simplicity::simple      ? "simple"
                         : v.status == Simplicity::not_simple ? "not_simple"
                                                              : "undecided";
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["schema"] = "1";
  j["n"] = n;
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string catalog_json(const SteinerTripleSystem& s, const Rational& beta) {
  ordered_json arr = ordered_json::array();
  for (const Block& b : s.blocks())
    arr.push_back(ordered_json::parse(catalog_to_json(block_catalog(s, beta, b))));
  ordered_json j;
  j["schema"] = "1";
  j["beta"] = beta.str();
  j["catalogs"] = std::move(arr);
  return j.dump(2);
}

std::string group_json(const SteinerTripleSystem& s, std::uint64_t cap) {
  MiyamotoGroup g = miyamoto_group(s, cap);
  ThreeTranspositionCheck t = three_transposition_check(s, g);
  ordered_json j;
  j["schema"] = "1";
  j["n"] = s.n();
  j["hall"] = g.generators_are_automorphisms;
  if (!g.generators_are_automorphisms)
    j["note"] = "point-permutation group, not algebra automorphisms";
  j["order"] = g.order;
  j["commutator_order"] = g.commutator_order;
  j["abelianization_order"] = g.abelianization_order;
  ordered_json tt;
  tt["ok"] = t.ok;
  tt["involutions"] = t.involutions_ok;
  tt["braid"] = t.braid_ok;
  tt["pair_products_order_3"] = t.product_order3_ok;
  tt["commutator_power_of_3"] = t.commutator_power_of_3;
  j["three_transposition"] = std::move(tt);
  return j.dump(2);
}

std::string validate_json(const BlockSet& b) {
  ordered_json j;
  j["schema"] = "1";
  j["n"] = b.n;
  j["blocks"] = b.blocks.size();
  ReplicationProfile prof = validate_psts(b);
  j["regular"] = prof.regular;
  if (prof.regular) j["r"] = prof.r;
  ordered_json rep = ordered_json::array();
  for (int r : prof.per_point) rep.push_back(r);
  j["replication"] = std::move(rep);
  bool sts = true;
  std::string why;
  try {
    SteinerTripleSystem s = as_sts(b);
    j["sts"] = true;
    j["hall"] = is_hall(s).hall;
  } catch (const Error& e) {
    sts = false;
    why = e.what();
  }
  if (!sts) {
    j["sts"] = false;
    j["sts_error"] = why;
  }
  return j.dump(2);
}

}  // namespace sal
