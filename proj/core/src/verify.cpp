#include "eulerhaar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "eulerhaar/admissible.hpp"
#include "eulerhaar/euler.hpp"
#include "eulerhaar/finite_type.hpp"
#include "eulerhaar/generators.hpp"
#include "eulerhaar/hull.hpp"
#include "eulerhaar/integrate.hpp"
#include "eulerhaar/quadrature.hpp"
#include "eulerhaar/rng.hpp"
#include "eulerhaar/sampling.hpp"

namespace eulerhaar::verify {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

CheckResult check(std::string name, bool pass, std::string details = {}) {
  return {std::move(name), pass, std::move(details)};
}

}  // namespace

// ---- criterion 1: generator exactness ----

SuiteResult run_generators(const VerifyConfig&) {
  SuiteResult suite{"generators", {}};
  bool all_ok = true;
  std::string first_fail;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n * n - 1; ++i) {
      const ComplexMatrix lam = generator(n, i);
      bool ok = true;
      // anti-Hermitian and traceless, exactly
      ok = ok && (lam + lam.adjoint()).cwiseAbs().maxCoeff() == 0.0;
      ok = ok && lam.trace() == std::complex<double>(0.0, 0.0);
      for (int r = 0; r < n && ok; ++r) {
        for (int c = 0; c < n && ok; ++c) {
          const std::complex<double> e = lam(r, c);
          const bool allowed =
              (e == std::complex<double>(0, 0)) ||
              (e == std::complex<double>(1, 0)) ||
              (e == std::complex<double>(-1, 0)) ||
              (e == std::complex<double>(0, 1)) ||
              (e == std::complex<double>(0, -1));
          ok = ok && allowed;
        }
      }
      if (!ok && all_ok) {
        all_ok = false;
        first_fail = "lambda_" + std::to_string(i) + " at n=" + std::to_string(n);
      }
    }
  }
  suite.checks.push_back(check("generators_exact_n2_to_n6", all_ok,
                               all_ok ? "all entries in {0,+-1,+-i}" : first_fail));
  return suite;
}

// ---- criterion 2: parametrization validity ----

SuiteResult run_parametrization(const VerifyConfig& cfg) {
  SuiteResult suite{"parametrization", {}};
  RandomStream rng(RandomStream(cfg.seed).split(2).seed());
  for (int n = 2; n <= 5; ++n) {
    double max_unitary = 0.0;
    double max_det = 0.0;
    for (int d = 0; d < cfg.param_draws; ++d) {
      const EulerCoordinates c = sample_haar_coords(n, rng);
      const GroupElement g = to_group(c);  // ctor re-checks invariants
      max_unitary = std::max(max_unitary, unitarity_defect(g.matrix()));
      max_det = std::max(max_det, determinant_defect(g.matrix()));
    }
    const bool ok = max_unitary <= 1e-12 && max_det <= 1e-12;
    suite.checks.push_back(check(
        "chart_valid_n" + std::to_string(n), ok,
        "max unitarity defect " + fmt(max_unitary) + ", max det defect " +
            fmt(max_det)));
  }
  return suite;
}

// ---- criterion 3: SU(2) round trip ----

SuiteResult run_su2_roundtrip(const VerifyConfig& cfg) {
  SuiteResult suite{"su2_roundtrip", {}};
  RandomStream rng(RandomStream(cfg.seed).split(3).seed());
  double worst = 0.0;
  for (int d = 0; d < cfg.roundtrip_draws; ++d) {
    const EulerCoordinates c = sample_haar_coords(2, rng);
    const EulerCoordinates back = invert_su2(to_group(c));
    worst = std::max(worst, std::abs(back.phi[0] - c.phi[0]));
    worst = std::max(worst, std::abs(back.psi[0] - c.psi[0]));
    worst = std::max(worst, std::abs(back.omega[0] - c.omega[0]));
  }
  suite.checks.push_back(check("roundtrip_identity", worst <= 1e-12,
                               "max coordinate error " + fmt(worst)));
  return suite;
}

// ---- criterion 4: Haar factorization via two-sampler moment battery ----

namespace {

struct Moment {
  std::string name;
  std::function<std::complex<double>(const GroupElement&)> eval;
  std::complex<double> expected;
};

std::vector<Moment> moment_battery(int n) {
  std::vector<Moment> moments;
  // All diagonal pair moments E[g_ij conj(g_ij)] = 1/n first.
  for (int i = 0; i < n && moments.size() < 20; ++i) {
    for (int j = 0; j < n && moments.size() < 20; ++j) {
      moments.push_back(
          {"E|g" + std::to_string(i + 1) + std::to_string(j + 1) + "|^2",
           [i, j](const GroupElement& g) {
             return g.entry(i, j) * std::conj(g.entry(i, j));
           },
           {1.0 / n, 0.0}});
    }
  }
  // Zero-expectation cross moments in lexicographic order.
  for (int i = 0; i < n && moments.size() < 20; ++i) {
    for (int j = 0; j < n && moments.size() < 20; ++j) {
      for (int k = 0; k < n && moments.size() < 20; ++k) {
        for (int l = 0; l < n && moments.size() < 20; ++l) {
          if (i == k && j == l) continue;
          moments.push_back(
              {"E[g" + std::to_string(i + 1) + std::to_string(j + 1) +
                   " conj(g" + std::to_string(k + 1) + std::to_string(l + 1) +
                   ")]",
               [i, j, k, l](const GroupElement& g) {
                 return g.entry(i, j) * std::conj(g.entry(k, l));
               },
               {0.0, 0.0}});
        }
      }
    }
  }
  if (n == 2) {
    // Fill to 20 with quartic fixtures known in closed form on SU(2).
    auto abs4 = [](std::complex<double> z) {
      const double a = std::norm(z);
      return std::complex<double>(a * a, 0.0);
    };
    moments.push_back({"E|g11|^4",
                       [abs4](const GroupElement& g) { return abs4(g.entry(0, 0)); },
                       {1.0 / 3.0, 0.0}});
    moments.push_back({"E|g12|^4",
                       [abs4](const GroupElement& g) { return abs4(g.entry(0, 1)); },
                       {1.0 / 3.0, 0.0}});
    moments.push_back({"E|g11|^2|g12|^2",
                       [](const GroupElement& g) {
                         return std::complex<double>(
                             std::norm(g.entry(0, 0)) * std::norm(g.entry(0, 1)),
                             0.0);
                       },
                       {1.0 / 6.0, 0.0}});
    moments.push_back({"E|g11|^2|g22|^2",
                       [](const GroupElement& g) {
                         return std::complex<double>(
                             std::norm(g.entry(0, 0)) * std::norm(g.entry(1, 1)),
                             0.0);
                       },
                       {1.0 / 3.0, 0.0}});
  }
  return moments;
}

struct SweepEstimate {
  std::complex<double> mean;
  double stderr_est;
};

// One streaming pass evaluating every battery moment on shared samples.
std::vector<SweepEstimate> moment_sweep(
    const std::vector<Moment>& moments, int n, std::size_t samples,
    SamplerKind sampler, RandomStream& rng) {
  std::vector<std::complex<double>> sums(moments.size(), {0.0, 0.0});
  std::vector<double> sumsq(moments.size(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    const GroupElement g = sampler == SamplerKind::qr
                               ? sample_su_qr(n, rng)
                               : to_group(sample_haar_coords(n, rng));
    for (std::size_t m = 0; m < moments.size(); ++m) {
      const std::complex<double> v = moments[m].eval(g);
      sums[m] += v;
      sumsq[m] += std::norm(v);
    }
  }
  std::vector<SweepEstimate> out(moments.size());
  for (std::size_t m = 0; m < moments.size(); ++m) {
    const auto mean = sums[m] / static_cast<double>(samples);
    const double scatter =
        std::max(0.0, sumsq[m] - static_cast<double>(samples) * std::norm(mean));
    out[m].mean = mean;
    out[m].stderr_est =
        std::sqrt(scatter / static_cast<double>(samples - 1)) /
        std::sqrt(static_cast<double>(samples));
  }
  return out;
}

}  // namespace

SuiteResult run_haar_agreement(const VerifyConfig& cfg) {
  SuiteResult suite{"haar", {}};
  for (int n = 2; n <= 4; ++n) {
    const auto moments = moment_battery(n);
    RandomStream rng_euler(RandomStream(cfg.seed).split(40 + n).seed());
    RandomStream rng_qr(RandomStream(cfg.seed).split(50 + n).seed());
    const auto euler = moment_sweep(moments, n, cfg.haar_samples,
                                    SamplerKind::euler, rng_euler);
    const auto qr =
        moment_sweep(moments, n, cfg.haar_samples, SamplerKind::qr, rng_qr);
    int worst_idx = -1;
    double worst_pull = 0.0;
    bool ok = true;
    for (std::size_t m = 0; m < moments.size(); ++m) {
      // Zero-variance guard: exact moments (none here) would have stderr 0.
      const double tiny = 1e-12;
      const double pull_e = std::abs(euler[m].mean - moments[m].expected) /
                            (euler[m].stderr_est + tiny);
      const double pull_q = std::abs(qr[m].mean - moments[m].expected) /
                            (qr[m].stderr_est + tiny);
      const double cross = std::abs(euler[m].mean - qr[m].mean) /
                           (std::hypot(euler[m].stderr_est, qr[m].stderr_est) +
                            tiny);
      const double pull = std::max({pull_e, pull_q, cross});
      if (pull > worst_pull) {
        worst_pull = pull;
        worst_idx = static_cast<int>(m);
      }
      ok = ok && pull <= 4.0;
    }
    suite.checks.push_back(check(
        "moment_battery_n" + std::to_string(n), ok,
        "worst pull " + fmt(worst_pull) + " sigma at " +
            (worst_idx >= 0 ? moments[worst_idx].name : "none") + ", " +
            std::to_string(cfg.haar_samples) + " samples/sampler"));
  }
  return suite;
}

// ---- criterion 5: closed-form monomial integrals vs Monte Carlo ----

namespace {

FiniteTypeMonomial random_monomial(int n, RandomStream& rng) {
  FiniteTypeMonomial f;
  f.n = n;
  const bool torus_free = rng.uniform() < 0.5;
  for (int m = n; m >= 2; --m) {
    MonomialLevel lv;
    for (int i = 0; i < m - 1; ++i) {
      lv.k.push_back(torus_free ? 0 : static_cast<int>(rng.next_u64() % 5) - 2);
      lv.sin_exp.push_back(static_cast<int>(rng.next_u64() % 5));
      lv.cos_exp.push_back(static_cast<int>(rng.next_u64() % 5));
    }
    lv.l = torus_free ? 0 : static_cast<int>(rng.next_u64() % 5) - 2;
    f.levels.push_back(std::move(lv));
  }
  const int num = static_cast<int>(rng.next_u64() % 7) - 3;
  f.c = RationalComplex{Rational(num == 0 ? 1 : num),
                        Rational(static_cast<int>(rng.next_u64() % 3) - 1)};
  return f;
}

}  // namespace

SuiteResult run_monomial_mc(const VerifyConfig& cfg) {
  SuiteResult suite{"monomial_mc", {}};
  RandomStream master(RandomStream(cfg.seed).split(5).seed());

  // Exact fixtures first: E|g12|^2 = 1/2 and E|g11|^4 = 1/3 on SU(2).
  {
    FiniteTypeMonomial f;
    f.n = 2;
    f.levels.push_back({{0}, {2}, {0}, 0});
    const ExactComplex v = haar_integral(f);
    suite.checks.push_back(
        check("fixture_E|g12|^2", v == ExactComplex{RationalComplex{Rational(1, 2)}},
              "got " + format_rational_complex(v.coeff)));
  }
  {
    FiniteTypeMonomial f;
    f.n = 2;
    f.levels.push_back({{0}, {0}, {4}, 0});
    const ExactComplex v = haar_integral(f);
    suite.checks.push_back(
        check("fixture_E|g11|^4", v == ExactComplex{RationalComplex{Rational(1, 3)}},
              "got " + format_rational_complex(v.coeff)));
  }

  double worst_pull = 0.0;
  bool all_ok = true;
  std::string worst_name;
  for (int c = 0; c < cfg.monomial_cases; ++c) {
    const int n = c % 2 == 0 ? 2 : 3;
    RandomStream rng = master.split(100 + c);
    const FiniteTypeMonomial f = random_monomial(n, rng);
    const std::complex<double> exact = haar_integral(f).to_complex();
    const MCEstimate mc = mc_integrate_coords(
        [&f](const EulerCoordinates& coords) { return evaluate_at(f, coords); },
        n, cfg.moment_samples, rng);
    const double pull =
        std::abs(mc.mean - exact) / (mc.stderr_est + 1e-12);
    if (pull > worst_pull) {
      worst_pull = pull;
      worst_name = "case " + std::to_string(c) + " (n=" + std::to_string(n) + ")";
    }
    all_ok = all_ok && pull <= 4.0;
  }
  suite.checks.push_back(
      check("random_monomials_within_4sigma", all_ok,
            std::to_string(cfg.monomial_cases) + " cases, worst pull " +
                fmt(worst_pull) + " sigma at " + worst_name));
  return suite;
}

// ---- criterion 6: Hessenberg determinant identity ----

SuiteResult run_constraint_det(const VerifyConfig&) {
  SuiteResult suite{"detA", {}};
  for (int n = 4; n <= 12; ++n) {
    const Rational det = constraint_matrix_det(constraint_matrix(n));
    const Rational want = Rational(n) / (BigInt(1) << (n - 1));
    suite.checks.push_back(check("detA_n" + std::to_string(n), det == want,
                                 format_rational(det) + " vs " +
                                     format_rational(want)));
  }
  return suite;
}

// ---- criterion 7: Beta/Gamma closed form vs quadrature ----

SuiteResult run_beta(const VerifyConfig&) {
  SuiteResult suite{"beta", {}};
  suite.checks.push_back(check(
      "fixture_half", beta_half(0, 0, 1) == ExactValue{Rational(1, 2)},
      format_exact(beta_half(0, 0, 1))));
  suite.checks.push_back(check(
      "fixture_quarter", beta_half(2, 0, 1) == ExactValue{Rational(1, 4)},
      format_exact(beta_half(2, 0, 1))));
  suite.checks.push_back(check(
      "fixture_pi16", beta_half(1, 1, 1) == ExactValue{Rational(1, 16), 2},
      format_exact(beta_half(1, 1, 1))));

  double worst = 0.0;
  bool ok = true;
  for (int m = 0; m <= 6; ++m) {
    for (int nn = 0; nn <= 6; ++nn) {
      for (int j = 1; j <= 5; ++j) {
        const double exact = to_double(beta_half(m, nn, j));
        const auto quad = integrate_1d(
            [m, nn, j](double x) {
              double v = 1.0;
              for (int e = 0; e < m + 2 * j - 1; ++e) v *= x;
              return v * std::pow(1.0 - x * x, 0.5 * nn);
            },
            0.0, 1.0, 1e-11);
        const double diff = std::abs(exact - quad.value);
        worst = std::max(worst, diff);
        ok = ok && diff <= 1e-10;
      }
    }
  }
  suite.checks.push_back(check("beta_vs_quadrature_grid", ok,
                               "245 cases, worst |diff| " + fmt(worst)));
  return suite;
}

// ---- criterion 8: hull test vs brute-force oracle ----

namespace {

// Exhaustive subset check: 0 is in the hull iff some affinely independent
// subset carries a unique nonnegative solution of the barycentric system.
// Written against the same contract as the production routes but kept
// deliberately separate from them.
bool subset_has_zero(const std::vector<std::vector<int>>& pts,
                     const std::vector<int>& subset, int dim) {
  const int rows = dim + 1;
  const int cols = static_cast<int>(subset.size());
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(cols + 1, 0));
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < dim; ++r) m[r][c] = pts[subset[c]][r];
    m[dim][c] = 1;
  }
  m[dim][cols] = 1;
  int row = 0;
  std::vector<int> pivot_of_col(cols, -1);
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) return false;  // dependent column: a smaller subset covers it
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (int cc = 0; cc <= cols; ++cc) m[row][cc] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int cc = 0; cc <= cols; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_of_col[c] = row;
    ++row;
  }
  for (int r = row; r < rows; ++r) {
    if (m[r][cols] != 0) return false;
  }
  for (int c = 0; c < cols; ++c) {
    if (m[pivot_of_col[c]][cols] < 0) return false;
  }
  return true;
}

}  // namespace

bool hull_oracle_enumeration(const std::vector<std::vector<int>>& points) {
  const int n = static_cast<int>(points.size());
  const int dim = static_cast<int>(points.front().size());
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    if (subset_has_zero(points, subset, dim)) return true;
  }
  return false;
}

bool hull_oracle_grid(const std::vector<std::vector<int>>& points,
                      int max_denominator) {
  const int n = static_cast<int>(points.size());
  const int dim = static_cast<int>(points.front().size());
  // Weights a_i / D with sum a_i = D: test sum a_i * p_i = 0 in integers.
  std::vector<long long> acc(dim, 0);
  std::vector<int> a(n, 0);
  for (int d = 1; d <= max_denominator; ++d) {
    // depth-first over compositions of d into n nonnegative parts
    std::function<bool(int, int)> rec = [&](int idx, int remaining) -> bool {
      if (idx == n - 1) {
        bool zero = true;
        for (int e = 0; e < dim; ++e) {
          if (acc[e] + static_cast<long long>(remaining) * points[idx][e] != 0) {
            zero = false;
            break;
          }
        }
        return zero;
      }
      for (int take = 0; take <= remaining; ++take) {
        if (take > 0) {
          for (int e = 0; e < dim; ++e) acc[e] += points[idx][e];
        }
        if (rec(idx + 1, remaining - take)) return true;
      }
      for (int e = 0; e < dim; ++e) {
        acc[e] -= static_cast<long long>(remaining) * points[idx][e];
      }
      return false;
    };
    std::fill(acc.begin(), acc.end(), 0);
    if (rec(0, d)) return true;
  }
  return false;
}

SuiteResult run_hull(const VerifyConfig& cfg) {
  SuiteResult suite{"hull", {}};
  suite.checks.push_back(check("fixture_pm1", hull_contains_zero({{1}, {-1}}),
                               "{(1),(-1)} contains zero"));
  suite.checks.push_back(check("fixture_basis",
                               !hull_contains_zero({{1, 0}, {0, 1}}),
                               "{(1,0),(0,1)} excludes zero"));

  RandomStream rng(RandomStream(cfg.seed).split(8).seed());
  bool oracle_ok = true;
  bool routes_ok = true;
  bool grid_ok = true;
  std::string fail_at;
  for (int c = 0; c < cfg.hull_cases; ++c) {
    const int dim = 1 + static_cast<int>(rng.next_u64() % 3);
    const int count = 2 + static_cast<int>(rng.next_u64() % 5);
    std::vector<std::vector<int>> pts;
    for (int p = 0; p < count; ++p) {
      std::vector<int> v(dim);
      for (int e = 0; e < dim; ++e) {
        v[e] = static_cast<int>(rng.next_u64() % 9) - 4;
      }
      pts.push_back(std::move(v));
    }
    const bool production = hull_contains_zero(pts);
    const bool oracle = hull_oracle_enumeration(pts);
    const bool simplex = hull_witness_simplex(pts).has_value();
    const bool grid = hull_oracle_grid(pts, 20);
    if (production != oracle && oracle_ok) {
      oracle_ok = false;
      fail_at = "case " + std::to_string(c);
    }
    routes_ok = routes_ok && (simplex == production);
    // The grid can only confirm; a grid witness must imply containment.
    grid_ok = grid_ok && (!grid || oracle);
  }
  suite.checks.push_back(check("random_corpus_vs_oracle", oracle_ok,
                               std::to_string(cfg.hull_cases) + " cases" +
                                   (oracle_ok ? "" : ", first mismatch " + fail_at)));
  suite.checks.push_back(
      check("caratheodory_vs_simplex", routes_ok, "both routes agree"));
  suite.checks.push_back(
      check("grid_witnesses_consistent", grid_ok, "denominators <= 20"));
  return suite;
}

// ---- criterion 9: harness consistency ----

namespace {

// Random admissible function; flags never set on the trailing `xi_free`
// variables so the exact region route stays available.
AdmissibleFunction random_admissible(int k, int l, int max_terms,
                                     int xi_flag_free, bool force_zero_term,
                                     RandomStream& rng) {
  AdmissibleFunction f(k, l);
  const int terms = 1 + static_cast<int>(rng.next_u64() % max_terms);
  for (int t = 0; t < terms; ++t) {
    ZExponent m(l, 0);
    if (!(force_zero_term && t == 0)) {
      for (int v = 0; v < l; ++v) {
        m[v] = static_cast<int>(rng.next_u64() % 5) - 2;
      }
    }
    std::vector<int> xexp(k, 0);
    std::vector<int> sflag(k, 0);
    for (int v = 0; v < k; ++v) {
      xexp[v] = static_cast<int>(rng.next_u64() % 4);
      if (v < k - xi_flag_free) {
        sflag[v] = static_cast<int>(rng.next_u64() % 2);
      }
    }
    const int re = static_cast<int>(rng.next_u64() % 7) - 3;
    const int im = static_cast<int>(rng.next_u64() % 3) - 1;
    if (re == 0 && im == 0) continue;
    HalfSquarePolynomial coeff(k);
    coeff.add_term(xexp, sflag, RationalComplex{Rational(re), Rational(im)});
    f.add_term(m, coeff);
  }
  if (f.is_zero()) {
    f.add_term(ZExponent(l, 0), HalfSquarePolynomial::one(k));
  }
  return f;
}

}  // namespace

SuiteResult run_harness(const VerifyConfig& cfg) {
  SuiteResult suite{"harness", {}};
  RandomStream master(RandomStream(cfg.seed).split(9).seed());

  // (a) exact xi-region path vs forced quadrature on even-power integrands
  {
    bool ok = true;
    double worst = 0.0;
    for (int c = 0; c < cfg.harness_integrands; ++c) {
      RandomStream rng = master.split(200 + c);
      JacobianSpec spec;
      AdmissibleFunction f;
      if (c % 2 == 0) {
        spec.family = GroupFamily::Sp;
        spec.n = 2;
        f = random_admissible(spec.x_arity(), spec.z_arity(), 3,
                              spec.xi_count(), true, rng);
      } else {
        spec.family = GroupFamily::G2;
        spec.n = 0;
        spec.g2_limit = G2Limit::preset(c % 4 == 1 ? "unit" : "xi1");
        f = random_admissible(spec.x_arity(), spec.z_arity(), 3,
                              spec.xi_count(), true, rng);
      }
      const int p = 1 + static_cast<int>(rng.next_u64() % 2);
      IntegrationOptions exact_opts;
      const IntegralValue exact = integrate_hypothesis(f, p, spec, exact_opts);
      IntegrationOptions num_opts;
      num_opts.force_numeric = true;
      num_opts.target_err = 2e-10;
      const IntegralValue numeric = integrate_hypothesis(f, p, spec, num_opts);
      const double diff =
          std::abs(exact.to_complex() - numeric.to_complex());
      worst = std::max(worst, diff);
      ok = ok && exact.exact && !numeric.exact && diff <= 1e-9;
    }
    suite.checks.push_back(check(
        "exact_vs_quadrature", ok,
        std::to_string(cfg.harness_integrands) + " even-power integrands, worst |diff| " + fmt(worst)));
  }

  // (b) torus extraction invariance: the integral only sees the zero
  // z-coefficient of f^P.
  {
    bool ok = true;
    for (int c = 0; c < cfg.torus_cases; ++c) {
      RandomStream rng = master.split(300 + c);
      JacobianSpec spec;
      spec.family = GroupFamily::SU;
      spec.n = 2;
      const AdmissibleFunction f = random_admissible(
          spec.x_arity(), spec.z_arity(), 3, 0, false, rng);
      const int p = 1 + static_cast<int>(rng.next_u64() % 3);
      AdmissibleFunction expanded = power(f, p);
      // Pure z-term with a nonzero exponent vector cannot change it.
      ZExponent m(spec.z_arity(), 0);
      m[rng.next_u64() % spec.z_arity()] =
          1 + static_cast<int>(rng.next_u64() % 3);
      AdmissibleFunction perturbed = expanded;
      HalfSquarePolynomial junk(spec.x_arity());
      junk.add_term(std::vector<int>(spec.x_arity(), 2),
                    std::vector<int>(spec.x_arity(), 0),
                    RationalComplex{Rational(7), Rational(-5)});
      perturbed.add_term(m, junk);
      const IntegralValue a = integrate_hypothesis(f, p, spec);
      const IntegralValue b = integrate_hypothesis(perturbed, 1, spec);
      ok = ok && a.exact && b.exact && a.exact_sum == b.exact_sum;
    }
    suite.checks.push_back(check("torus_extraction_invariance", ok,
                                 std::to_string(cfg.torus_cases) + " functions"));
  }

  // (c) scan classification invariant
  {
    bool ok = true;
    for (int c = 0; c < cfg.scan_cases; ++c) {
      RandomStream rng = master.split(400 + c);
      JacobianSpec spec;
      if (c % 3 == 2) {
        spec.family = GroupFamily::Sp;
        spec.n = 1;
      } else {
        spec.family = GroupFamily::SU;
        spec.n = 2;
      }
      const AdmissibleFunction f = random_admissible(
          spec.x_arity(), spec.z_arity(), 3, spec.xi_count(), false, rng);
      const ScanReport report = scan(f, 3, spec);
      const bool invariant =
          (report.classification ==
           ScanClassification::counterexample_candidate) ==
          (report.hypothesis_holds && report.hull_zero);
      const bool fails_coherent =
          (report.classification == ScanClassification::hypothesis_fails) ==
          !report.hypothesis_holds;
      ok = ok && invariant && fails_coherent;
    }
    suite.checks.push_back(check("scan_classification_invariant", ok,
                                 std::to_string(cfg.scan_cases) + " scans"));
  }
  return suite;
}

// ---- criterion 10: spectrum algebra vs brute-force expansion ----

SuiteResult run_spectrum_algebra(const VerifyConfig& cfg) {
  SuiteResult suite{"spectrum", {}};
  RandomStream master(RandomStream(cfg.seed).split(10).seed());
  bool ok = true;
  for (int c = 0; c < cfg.spectrum_cases; ++c) {
    RandomStream rng = master.split(500 + c);
    const AdmissibleFunction f = random_admissible(1, 2, 4, 0, false, rng);
    const int p = 1 + static_cast<int>(rng.next_u64() % 4);
    const Spectrum base = spectrum(f);
    // Brute-force P-fold Minkowski sum of the base spectrum.
    std::vector<ZExponent> reachable = base.points;
    for (int step = 1; step < p; ++step) {
      std::vector<ZExponent> next;
      for (const auto& a : reachable) {
        for (const auto& b : base.points) {
          ZExponent s(a.size());
          for (std::size_t v = 0; v < a.size(); ++v) s[v] = a[v] + b[v];
          next.push_back(std::move(s));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      reachable = std::move(next);
    }
    const Spectrum powered = spectrum(power(f, p));
    for (const auto& pt : powered.points) {
      if (!std::binary_search(reachable.begin(), reachable.end(), pt)) {
        ok = false;
      }
    }
  }
  suite.checks.push_back(check(
      "power_spectrum_in_minkowski_sum", ok,
      std::to_string(cfg.spectrum_cases) + " random functions, P <= 4"));
  return suite;
}

std::vector<SuiteResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg) {
  if (suite == "haar") return {run_haar_agreement(cfg)};
  if (suite == "beta") return {run_beta(cfg)};
  if (suite == "hull") return {run_hull(cfg)};
  if (suite == "detA") return {run_constraint_det(cfg)};
  if (suite == "all") {
    return {run_generators(cfg),     run_parametrization(cfg),
            run_su2_roundtrip(cfg),  run_haar_agreement(cfg),
            run_monomial_mc(cfg),    run_constraint_det(cfg),
            run_beta(cfg),           run_hull(cfg),
            run_harness(cfg),        run_spectrum_algebra(cfg)};
  }
  throw std::invalid_argument("unknown verify suite: " + suite +
                              " (expected all, haar, beta, hull or detA)");
}

bool suite_is_stochastic(const std::string& suite) {
  return suite == "all" || suite == "haar" || suite == "hull";
}

}  // namespace eulerhaar::verify
