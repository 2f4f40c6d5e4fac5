#include "eulerhaar/integrate.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "eulerhaar/errors.hpp"
#include "eulerhaar/finite_type.hpp"
#include "eulerhaar/hull.hpp"
#include "eulerhaar/quadrature.hpp"

namespace eulerhaar {

namespace {

void check_spec(const JacobianSpec& spec) {
  switch (spec.family) {
    case GroupFamily::SU:
      if (spec.n < 2) throw std::invalid_argument("SU scan requires n >= 2");
      break;
    case GroupFamily::Sp:
      if (spec.n < 1) throw std::invalid_argument("Sp scan requires n >= 1");
      break;
    case GroupFamily::G2:
      if (!spec.g2_limit) {
        throw std::invalid_argument(
            "G2 integration requires an explicit upper limit S(xi1); "
            "the source material leaves it undefined");
      }
      spec.g2_limit->validate();
      break;
  }
}

// integral over 0 <= xi_1 <= ... <= xi_d <= 1 of prod xi_t^(e_t),
// by iterated antiderivatives.
Rational ordered_simplex_monomial(const std::vector<int>& exps) {
  Rational c(1);
  long long acc = 0;
  for (int e : exps) {
    acc += e + 1;
    c /= acc;
  }
  return c;
}

// Exact xi-region integral machinery for G2: powers of S as one-variable
// half-square polynomials in xi1, memoized.
class G2ExactRegion {
 public:
  explicit G2ExactRegion(const G2Limit& lim) : s_(build(lim)) {}

  // integral over xi1 in [0,1], xi2 in [0, S(xi1)] of
  //   xi1^b1 * sqrt(1-xi1^2)^f1 * xi2^b2     (requires xi2 flag == 0)
  ExactSum integrate(int b1, int f1, int b2) {
    const HalfSquarePolynomial& sp = s_power(b2 + 1);
    HalfSquarePolynomial outer(1);
    outer.add_term({b1}, {f1}, RationalComplex(Rational(1, b2 + 1)));
    outer = outer * sp;
    ExactSum total;
    for (const auto& [key, coeff] : outer.terms()) {
      ExactComplex term{coeff};
      total.add(term * ExactComplex(beta_x(key.xexp[0], key.sflag[0])));
    }
    return total;
  }

 private:
  static HalfSquarePolynomial build(const G2Limit& lim) {
    HalfSquarePolynomial s(1);
    for (std::size_t i = 0; i < lim.poly.size(); ++i) {
      s.add_term({static_cast<int>(i)}, {0}, RationalComplex(lim.poly[i]));
    }
    for (std::size_t i = 0; i < lim.sqrt_poly.size(); ++i) {
      s.add_term({static_cast<int>(i)}, {1}, RationalComplex(lim.sqrt_poly[i]));
    }
    return s;
  }

  const HalfSquarePolynomial& s_power(int m) {
    auto it = powers_.find(m);
    if (it != powers_.end()) return it->second;
    HalfSquarePolynomial p = HalfSquarePolynomial::one(1);
    for (int i = 0; i < m; ++i) p = p * s_;
    return powers_.emplace(m, std::move(p)).first->second;
  }

  HalfSquarePolynomial s_;
  std::map<int, HalfSquarePolynomial> powers_;
};

struct SplitTerm {
  ExactValue x_part;            // product of the plain [0,1] integrals
  RationalComplex coeff;
  std::vector<int> xi_exp;      // trailing xi exponents
  std::vector<int> xi_flag;     // trailing xi sqrt flags
};

}  // namespace

IntegralValue integrate_hypothesis(const AdmissibleFunction& f, int p,
                                   const JacobianSpec& spec,
                                   const IntegrationOptions& opts) {
  check_spec(spec);
  if (p < 1) throw std::invalid_argument("integrate_hypothesis requires P >= 1");
  if (f.x_arity() != spec.x_arity() || f.z_arity() != spec.z_arity()) {
    throw ArityMismatchError(
        "function arities (" + std::to_string(f.x_arity()) + ", " +
        std::to_string(f.z_arity()) + ") do not match the " +
        spec.family_name() + " spec (" + std::to_string(spec.x_arity()) +
        ", " + std::to_string(spec.z_arity()) + ")");
  }

  const AdmissibleFunction fp = p == 1 ? f : power(f, p);
  // Each z integral against dz/z picks the zero-exponent coefficient.
  const HalfSquarePolynomial c0 =
      fp.coefficient(ZExponent(spec.z_arity(), 0));

  IntegralValue result;
  if (c0.is_zero()) {
    if (opts.normalize) {
      // zero either way; keep the flag meaningful
      result.normalized = true;
    }
    return result;
  }

  const HalfSquarePolynomial h = c0 * jacobian_polynomial(spec);
  const int total = spec.x_arity();
  const int xi_n = spec.xi_count();
  const int plain = total - xi_n;

  // Per-term split: plain [0,1] variables integrate in closed form always;
  // the xi block couples through the region.
  std::vector<SplitTerm> terms;
  terms.reserve(h.term_count());
  bool xi_polynomial = true;
  for (const auto& [key, coeff] : h.terms()) {
    SplitTerm t;
    t.coeff = coeff;
    t.x_part = ExactValue{Rational(1)};
    for (int v = 0; v < plain; ++v) {
      t.x_part = t.x_part * beta_x(key.xexp[v], key.sflag[v]);
    }
    t.xi_exp.assign(key.xexp.begin() + plain, key.xexp.end());
    t.xi_flag.assign(key.sflag.begin() + plain, key.sflag.end());
    for (std::size_t i = 0; i < t.xi_flag.size(); ++i) {
      // For G2 only the inner variable breaks the exact route.
      const bool breaks_exact =
          spec.family == GroupFamily::G2 ? (i == 1 && t.xi_flag[i] != 0)
                                         : t.xi_flag[i] != 0;
      if (breaks_exact) xi_polynomial = false;
    }
    terms.push_back(std::move(t));
  }

  const bool exact_route =
      xi_n == 0 || (xi_polynomial && !opts.force_numeric);

  if (exact_route) {
    ExactSum sum;
    G2ExactRegion* g2 = nullptr;
    std::optional<G2ExactRegion> g2_storage;
    if (spec.family == GroupFamily::G2) {
      g2_storage.emplace(*spec.g2_limit);
      g2 = &*g2_storage;
    }
    for (const auto& t : terms) {
      ExactComplex factor = ExactComplex{t.coeff} * ExactComplex(t.x_part);
      if (xi_n == 0) {
        sum.add(factor);
      } else if (spec.family == GroupFamily::Sp) {
        ExactValue region{ordered_simplex_monomial(t.xi_exp)};
        sum.add(factor * ExactComplex(region));
      } else {
        ExactSum region = g2->integrate(t.xi_exp[0], t.xi_flag[0], t.xi_exp[1]);
        region.scale(factor);
        sum.add(region);
      }
    }
    result.exact = true;
    result.exact_sum = std::move(sum);
  } else {
    // Quadrature over the xi region of the weighted monomial sum; the plain
    // x variables are already integrated exactly into the weights.
    struct NumTerm {
      std::complex<double> w;
      std::vector<int> exp;
      std::vector<int> flag;
    };
    std::vector<NumTerm> num_terms;
    num_terms.reserve(terms.size());
    for (const auto& t : terms) {
      NumTerm nt;
      nt.w = t.coeff.to_complex() * ExactComplex(t.x_part).to_complex();
      nt.exp = t.xi_exp;
      nt.flag = t.xi_flag;
      num_terms.push_back(std::move(nt));
    }
    auto eval_part = [&num_terms](std::span<const double> xi, bool real_part) {
      std::complex<double> acc{0.0, 0.0};
      for (const auto& t : num_terms) {
        double m = 1.0;
        for (std::size_t v = 0; v < xi.size(); ++v) {
          for (int e = 0; e < t.exp[v]; ++e) m *= xi[v];
          if (t.flag[v]) m *= std::sqrt(std::max(0.0, 1.0 - xi[v] * xi[v]));
        }
        acc += t.w * m;
      }
      return real_part ? acc.real() : acc.imag();
    };
    QuadratureResult re, im;
    const double half_target = 0.5 * opts.target_err;
    if (spec.family == GroupFamily::Sp) {
      re = integrate_ordered_simplex(
          [&](std::span<const double> xi) { return eval_part(xi, true); },
          xi_n, half_target, opts.max_evals);
      im = integrate_ordered_simplex(
          [&](std::span<const double> xi) { return eval_part(xi, false); },
          xi_n, half_target, opts.max_evals);
    } else {
      const G2Limit lim = *spec.g2_limit;
      std::vector<NestedLimit> limits;
      limits.push_back(
          [](std::span<const double>) { return std::make_pair(0.0, 1.0); });
      limits.push_back([lim](std::span<const double> outer) {
        return std::make_pair(0.0, lim.evaluate(outer[0]));
      });
      re = integrate_nested(
          [&](std::span<const double> xi) { return eval_part(xi, true); },
          limits, half_target, opts.max_evals);
      im = integrate_nested(
          [&](std::span<const double> xi) { return eval_part(xi, false); },
          limits, half_target, opts.max_evals);
    }
    result.exact = false;
    result.numeric = {re.value, im.value};
    result.numeric_err = re.error + im.error;
    result.evaluations = re.evaluations + im.evaluations;
  }

  if (opts.normalize) {
    const IntegralValue mass = weight_mass(spec);
    // The mass is exact by construction; normalize only when it is a single
    // transcendence class (a plain nonzero number), otherwise report raw.
    if (mass.exact && mass.exact_sum.term_count() == 1) {
      const ExactComplex m = mass.exact_sum.single_term();
      if (result.exact) {
        const Rational norm =
            m.coeff.re * m.coeff.re + m.coeff.im * m.coeff.im;
        result.exact_sum.scale(ExactComplex{
            RationalComplex{m.coeff.re / norm, -m.coeff.im / norm},
            -m.two_pi_pow});
      } else {
        const double denom = std::abs(m.to_complex());
        result.numeric /= m.to_complex();
        result.numeric_err /= denom;
      }
      result.normalized = true;
    } else {
      result.normalized = false;
    }
  } else {
    result.normalized = false;
  }
  return result;
}

IntegralValue weight_mass(const JacobianSpec& spec) {
  check_spec(spec);
  const HalfSquarePolynomial w = jacobian_polynomial(spec);
  const int total = spec.x_arity();
  const int xi_n = spec.xi_count();
  const int plain = total - xi_n;

  ExactSum sum;
  std::optional<G2ExactRegion> g2;
  if (spec.family == GroupFamily::G2) {
    g2.emplace(*spec.g2_limit);
  }
  for (const auto& [key, coeff] : w.terms()) {
    ExactValue x_part{Rational(1)};
    for (int v = 0; v < plain; ++v) {
      x_part = x_part * beta_x(key.xexp[v], key.sflag[v]);
    }
    ExactComplex factor = ExactComplex{coeff} * ExactComplex(x_part);
    if (xi_n == 0) {
      sum.add(factor);
    } else if (spec.family == GroupFamily::Sp) {
      std::vector<int> xi_exp(key.xexp.begin() + plain, key.xexp.end());
      sum.add(factor * ExactComplex(ExactValue{
                           ordered_simplex_monomial(xi_exp)}));
    } else {
      // the weight itself is polynomial in the xi variables
      ExactSum region =
          g2->integrate(key.xexp[plain], key.sflag[plain], key.xexp[plain + 1]);
      region.scale(factor);
      sum.add(region);
    }
  }
  IntegralValue v;
  v.exact = true;
  v.exact_sum = std::move(sum);
  v.normalized = false;
  return v;
}

std::string classification_name(ScanClassification c) {
  switch (c) {
    case ScanClassification::consistent:
      return "consistent";
    case ScanClassification::hypothesis_fails:
      return "hypothesis-fails";
    case ScanClassification::counterexample_candidate:
      return "counterexample-candidate";
  }
  return "?";
}

ScanReport scan(const AdmissibleFunction& f, int p_max,
                const JacobianSpec& spec, const IntegrationOptions& opts) {
  if (p_max < 1) throw std::invalid_argument("scan requires P_max >= 1");
  ScanReport report;
  report.family = spec.family;
  report.n = spec.n;
  report.sp_variant = spec.sp_variant;
  if (spec.g2_limit) report.g2_limit_label = spec.g2_limit->label;
  report.p_max = p_max;

  bool hypothesis = true;
  bool all_exact = true;
  for (int p = 1; p <= p_max; ++p) {
    ScanEntry entry;
    entry.p = p;
    entry.value = integrate_hypothesis(f, p, spec, opts);
    hypothesis = hypothesis && entry.value.is_zero();
    all_exact = all_exact && entry.value.exact;
    report.entries.push_back(std::move(entry));
  }
  report.hypothesis_holds = hypothesis;
  report.all_exact = all_exact;
  report.hull_zero = hull_contains_zero(spectrum(f));
  if (!hypothesis) {
    report.classification = ScanClassification::hypothesis_fails;
  } else if (report.hull_zero) {
    report.classification = ScanClassification::counterexample_candidate;
  } else {
    report.classification = ScanClassification::consistent;
  }
  return report;
}

nlohmann::json integral_value_to_json(const IntegralValue& v) {
  nlohmann::json j;
  if (!v.exact) {
    j = {{"num", v.numeric.real()},
         {"num_im", v.numeric.imag()},
         {"err", v.numeric_err}};
  } else if (v.exact_sum.is_zero()) {
    j = {{"q", "0"}, {"pi_pow", "0"}};
  } else if (v.exact_sum.term_count() == 1) {
    const ExactComplex t = v.exact_sum.single_term();
    if (t.coeff.is_real()) {
      j = {{"q", format_rational(t.coeff.re)},
           {"pi_pow", format_pi_pow(t.two_pi_pow)}};
    } else {
      j = {{"re", format_rational(t.coeff.re)},
           {"im", format_rational(t.coeff.im)},
           {"pi_pow", format_pi_pow(t.two_pi_pow)}};
    }
  } else {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [pow, c] : v.exact_sum.terms()) {
      terms.push_back({{"re", format_rational(c.re)},
                       {"im", format_rational(c.im)},
                       {"pi_pow", format_pi_pow(pow)}});
    }
    j = {{"terms", std::move(terms)}};
  }
  j["exact"] = v.exact;
  j["normalized"] = v.normalized;
  return j;
}

nlohmann::json scan_report_to_json(const ScanReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"P", e.p}, {"value", integral_value_to_json(e.value)}});
  }
  nlohmann::json j{{"family", r.family == GroupFamily::SU   ? "su"
                              : r.family == GroupFamily::Sp ? "sp"
                                                            : "g2"},
                   {"P_max", r.p_max},
                   {"entries", std::move(entries)},
                   {"hypothesis", r.hypothesis_holds},
                   {"exact", r.all_exact},
                   {"hull_contains_zero", r.hull_zero},
                   {"classification", classification_name(r.classification)}};
  if (r.family != GroupFamily::G2) {
    j["n"] = r.n;
  }
  if (r.family == GroupFamily::Sp) {
    j["sp_variant"] =
        r.sp_variant == SpPairVariant::printed ? "printed" : "squared";
  }
  if (!r.g2_limit_label.empty()) {
    j["g2_limit"] = r.g2_limit_label;
  }
  return j;
}

std::string scan_report_to_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "P,exact,value,err,hypothesis,hull_contains_zero,classification\n";
  for (const auto& e : r.entries) {
    out << e.p << ',';
    if (e.value.exact) {
      out << "true,\"" << e.value.exact_sum.format() << "\",0,";
    } else {
      out << "false," << e.value.numeric.real();
      if (e.value.numeric.imag() != 0.0) {
        out << "+" << e.value.numeric.imag() << "i";
      }
      out << ',' << e.value.numeric_err << ',';
    }
    out << (r.hypothesis_holds ? "true" : "false") << ','
        << (r.hull_zero ? "true" : "false") << ','
        << classification_name(r.classification) << '\n';
  }
  return out.str();
}

}  // namespace eulerhaar
