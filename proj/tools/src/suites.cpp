#include "cli/suites.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pavstat/bijections.hpp"
#include "pavstat/cfrac.hpp"
#include "pavstat/closed_forms.hpp"
#include "pavstat/statpoly.hpp"

namespace pavstat::cli {

namespace {

std::string num(int v) { return std::to_string(v); }

std::string a_name(int n, int k) { return "A_{" + num(n) + "," + num(k) + "}(q)"; }

// p(q) read backwards over its support window.
UnivarPoly reflected(const UnivarPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.min_degree();
  const int hi = p.degree();
  UnivarPoly out(p.var());
  for (const auto& [e, c] : p.coeffs()) out.add_term(lo + hi - e, c);
  return out;
}

void symmetry(const SuiteOptions& o, Report& report) {
  for (int n = 1; n <= o.max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      report.run("symmetry", "A_{n,k}(q) symmetric", n, k, [n, k] {
        const UnivarPoly p = a_poly(n, k);
        if (is_symmetric(p)) return CheckResult::pass(a_name(n, k) + " = " + p.to_string());
        return CheckResult::fail(a_name(n, k) + " = " + p.to_string() +
                                 "\nreflected  = " + reflected(p).to_string());
      });
    }
  }
  for (int n = 1; n <= std::min(o.max_n, kOrbitMaxN); ++n) {
    report.run("symmetry", "rotation pairs maj i with nk - i", n, -1,
               [n] { return verify_orbit_pairing(n); });
  }
}

void unimodality(const SuiteOptions& o, Report& report) {
  for (int n = 1; n <= o.max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      const UnivarPoly p = a_poly(n, k);
      report.run("unimodality", "A_{n,k}(q) unimodal", n, k, [&] {
        if (is_unimodal(p)) return CheckResult::pass(a_name(n, k) + " = " + p.to_string());
        return CheckResult::fail(a_name(n, k) + " = " + p.to_string());
      });
      if (!is_log_concave(p)) {
        report.note("unimodality", "log-concavity exception", n, k,
                    a_name(n, k) + " = " + p.to_string());
      }
    }
  }
  if (o.max_n >= 6) {
    report.run("unimodality", "A_{6,2}(q) is not log-concave", 6, 2, [] {
      const UnivarPoly p = a_poly(6, 2);
      if (!is_log_concave(p)) return CheckResult::pass(a_name(6, 2) + " = " + p.to_string());
      return CheckResult::fail(a_name(6, 2) + " = " + p.to_string() + " is log-concave");
    });
  }
}

CheckResult one_then_even(bool ok, const std::string& name, const UnivarPoly& p) {
  const std::string what = name + " = " + p.to_string();
  return ok ? CheckResult::pass(what) : CheckResult::fail(what);
}

void parity(const SuiteOptions& o, Report& report) {
  for (int n = 1; n <= o.max_n; n = 2 * n + 1) {
    const std::string sub = num(n);
    report.run("parity", "[q^k] I_n(q,1): 1 then even", n, -1, [n, sub] {
      return one_then_even(parity_inv(n), "I_" + sub + "(q,1)", inv_poly(n).at_t(1));
    });
    report.run("parity", "[q^k] M_n(q,1): 1 then even", n, -1, [n, sub] {
      return one_then_even(parity_maj_q(n), "M_" + sub + "(q,1)", maj_poly(n).at_t(1));
    });
    report.run("parity", "[t^k] M_n(1,t): 1 then even", n, -1, [n, sub] {
      return one_then_even(parity_maj_t(n), "M_" + sub + "(1,t)", maj_poly(n).at_q(1));
    });
  }
  for (int n = 1; n <= std::min(o.max_n, kFixedPointMaxN); n += 2) {
    for (int k = 0; k < n; k += 2) {
      report.run("parity", "rotation fixed points are inflations", n, k, [n, k] {
        const FixedPointSets f = r180_fixed_points(n, k);
        const std::string what = num(static_cast<int>(f.brute_force.size())) +
                                 " fixed points, " +
                                 num(static_cast<int>(f.constructive.size())) + " inflations";
        return f.coincide ? CheckResult::pass(what) : CheckResult::fail(what);
      });
    }
  }
}

void signed_suite(const SuiteOptions& o, Report& report) {
  const int N = o.max_n;
  for (int n = 0; n <= N; ++n) {
    report.run("signed", "I_n(-1,t) sign enumeration", n, -1,
               [n] { return verify_sign_enumeration(n); });
    report.run("signed", "I_n(1,t) Narayana", n, -1, [n] { return verify_narayana(n); });
  }
  for (int n = 1; 2 * n <= N; ++n) {
    report.run("signed", "I_2n(-1,t) = (t-1) I_2n-1(-1,t)", n, -1,
               [n] { return verify_rec1(n); });
  }
  for (int n = 2; 2 * n + 1 <= N; ++n) {
    report.run("signed", "three-term recurrence for I_2n+1(-1,t)", n, -1,
               [n] { return verify_rec2(n); });
  }
  for (int n = 1; 2 * n + 1 <= N; ++n) {
    report.run("signed", "I_2n(-1,1) = 0, I_2n+1(-1,1) = C_n", n, -1,
               [n] { return verify_simion_schmidt(n); });
  }
  for (int n = 0; 2 * n + 1 <= N; ++n) {
    report.run("signed", "coefficients of I_2n+1(-1,t)", n, -1,
               [n] { return verify_coeff_formulas(n); });
  }
}

void cf(const SuiteOptions& o, Report& report) {
  const int order = std::min(o.max_n, kCfMaxOrder);
  std::optional<QTSeries> sti;
  for (int n = 0; n <= order; ++n) {
    report.run("cf", "[z^n] of the sti expansion = I_n(q,t)", n, -1, [&, n] {
      if (!sti) sti = expand(sti_cf(default_depth(order)), order);
      const BivarPoly expected = inv_poly(n);
      const std::string what = "[z^" + num(n) + "] = " + (*sti)[n].to_string();
      if ((*sti)[n] == expected) return CheckResult::pass(what);
      return CheckResult::fail(what + "\nI_" + num(n) + "(q,t) = " + expected.to_string());
    });
  }
  report.run("cf", "sti at q = t = 1 is the Catalan fraction", -1, -1, [] {
    const bool ok = sti_cf(20).substituted(1, 1) == catalan_cf(20);
    return ok ? CheckResult::pass("") : CheckResult::fail("numerators differ");
  });
  for (int seed = 0; seed < kContractionTrials; ++seed) {
    report.run("cf", "even and odd contractions, seed " + num(seed), -1, -1, [seed] {
      constexpr int kOrder = 10;
      const CFSpec cf = random_monomial_cf(static_cast<std::uint64_t>(seed), 30);
      const QTSeries direct = expand(cf, kOrder);
      const QTSeries even = expand(even_part(cf), kOrder);
      const QTSeries odd = expand(odd_part(cf), kOrder);
      if (even == direct && odd == direct) return CheckResult::pass("");
      return CheckResult::fail("direct: " + direct.to_string() + "\neven:   " + even.to_string() +
                               "\nodd:    " + odd.to_string());
    });
  }
  report.run("cf", "odd part at q = -1, t = 1", -1, -1, [] {
    const QTSeries s = expand(odd_part(sti_cf(30).substituted(-1, 1)), 9);
    QTSeries expected(9);
    const std::vector<long> c{1, 1, 0, 1, 0, 2, 0, 5, 0, 14};
    for (std::size_t i = 0; i < c.size(); ++i) expected[static_cast<int>(i)] = BivarPoly(c[i]);
    if (s == expected) return CheckResult::pass(s.to_string());
    return CheckResult::fail("got:      " + s.to_string() + "\nexpected: " + expected.to_string());
  });
}

void gf(const SuiteOptions& o, Report& report) {
  const int N = o.max_n;
  report.run("gf", "closed form of sum I_n(-1,t) z^n", N, -1, [N] { return verify_gf_sign(N); });
  report.run("gf", "closed form of sum I_2n+1(-1,t) z^n", N / 2, -1,
             [N] { return verify_gf_sign_odd(N / 2); });
  report.run("gf", "functional equation", N, -1, [N] { return verify_functional_equation(N); });
  report.run("gf", "reflection identity", N, -1, [N] { return verify_reflection_identity(N); });
  report.run("gf", "differential equation", N, -1, [N] { return verify_ode(N); });
  for (int n = 0; n <= N; ++n) {
    report.run("gf", "Lagrange identity", n, -1, [n] { return verify_lagrange(n); });
  }
}

void dyck(const SuiteOptions& o, Report& report) {
  for (int n = 1; n <= std::min(o.max_n, kDyckMaxN); ++n) {
    report.run("dyck", "symmetric Dyck paths by peaks = s_{n,k}", n, -1, [n] {
      const auto row = symmetric_dyck_row(n);
      std::string counted;
      std::string formula;
      bool ok = true;
      for (int k = 1; k <= n; ++k) {
        const BigInt s = s_coeff(n, k);
        ok = ok && row[static_cast<std::size_t>(k)] == s;
        counted += (k > 1 ? " " : "") + row[static_cast<std::size_t>(k)].get_str();
        formula += (k > 1 ? " " : "") + s.get_str();
      }
      if (ok) return CheckResult::pass(counted);
      return CheckResult::fail("counted: " + counted + "\nformula: " + formula);
    });
  }
}

}  // namespace

void run_suite(const std::string& name, const SuiteOptions& options, Report& report) {
  if (name == "all") {
    for (const auto& s : suite_names()) run_suite(s, options, report);
  } else if (name == "symmetry") {
    symmetry(options, report);
  } else if (name == "unimodality") {
    unimodality(options, report);
  } else if (name == "parity") {
    parity(options, report);
  } else if (name == "signed") {
    signed_suite(options, report);
  } else if (name == "cf") {
    cf(options, report);
  } else if (name == "gf") {
    gf(options, report);
  } else if (name == "dyck") {
    dyck(options, report);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
}

}  // namespace pavstat::cli
