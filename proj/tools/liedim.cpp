// Command-line surface: dimension tables, representative enumerations and
// brute-force certifications, with reproducible output.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liedim/coset_reps.hpp"
#include "liedim/coset_scan.hpp"
#include "liedim/dimension.hpp"
#include "liedim/group_algebra.hpp"
#include "liedim/io.hpp"

namespace {

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

void add_format_opt(CLI::App* cmd, std::string* fmt) {
  cmd->add_option("--format", *fmt, "output format: text, json or csv")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

int run_dims(int p, int64_t k, Format fmt, int ratio_digits) {
  const auto table = liedim::growth_table(p, k, ratio_digits);
  if (fmt == Format::csv) {
    std::cout << liedim::report_csv_header() << "\n";
    for (const auto& r : table) std::cout << liedim::report_csv_row(r) << "\n";
  } else if (fmt == Format::json) {
    liedim::json arr = liedim::json::array();
    for (const auto& r : table) arr.push_back(liedim::report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "p k kappa N dim_pf dim_lie liemax_upper ratio~ sandwich log_growth~\n";
    for (const auto& r : table) {
      std::string kappa = "[";
      for (size_t i = 0; i < r.kappa.parts.size(); ++i) {
        if (i) kappa += ',';
        kappa += std::to_string(r.kappa.parts[i]);
      }
      kappa += ']';
      std::cout << r.p << ' ' << r.k << ' ' << kappa << ' ' << r.N.str() << ' '
                << r.dim_pf.str() << ' ' << r.dim_lie.str() << ' ' << r.liemax_upper.str() << ' '
                << r.ratio << ' ' << (r.sandwich_ok ? "ok" : "VIOLATED") << ' ' << r.log_growth
                << "\n";
    }
  }
  return 0;
}

int run_aseq(int p, int m, Format fmt) {
  const auto a = liedim::a_sequence(p, m);
  if (fmt == Format::json) {
    liedim::json arr = liedim::json::array();
    for (const auto& v : a) arr.push_back(v.str());
    std::cout << liedim::json{{"p", p}, {"m_max", m}, {"a", arr}}.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "m,a\n";
    for (size_t i = 0; i < a.size(); ++i) std::cout << i << ',' << a[i].str() << "\n";
  } else {
    for (size_t i = 0; i < a.size(); ++i) std::cout << (i ? ", " : "") << a[i].str();
    std::cout << "\n";
  }
  return 0;
}

int run_xk(int p, int d, bool list, uint64_t budget, Format fmt) {
  const auto reps = liedim::enumerate_X(p, d, budget);
  if (fmt == Format::json) {
    liedim::json out{{"p", p}, {"k", d}, {"count", reps.size()}};
    if (list) {
      liedim::json arr = liedim::json::array();
      for (const auto& r : reps) arr.push_back(liedim::rep_to_json(r));
      out["reps"] = std::move(arr);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p=" << p << " k=" << d << " |X_k| = " << reps.size() << "\n";
    if (list)
      for (const auto& r : reps)
        std::cout << liedim::to_string(r.lambda) << ' ' << liedim::to_cycle_string(r.realized)
                  << "\n";
  }
  return 0;
}

int run_yset(int p, int m, bool list, uint64_t budget, Format fmt) {
  const auto ys = liedim::enumerate_Y(p, m, budget);
  if (fmt == Format::json) {
    liedim::json out{{"p", p}, {"m", m}, {"count", ys.size()}};
    if (list) {
      liedim::json arr = liedim::json::array();
      for (const auto& y : ys) arr.push_back(liedim::to_cycle_string(y));
      out["elements"] = std::move(arr);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p=" << p << " m=" << m << " |Y_m| = " << ys.size() << "\n";
    if (list)
      for (const auto& y : ys) std::cout << liedim::to_cycle_string(y) << "\n";
  }
  return 0;
}

int run_verify(int p, int k, int threads, bool exhaustive, uint64_t budget, Format fmt) {
  const auto v = liedim::certify_transversal(p, k, threads, exhaustive, budget);
  if (fmt == Format::json) {
    std::cout << liedim::verdict_to_json(v).dump(2) << "\n";
  } else {
    std::cout << "p=" << v.p << " k=" << v.k << " total_cosets=" << v.total_cosets
              << " hits=" << v.hits << " expected=" << v.expected
              << " status=" << (v.ok ? "OK" : "MISMATCH") << "\n";
    if (!v.ok) std::cout << "counterexample: " << v.counterexample << "\n";
  }
  return v.ok ? 0 : 1;
}

int run_omega(int n, bool mod_p, int p, Format fmt) {
  bool ok;
  std::string mode;
  if (mod_p) {
    ok = liedim::omega_identity_check_mod(n, p);
    mode = "mod " + std::to_string(p);
  } else {
    ok = liedim::omega_identity_check(n);
    mode = "integer";
  }
  if (fmt == Format::json) {
    std::cout << liedim::json{{"n", n}, {"mode", mode}, {"status", ok ? "OK" : "MISMATCH"}}.dump(2)
              << "\n";
  } else {
    std::cout << "omega identity for n=" << n << " (" << mode << "): "
              << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

int run_pcomp(int p, int64_t n, uint64_t budget, Format fmt) {
  const auto comps = liedim::enumerate_pcompositions(p, n, budget);
  if (fmt == Format::json) {
    liedim::json arr = liedim::json::array();
    for (const auto& c : comps) arr.push_back(liedim::pcomposition_to_json(c));
    std::cout << liedim::json{{"p", p}, {"n", n}, {"count", comps.size()},
                              {"compositions", arr}}.dump(2)
              << "\n";
  } else {
    for (const auto& c : comps) std::cout << liedim::to_string(c) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coset-transversal engine for Sylow p-subgroups of symmetric groups,\n"
               "with dimension bounds for the projective-free part of the Lie module"};
  app.require_subcommand(1);

  int p = 2, k = 1, m = 0, n = 2, threads = 1, ratio_digits = 30;
  uint64_t budget_enum = 1000000;
  uint64_t budget_scan = 3628800;
  bool list = false, exhaustive = false, mod_p = false;
  std::string fmt_s = "text";

  auto check_p = CLI::Range(2, 13);

  CLI::App* dims = app.add_subcommand("dims", "dimension table for all k' <= k with p not dividing k'");
  dims->add_option("--p", p, "prime")->required()->check(check_p);
  dims->add_option("--k", k, "largest k")->required()->check(CLI::PositiveNumber);
  dims->add_option("--ratio-digits", ratio_digits, "significant digits of the ratio column")
      ->default_val(30);
  add_format_opt(dims, &fmt_s);

  CLI::App* aseq = app.add_subcommand("aseq", "the recurrence values a_0..a_m");
  aseq->add_option("--p", p, "prime")->required()->check(check_p);
  aseq->add_option("--m", m, "largest index")->required()->check(CLI::NonNegativeNumber);
  add_format_opt(aseq, &fmt_s);

  CLI::App* xk = app.add_subcommand("xk", "enumerate the representative set X_k");
  xk->add_option("--p", p, "prime")->required()->check(check_p);
  xk->add_option("--k", k, "index k >= 0")->required()->check(CLI::NonNegativeNumber);
  xk->add_flag("--list", list, "print every representative");
  xk->add_option("--budget", budget_enum, "enumeration cap")->check(CLI::PositiveNumber);
  add_format_opt(xk, &fmt_s);

  CLI::App* yset = app.add_subcommand("yset", "enumerate the set Y_m");
  yset->add_option("--p", p, "prime")->required()->check(check_p);
  yset->add_option("--m", m, "level m >= 0")->required()->check(CLI::NonNegativeNumber);
  yset->add_flag("--list", list, "print every element");
  yset->add_option("--budget", budget_enum, "enumeration cap")->check(CLI::PositiveNumber);
  add_format_opt(yset, &fmt_s);

  CLI::App* verify = app.add_subcommand(
      "verify", "scan S_pk and certify that X_{k-1} is a transversal of the hit cosets");
  verify->add_option("--p", p, "prime")->required()->check(check_p);
  verify->add_option("--k", k, "k with p not dividing k")->required()->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "scan workers")->default_val(1)
      ->check(CLI::PositiveNumber);
  verify->add_flag("--exhaustive-intersection", exhaustive,
                   "test every non-identity element of S_p, not only p-cycles");
  verify->add_option("--budget", budget_scan, "largest |S_pk| the scan accepts")
      ->check(CLI::PositiveNumber);
  add_format_opt(verify, &fmt_s);

  CLI::App* omega = app.add_subcommand("omega", "check the omega_n identity");
  omega->add_option("--n", n, "degree n")->required()->check(CLI::PositiveNumber);
  omega->add_flag("--mod-p", mod_p, "check with coefficients in the prime field");
  omega->add_option("--p", p, "prime for --mod-p")->check(check_p);
  add_format_opt(omega, &fmt_s);

  CLI::App* pcomp = app.add_subcommand("pcomp", "enumerate the p-compositions of n");
  pcomp->add_option("--p", p, "prime")->required()->check(check_p);
  pcomp->add_option("--n", n, "target n >= 1")->required()->check(CLI::PositiveNumber);
  pcomp->add_option("--budget", budget_enum, "enumeration cap")->check(CLI::PositiveNumber);
  add_format_opt(pcomp, &fmt_s);

  try {
    app.parse(argc, argv);
    const Format fmt = parse_format(fmt_s);
    if (dims->parsed()) return run_dims(p, k, fmt, ratio_digits);
    if (aseq->parsed()) return run_aseq(p, m, fmt);
    if (xk->parsed()) return run_xk(p, k, list, budget_enum, fmt);
    if (yset->parsed()) return run_yset(p, m, list, budget_enum, fmt);
    if (verify->parsed()) return run_verify(p, k, threads, exhaustive, budget_scan, fmt);
    if (omega->parsed()) {
      if (mod_p && !omega->count("--p"))
        throw CLI::RequiredError("--p is required with --mod-p");
      return run_omega(n, mod_p, p, fmt);
    }
    if (pcomp->parsed()) return run_pcomp(p, n, budget_enum, fmt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const liedim::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
