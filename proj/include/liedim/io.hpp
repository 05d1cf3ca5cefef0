#ifndef LIEDIM_IO_HPP
#define LIEDIM_IO_HPP

#include <string>

#include <json.hpp>

#include "liedim/coset_reps.hpp"
#include "liedim/coset_scan.hpp"
#include "liedim/dimension.hpp"

namespace liedim {

using json = nlohmann::json;

/// {"p":.., "k":.., "factors":[{"lambda":..,"h":"(..)","t":..,"b":"(..)"}..],
///  "perm":"(..)"}
inline json rep_to_json(const CanonicalRep& rep) {
  json factors = json::array();
  for (const auto& f : rep.parts)
    factors.push_back(json{{"lambda", f.lambda},
                           {"h", to_cycle_string(f.h)},
                           {"t", f.t},
                           {"b", to_cycle_string(f.b)}});
  return json{{"p", rep.p},
              {"k", rep.d},
              {"factors", std::move(factors)},
              {"perm", to_cycle_string(rep.realized)}};
}

inline json verdict_to_json(const TransversalVerdict& v) {
  json out{{"p", v.p},
           {"k", v.k},
           {"total_cosets", v.total_cosets},
           {"hits", v.hits},
           {"expected", v.expected},
           {"status", v.ok ? "OK" : "MISMATCH"}};
  if (!v.ok) out["counterexample"] = v.counterexample;
  return out;
}

inline json pcomposition_to_json(const PComposition& c) {
  json arr = json::array();
  for (int e : c.parts) arr.push_back(e);
  return arr;
}

/// Big integers are emitted as decimal strings so nothing is rounded.
inline json report_to_json(const DimensionReport& r) {
  return json{{"p", r.p},
              {"k", r.k},
              {"kappa", pcomposition_to_json(r.kappa)},
              {"N", r.N.str()},
              {"dim_pf", r.dim_pf.str()},
              {"dim_lie", r.dim_lie.str()},
              {"liemax_upper", r.liemax_upper.str()},
              {"ratio", r.ratio},
              {"sandwich_ok", r.sandwich_ok},
              {"log_growth_approx", r.log_growth}};
}

inline std::string report_csv_header() {
  return "p,k,kappa,N,dim_pf,dim_lie,liemax_upper,ratio";
}

/// Plain decimal digits throughout; kappa is quoted since it contains commas.
inline std::string report_csv_row(const DimensionReport& r) {
  std::string kappa = "\"[";
  for (size_t i = 0; i < r.kappa.parts.size(); ++i) {
    if (i) kappa += ',';
    kappa += std::to_string(r.kappa.parts[i]);
  }
  kappa += "]\"";
  return std::to_string(r.p) + "," + std::to_string(r.k) + "," + kappa + "," + r.N.str() + "," +
         r.dim_pf.str() + "," + r.dim_lie.str() + "," + r.liemax_upper.str() + "," + r.ratio;
}

}  // namespace liedim

#endif
