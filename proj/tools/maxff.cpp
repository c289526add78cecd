// maxff: gap sequences, classification and verification for y^m = x^i (x^2 + 1).
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxff/classify.hpp"
#include "maxff/report.hpp"
#include "maxff/suites.hpp"
#include "maxff/wsemi.hpp"

namespace {

using namespace maxff;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PlaceTag parse_place(const std::string& s) {
  if (s == "p0") return PlaceTag::P0;
  if (s == "pinf") return PlaceTag::PInf;
  return PlaceTag::PAlphaPlus;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
  return kOk;
}

struct SemigroupArgs {
  std::int64_t q = 0, i = 0;
  std::string place, format = "table";
  bool oracle = false;
};

int run_semigroup(const SemigroupArgs& a) {
  CurveParams params;
  try {
    params = CurveParams::from_q(a.q, a.i);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::int64_t m = params.m, i = params.i;
  const PlaceTag place = parse_place(a.place);

  std::vector<std::int64_t> gaps;
  std::shared_ptr<const FieldCtx> ctx;
  if (place == PlaceTag::PAlphaPlus) {
    ctx = FieldCtx::make(params.p, params.h);
    gaps = gaps_series_oracle_palpha(m, i, *ctx, +1).gaps;
  } else {
    gaps = gaps_closed_form(m, i, place).gaps;
  }
  const auto sg = place == PlaceTag::P0     ? h_p0_generators(m, i)
                  : place == PlaceTag::PInf ? h_pinf_generators(m, i)
                                            : NumericalSemigroup::from_gaps(gaps, m);
  const auto gens = sg.minimal_generators();
  const auto apery = sg.apery_wrt(m);

  std::optional<bool> agree;
  std::string oracle_name;
  if (a.oracle) {
    if (place == PlaceTag::PAlphaPlus) {
      oracle_name = "series expansion at P(-alpha) and interval criterion";
      const auto minus = gaps_series_oracle_palpha(m, i, *ctx, -1).gaps;
      const auto sub = gaps_interval_subset_palpha(m, i);
      agree = minus == gaps && std::includes(gaps.begin(), gaps.end(), sub.begin(), sub.end());
    } else {
      oracle_name = "monomial pole orders up to 4m";
      const auto orders = monomial_semigroup_oracle(m, i, place, 4 * m);
      std::vector<std::int64_t> want;
      for (std::int64_t n = 0; n <= 4 * m; ++n)
        if (sg.contains(n)) want.push_back(n);
      agree = orders == want && sg.gaps() == gaps;
    }
  }

  const std::string pname(place_name(place));
  std::ostringstream os;
  if (a.format == "json") {
    Json j{{"q", params.q}, {"m", m},         {"i", i},         {"i_raw", params.i_raw},
           {"place", pname}, {"gaps", gaps}, {"generators", gens}, {"apery", apery}};
    if (agree) j["oracle"] = {{"method", oracle_name}, {"agree", *agree}};
    os << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    os << "i,place,gaps\n" << i << ',' << pname << ',' << join_ints(gaps) << '\n';
  } else {
    os << "q = " << params.q << ", m = " << m << ", i = " << i;
    if (params.i_raw != i) os << " (from " << params.i_raw << ")";
    os << ", genus " << params.genus << '\n';
    os << "G(" << pname << ") = " << join_ints(gaps) << '\n';
    os << "generators: " << join_ints(gens, ", ") << '\n';
    os << "Apery set w.r.t. " << m << ": " << join_ints(apery) << '\n';
    if (agree) os << "oracle (" << oracle_name << "): " << (*agree ? "agree" : "disagree") << '\n';
  }
  std::cout << os.str();
  return agree && !*agree ? kCheckFailed : kOk;
}

struct ClassifyArgs {
  std::int64_t m = 0, q = 0;
  bool field_checks = false, paper_labels = false;
  std::string format = "table", out;
};

int run_classify(const ClassifyArgs& a) {
  std::int64_t m = a.m;
  if (a.q != 0) {
    const auto pp = as_prime_power(a.q);
    if (!pp || pp->p == 2) throw UsageError("q=" + std::to_string(a.q) + " is not an odd prime power");
    m = (a.q + 1) / 2;
  }
  if (m < 2) throw UsageError("m must be at least 2");
  if (m > 1'000'000) throw UsageError("m must be at most 10^6");

  Classification c;
  try {
    c = classify(m, {a.field_checks, a.paper_labels});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string text;
  if (a.format == "json")
    text = to_json(c).dump(2) + "\n";
  else if (a.format == "csv")
    text = render_csv(c);
  else
    text = render_table(c);
  emit(text, a.out);

  for (const auto& r : c.classes)
    if (r.maximal && !*r.maximal) return kCheckFailed;
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all", format = "table";
  std::int64_t qmax = 49;
};

int run_verify(const VerifyArgs& a) {
  std::vector<SuiteResult> results;
  const bool all = a.suite == "all";
  if (all || a.suite == "tables25") results.push_back(check_tables25());
  if (all || a.suite == "maximality") results.push_back(check_maximality(odd_prime_powers(3, a.qmax)));
  if (all || a.suite == "oracles") {
    SuiteResult r{"oracles"};
    r.absorb(check_genus_consistency(400, 100));
    r.absorb(check_oracle_equivalence(200));
    r.absorb(check_apery_minimality(400));
    r.absorb(check_divisor_gaps(400));
    r.absorb(check_compact_generators(200));
    r.absorb(check_special_semigroups(100));
    results.push_back(std::move(r));
  }
  if (all || a.suite == "maps") results.push_back(check_maps(MapSuiteOptions{}.capped(a.qmax)));
  if (all) {
    results.push_back(check_counting(100'000, 10'000));
    results.push_back(check_distinguishing(60));
  }

  bool ok = true;
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      ok = ok && r.ok();
      arr.push_back({{"suite", r.name},
                     {"passed", r.ok()},
                     {"checks", r.checks},
                     {"checks_passed", r.passed},
                     {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
                     {"notes", r.notes}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      ok = ok && r.ok();
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.checks << " checks\n";
      for (const auto& n : r.notes) std::cout << "  " << n << '\n';
      if (r.first_failure) std::cout << "  first failure: " << *r.first_failure << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass semigroups, classification and map checks for y^m = x^i(x^2+1)"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "json", "csv"});

  SemigroupArgs sa;
  auto* sg = app.add_subcommand("semigroup", "Gap sequence and generators at one place");
  sg->add_option("--q", sa.q, "odd prime power q")->required();
  sg->add_option("--i", sa.i, "index i (any integer, reduced mod m)")->required()->allow_extra_args(false);
  sg->add_option("--place", sa.place, "p0, pinf or palpha")->required()->check(CLI::IsMember({"p0", "pinf", "palpha"}));
  sg->add_flag("--oracle", sa.oracle, "cross-check against an independent method");
  sg->add_option("--format", sa.format, "table, json or csv")->check(formats);

  ClassifyArgs ca;
  auto* cl = app.add_subcommand("classify", "Isomorphism classes for fixed m");
  auto* mopt = cl->add_option("--m", ca.m, "m >= 2");
  auto* qopt = cl->add_option("--q", ca.q, "odd prime power, m = (q+1)/2");
  mopt->excludes(qopt);
  cl->add_flag("--with-field-checks", ca.field_checks, "count rational places over F_{q^2}");
  cl->add_flag("--paper-labels", ca.paper_labels, "label classes by the larger member");
  cl->add_option("--format", ca.format, "table, json or csv")->check(formats);
  cl->add_option("--out", ca.out, "write the report to a file");

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", va.suite, "tables25, maximality, oracles, maps or all")
      ->check(CLI::IsMember({"tables25", "maximality", "oracles", "maps", "all"}));
  vf->add_option("--qmax", va.qmax, "largest q for point enumeration and map checks")->check(CLI::Range(3, 2047));
  vf->add_option("--format", va.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (sg->parsed()) return run_semigroup(sa);
    if (cl->parsed()) {
      if (mopt->count() == 0 && qopt->count() == 0) throw UsageError("classify needs --m or --q");
      return run_classify(ca);
    }
    return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
