#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reflalg/errors.hpp"
#include "reflalg/presentations.hpp"

using namespace reflalg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  bool json = false;
  bool fail_fast = false;
  double time_budget = 0;  // seconds, 0 = none
  std::size_t max_detail_terms = 6;
};

/// One labelled piece of a residual (a matrix entry, a coefficient, ...).
using Residual = std::vector<std::pair<std::string, NCPoly>>;

struct CheckReport {
  std::string check;
  std::string status;
  long long residual_terms = 0;
  long long elapsed_ms = 0;
  std::optional<std::string> detail;
};

struct StopRun {};

Residual from_matrix(const SpectralMatrix& m) {
  Residual r;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m(i, j).is_zero()) {
        r.emplace_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", m(i, j));
      }
    }
  }
  return r;
}

Residual single(NCPoly p) { return {{"", std::move(p)}}; }

// Leading terms in canonical (descending) order, at most `budget` of them.
std::string excerpt(const NCPoly& p, std::size_t& budget) {
  NCPoly head;
  std::size_t taken = 0;
  for (auto it = p.terms().rbegin(); it != p.terms().rend() && taken < budget; ++it, ++taken) {
    head += NCPoly(it->first, it->second);
  }
  budget -= taken;
  std::string s = head.str();
  if (taken < p.size()) s += " + ... (" + std::to_string(p.size() - taken) + " more terms)";
  return s;
}

class Runner {
 public:
  explicit Runner(Options opt) : opt_(opt) {}

  /// Runs one check; `prior_ms` is work done on its behalf before the call.
  void run(const std::string& name, const std::function<Residual()>& body, long long prior_ms = 0) {
    CheckReport rep;
    rep.check = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Residual res = body();
      std::size_t terms = 0;
      for (const auto& [label, p] : res) terms += p.size();
      rep.residual_terms = static_cast<long long>(terms);
      rep.status = terms == 0 ? "pass" : "fail";
      if (terms > 0) {
        std::string d;
        std::size_t budget = opt_.max_detail_terms;
        for (const auto& [label, p] : res) {
          if (p.is_zero()) continue;
          if (budget == 0) {
            d += "; ...";
            break;
          }
          if (!d.empty()) d += "; ";
          if (!label.empty()) d += label + ": ";
          d += excerpt(p, budget);
        }
        rep.detail = d;
      }
    } catch (const std::exception& e) {
      rep.status = "fail";
      rep.residual_terms = -1;
      rep.detail = std::string("error: ") + e.what();
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count() +
                     prior_ms;
    emit(rep);
    if (rep.status == "fail") {
      failed_ = true;
      if (opt_.fail_fast) throw StopRun{};
    }
  }

  void emit(const CheckReport& rep) {
    std::lock_guard<std::mutex> lock(out_mutex());
    if (opt_.json) {
      json j;
      j["check"] = rep.check;
      j["status"] = rep.status;
      j["residual_terms"] = rep.residual_terms;
      j["elapsed_ms"] = rep.elapsed_ms;
      j["detail"] = rep.detail ? json(*rep.detail) : json(nullptr);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (rep.status == "pass" ? "PASS " : "FAIL ") << rep.check << "  [" << rep.residual_terms
                << " terms, " << rep.elapsed_ms << " ms]";
      if (rep.detail) std::cout << "\n     " << *rep.detail;
      std::cout << '\n';
    }
    std::cout.flush();
    ++count_;
  }

  bool failed() const { return failed_; }
  std::size_t count() const { return count_; }
  const Options& options() const { return opt_; }

  static std::mutex& out_mutex() {
    static std::mutex m;
    return m;
  }

 private:
  Options opt_;
  bool failed_ = false;
  std::size_t count_ = 0;
};

/// Lazily built tower shared by the suites of one invocation.
class Context {
 public:
  const EulerTable& table(unsigned min_degree = 44) {
    if (!table_ || table_->max_degree() < min_degree) table_ = EulerTable::build(min_degree);
    return *table_;
  }
  const TowerLevel& level(unsigned n) {
    if (levels_.empty()) levels_.push_back(level0());
    while (levels_.size() <= n) levels_.push_back(dress(levels_.back(), table()));
    return levels_[n];
  }

 private:
  std::optional<EulerTable> table_;
  std::vector<TowerLevel> levels_;
};

void emit_suite(Runner& run, const std::string& prefix, const std::function<SuiteReport()>& make) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<SuiteReport> report;
  try {
    report = make();
  } catch (const std::exception& e) {
    const std::string what = e.what();
    run.run(prefix, [&]() -> Residual { throw AlgebraError(what); });
    return;
  }
  // The suite is evaluated as a whole; its first record carries that time.
  long long setup_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  for (const auto& res : report->results) {
    run.run(prefix + "/" + res.label, [&] { return single(res.residual); }, setup_ms);
    setup_ms = 0;
  }
}

void verify_euler(Runner& run, Context& ctx, unsigned max_n) {
  const EulerTable& table =
      2 * max_n + 2 <= ctx.table().max_degree() ? ctx.table() : ctx.table(2 * max_n + 2);
  for (unsigned n = 0; n <= max_n; ++n) {
    run.run("euler/prE/n=" + std::to_string(n), [&] { return single(NCPoly(check_prE(n, table))); });
  }
}

void verify_functional(Runner& run, Context& ctx) {
  constexpr unsigned kOrder = 10;
  const auto res = check_functional_relation(kOrder, ctx.table());
  for (std::size_t m = 0; m < res.series.size(); ++m) {
    run.run("euler/functional/w^" + std::to_string(m), [&] { return single(NCPoly(res.series[m])); });
  }
  for (std::size_t n = 0; n < res.recurrence.size(); ++n) {
    run.run("euler/recurrence/n=" + std::to_string(n), [&] { return single(NCPoly(res.recurrence[n])); });
  }
}

void verify_yang_baxter(Runner& run) {
  run.run("yang-baxter/residual", [] { return from_matrix(check_yang_baxter()); });
  run.run("yang-baxter/unitarity", [] {
    const CPoly u = X();
    return from_matrix(rhat(u) * rhat(-u) - SpectralMatrix::identity(4).scaled(CPoly(1) - u * u));
  });
}

void verify_rll(Runner& run) {
  std::optional<RllResidual> r;
  run.run("rll/rll", [&] {
    r = check_rll(1);
    return from_matrix(r->rll);
  });
  run.run("rll/crossed", [&] { return from_matrix(r ? r->crossed : check_rll(1).crossed); });
  run.run("rll/L(x)L(-x)", [] {
    const SpectralMatrix l = l_matrix(1);
    const NCPoly d = l_determinant(1);
    return from_matrix(l * l.subst(Var::x, -X()) - SpectralMatrix::diag({d, d}));
  });
}

void verify_level(Runner& run, Context& ctx, unsigned n) {
  const std::string p = "tower/" + std::to_string(n) + "/";
  bool built = false;
  run.run(p + "extraction", [&] {
    const TowerLevel& t = ctx.level(n);
    built = true;
    if (n == 0) return single(t.gen("mu") - NCPoly(Mu0()));
    return Residual{};
  });
  if (!built) return;
  const TowerLevel& t = ctx.level(n);
  run.run(p + "reflection", [&] { return from_matrix(check_reflection(t.matrix)); });
  run.run(p + "roundtrip", [&] { return from_matrix(matrix_from_components(t.components) - t.matrix); });
  run.run(p + "delta", [&] {
    Residual r{{"even", t.delta - t.delta.subst(Var::x, -X())}};
    if (n == 0) r.emplace_back("closed form", t.delta - NCPoly(Mu0() * Mu0() - X() * X()));
    return r;
  });
  run.run(p + "delta-central", [&] {
    Residual r;
    const auto by_x = split_x(t.delta);
    for (std::size_t k = 0; k < by_x.coeffs().size(); ++k) {
      for (auto& [g, c] : is_central(by_x.coeffs()[k], t)) {
        r.emplace_back("[x^" + std::to_string(k) + "," + g + "]", std::move(c));
      }
    }
    return r;
  });
  if (n == 0) return;
  const TowerLevel& prev = ctx.level(n - 1);
  run.run(p + "two-path", [&] {
    const Components c = dressed_components(prev.components, n);
    return Residual{{"h", c.h - t.components.h},
                    {"hbar", c.hbar - t.components.hbar},
                    {"e", c.e - t.components.e},
                    {"f", c.f - t.components.f}};
  });
  run.run(p + "mu-recursion", [&] {
    return single(t.gen("mu") - prev.gen("mu") * (NCPoly(1) + casimir(n)) * Rational(1, 4));
  });
  run.run(p + "delta-recursion", [&] { return single(t.delta - l_determinant(n) * prev.delta); });
  run.run(p + "delta-recursion-squared", [&] {
    const NCPoly lam = l_determinant(n);
    return single(t.delta - lam * lam * prev.delta);
  });
}

void verify_tower(Runner& run, Context& ctx, unsigned max_level) {
  for (unsigned n = 0; n <= max_level; ++n) verify_level(run, ctx, n);
}

void verify_hahn(Runner& run, Context& ctx) {
  const TowerLevel& t1 = ctx.level(1);
  emit_suite(run, "n1/serre", [&] { return serre_check(t1.gen("h_0"), t1.gen("e_1"), t1.gen("f_1")); });
  emit_suite(run, "n1/higgs", [&] { return check_higgs_n1(t1); });
  emit_suite(run, "n1/center", [&] { return check_center_n1(t1); });
  emit_suite(run, "n1/realization", [&] { return check_realization_n1(t1); });
  emit_suite(run, "n1/hahn", [&] { return hahn_check(t1); });
}

void verify_n2(Runner& run, Context& ctx) {
  const TowerLevel& t2 = ctx.level(2);
  emit_suite(run, "n2/relations", [&] { return check_n2(t2); });
  std::optional<CenterN2Report> center;
  emit_suite(run, "n2/center", [&] {
    center = check_center_n2(t2);
    return center->centrality;
  });
  if (center) emit_suite(run, "n2/center-variant", [&] { return center->variant; });
}

json dump_level(Context& ctx, unsigned n) {
  const TowerLevel& t = ctx.level(n);
  json j;
  j["level"] = n;
  json gens = json::object();
  for (const auto& [name, g] : t.generators) gens[name] = g.str();
  j["generators"] = gens;
  j["components"] = {{"h", t.components.h.str()},
                     {"hbar", t.components.hbar.str()},
                     {"e", t.components.e.str()},
                     {"f", t.components.f.str()}};
  j["delta"] = t.delta.str();
  json euler = json::array();
  for (unsigned d = 0; d <= 2 * n; ++d) {
    euler.push_back({{"degree", d},
                     {"E", to_cpoly(ctx.table().euler(d)).str()},
                     {"B", ctx.table().bernoulli(d).str()}});
  }
  j["euler"] = euler;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for truncated reflection algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Newline-delimited JSON check records");
  app.add_flag("--fail-fast", opt.fail_fast, "Stop at the first failing check");
  app.add_option("--time-budget-seconds", opt.time_budget, "Abort with exit code 3 after S seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-detail-terms", opt.max_detail_terms, "Residual terms shown in detail")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  unsigned max_n = 20;
  auto* v_euler = verify->add_subcommand("euler", "Euler identity for n = 0..N");
  v_euler->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(0, 200));
  auto* v_yb = verify->add_subcommand("yang-baxter", "Yang-Baxter equation");
  auto* v_rll = verify->add_subcommand("rll", "RLL relations");
  unsigned tower_level = 2;
  auto* v_tower = verify->add_subcommand("tower", "Reflection tower up to a level");
  v_tower->add_option("--level", tower_level, "Top level (0-3)")->check(CLI::Range(0, 3));
  auto* v_hahn = verify->add_subcommand("hahn", "N=1 suites: Serre, Higgs, center, realization, Hahn");
  auto* v_n2 = verify->add_subcommand("n2", "N=2 relations and central elements");
  auto* v_all = verify->add_subcommand("all", "Everything except level 3");
  for (auto* s : {v_euler, v_yb, v_rll, v_tower, v_hahn, v_n2, v_all}) s->fallthrough();

  unsigned dump_lvl = 0;
  auto* dump = app.add_subcommand("dump", "Canonical JSON dump of a tower level");
  dump->add_option("--level", dump_lvl, "Level (0-3)")->required()->check(CLI::Range(0, 3));
  dump->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (v_tower->parsed() && tower_level == 3 && opt.time_budget == 0) opt.time_budget = 600;

  Runner runner(opt);
  Context ctx;
  auto work = [&]() -> int {
    try {
      if (dump->parsed()) {
        const json j = dump_level(ctx, dump_lvl);
        std::lock_guard<std::mutex> lock(Runner::out_mutex());
        std::cout << j.dump(2) << '\n';
        return kExitPass;
      }
      if (v_euler->parsed()) verify_euler(runner, ctx, max_n);
      if (v_yb->parsed()) verify_yang_baxter(runner);
      if (v_rll->parsed()) verify_rll(runner);
      if (v_tower->parsed()) verify_tower(runner, ctx, tower_level);
      if (v_hahn->parsed()) verify_hahn(runner, ctx);
      if (v_n2->parsed()) verify_n2(runner, ctx);
      if (v_all->parsed()) {
        verify_euler(runner, ctx, 20);
        verify_functional(runner, ctx);
        verify_yang_baxter(runner);
        verify_rll(runner);
        verify_tower(runner, ctx, 2);
        verify_hahn(runner, ctx);
        verify_n2(runner, ctx);
      }
    } catch (const StopRun&) {
      return kExitFail;
    }
    return runner.failed() ? kExitFail : kExitPass;
  };

  if (opt.time_budget <= 0) return work();

  auto fut = std::async(std::launch::async, work);
  if (fut.wait_for(std::chrono::duration<double>(opt.time_budget)) == std::future_status::ready) {
    return fut.get();
  }
  std::lock_guard<std::mutex> lock(Runner::out_mutex());
  std::cout.flush();
  std::cerr << "time budget of " << opt.time_budget << " s exceeded\n";
  std::quick_exit(kExitBudget);
}
