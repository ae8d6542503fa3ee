// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matapprox/cli.h"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "CLI11.hpp"
#include "matapprox/approx.h"
#include "matapprox/error.h"
#include "matapprox/greedy.h"
#include "matapprox/instances.h"
#include "matapprox/io.h"
#include "matapprox/ip.h"
#include "matapprox/matroid.h"
#include "matapprox/quotient.h"
#include "matapprox/verify.h"

namespace matapprox {
namespace {

using BigRational = boost::multiprecision::cpp_rational;

// State shared by one invocation.
struct Context {
  bool float_out = false;
  std::vector<std::string> inputs;
  // Set by commands that print plain text instead of a JSON report.
  std::optional<std::string> raw;
  int exit_code = kExitOk;
};

void Put(Json& j, const std::string& key, const Rational& r,
         const Context& ctx) {
  j[key] = ToString(r);
  if (ctx.float_out) j[key + "_float"] = ToDouble(r);
}

Json MaskList(const SetFamily& f) {
  Json out = Json::array();
  for (Mask m : f) out.push_back(HexMask(m));
  return out;
}

IndependenceSystem LoadSystem(Context& ctx, const std::string& path,
                              bool require_matroid = false) {
  ctx.inputs.push_back(path);
  return SystemFromJson(ReadJsonFile(path), require_matroid);
}

AcceptableSet LoadAcceptable(Context& ctx, const IndependenceSystem& sys,
                             const std::string& path) {
  ctx.inputs.push_back(path);
  return AcceptableSet(sys, FamilyFromJson(ReadJsonFile(path)));
}

std::string InputsDigest(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
      mix(static_cast<unsigned char>(*it));
    }
    mix(0);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json ExpectedJson(const ExpectedValue& e, const Context& ctx) {
  Json j;
  Put(j, "value", e.value, ctx);
  j["relation"] = e.relation == ExpectedValue::Relation::kEqual ? "equal"
                                                                 : "at_most";
  j["source"] =
      e.source == ExpectedValue::Source::kStated ? "stated" : "computed";
  return j;
}

StableSetReading ParseReading(const std::string& text) {
  if (text == "exact4") return StableSetReading::kExactlyFour;
  if (text == "atmost4") return StableSetReading::kAtMostFour;
  throw Error(ErrorCode::kInvalidInput,
              "--reading must be exact4 or atmost4");
}

// Prints the instance, or writes it and reports the file.
Json EmitInstance(Context& ctx, const Json& instance, const std::string& out) {
  if (out.empty()) {
    ctx.raw = instance.dump() + "\n";
    return Json();
  }
  WriteJsonFile(out, instance);
  Json j;
  j["file"] = out;
  j["n"] = instance["n"];
  return j;
}

struct Stats {
  std::optional<Rational> min;
  BigRational sum = 0;
  std::size_t count = 0;

  void Add(const Rational& r) {
    if (!min || r < *min) min = r;
    sum += BigRational(r.numerator(), r.denominator());
    ++count;
  }
  Json ToJson(const Context& ctx) const {
    Json j;
    if (count == 0) {
      j["min"] = nullptr;
      j["mean"] = nullptr;
      return j;
    }
    Put(j, "min", *min, ctx);
    const BigRational mean = sum / count;
    j["mean"] = mean.str();
    if (ctx.float_out) j["mean_float"] = mean.convert_to<double>();
    return j;
  }
};

Rational BestValue(const IndependenceSystem& sys, const Weights& v) {
  return OptimalBasis(sys, v).value;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Context ctx;
  std::function<Json()> handler;

  CLI::App app{"Independence systems, greedy bounds and inner matroids",
               "matapprox"};
  app.require_subcommand(1);
  app.add_flag("--float", ctx.float_out,
               "Add decimal approximations next to exact rationals");

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Write instance JSON");
  gen->require_subcommand(1);
  std::string gen_out;
  std::string fixture_name, reading = "exact4", out_dir = ".";
  bool with_acceptable = false, with_inner = false;
  CLI::App* gen_fixture = gen->add_subcommand("fixture", "Named example");
  gen_fixture->add_option("--name", fixture_name)->required();
  gen_fixture->add_option("--reading", reading,
                          "stab9 acceptable family: exact4 or atmost4");
  gen_fixture->add_option("--out-dir", out_dir);
  gen_fixture->add_flag("--with-acceptable", with_acceptable);
  gen_fixture->add_flag("--with-inner", with_inner);
  gen_fixture->callback([&] {
    handler = [&] {
      const FixtureBundle b = NamedFixture(fixture_name, ParseReading(reading));
      Json files = Json::array();
      const std::string base = out_dir + "/" + b.name;
      WriteJsonFile(base + ".json", SystemToJson(b.sys));
      files.push_back(base + ".json");
      if (with_acceptable && b.acceptable) {
        WriteJsonFile(base + ".acceptable.json", FamilyToJson(*b.acceptable));
        files.push_back(base + ".acceptable.json");
      }
      if (with_inner && b.inner) {
        WriteJsonFile(base + ".inner.json", SystemToJson(b.inner->system()));
        files.push_back(base + ".inner.json");
      }
      Json j;
      j["fixture"] = b.name;
      j["files"] = files;
      Json expected = Json::object();
      for (const auto& [key, value] : b.expected) {
        expected[key] = ExpectedJson(value, ctx);
      }
      j["expected"] = expected;
      return j;
    };
  });
  int e1 = 0, k1 = 0, e2 = 0, k2 = 0;
  CLI::App* gen_twin = gen->add_subcommand("twin-peaks", "Twin-peaks system");
  gen_twin->add_option("--e1", e1)->required();
  gen_twin->add_option("--k1", k1)->required();
  gen_twin->add_option("--e2", e2)->required();
  gen_twin->add_option("--k2", k2)->required();
  gen_twin->add_option("--out", gen_out);
  gen_twin->callback([&] {
    handler = [&] {
      return EmitInstance(ctx, SystemToJson(TwinPeaks(e1, k1, e2, k2)),
                          gen_out);
    };
  });
  int path_n = 0;
  CLI::App* gen_path = gen->add_subcommand("path", "Path stable sets");
  gen_path->add_option("--n", path_n)->required()->check(CLI::Range(1, 24));
  gen_path->add_option("--out", gen_out);
  gen_path->callback([&] {
    handler = [&] {
      return EmitInstance(ctx, SystemToJson(PathStableSet(path_n)), gen_out);
    };
  });
  int random_n = 0;
  std::string density = "1/2";
  std::uint64_t random_seed = 0;
  bool allow_loops = false;
  CLI::App* gen_random = gen->add_subcommand("random", "Random system");
  gen_random->add_option("--n", random_n)->required();
  gen_random->add_option("--density", density);
  gen_random->add_option("--seed", random_seed)->required();
  gen_random->add_flag("--allow-loops", allow_loops);
  gen_random->add_option("--out", gen_out);
  gen_random->callback([&] {
    handler = [&] {
      return EmitInstance(
          ctx,
          SystemToJson(RandomHereditary(random_n, ParseRational(density),
                                        random_seed, allow_loops)),
          gen_out);
    };
  });

  // Shared file options.
  std::string system_path, acceptable_path, inner_path, weights_path,
      tiebreak_path;

  // check
  bool require_matroid = false;
  CLI::App* check = app.add_subcommand("check", "Validate and classify");
  check->add_option("--system", system_path)->required();
  check->add_flag("--require-matroid", require_matroid);
  check->callback([&] {
    handler = [&] {
      const IndependenceSystem sys =
          LoadSystem(ctx, system_path, require_matroid);
      Json j;
      j["n"] = sys.n();
      j["maximal"] = sys.maximal().size();
      j["normal"] = IsNormal(sys);
      j["is_matroid"] = IsMatroid(sys);
      j["rank_axioms"] = CheckRankAxioms(RankTable::Of(sys));
      j["basis_exchange"] = CheckBasisExchange(sys.maximal());
      j["rank"] = Rank(sys, sys.ground().full());
      return j;
    };
  });

  // greedy
  CLI::App* greedy = app.add_subcommand("greedy", "Run the greedy algorithm");
  greedy->add_option("--system", system_path)->required();
  greedy->add_option("--weights", weights_path)->required();
  greedy->add_option("--tiebreak", tiebreak_path);
  greedy->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      ctx.inputs.push_back(weights_path);
      const Weights v = WeightsFromJson(ReadJsonFile(weights_path), sys.ground());
      TieBreak tb = TieBreak::Identity(sys.n());
      if (!tiebreak_path.empty()) {
        ctx.inputs.push_back(tiebreak_path);
        tb = TieBreakFromJson(ReadJsonFile(tiebreak_path), sys.n());
      }
      const GreedyResult g = Greedy(sys, v, tb);
      const GreedyResult o = OptimalBasis(sys, v);
      Json j;
      j["set"] = HexMask(g.set);
      Put(j, "value", g.value, ctx);
      j["optimal_set"] = HexMask(o.set);
      Put(j, "optimal", o.value, ctx);
      if (o.value > 0) Put(j, "ratio", g.value / o.value, ctx);
      j["tiebreak"] = tb.perm();
      return j;
    };
  });

  // q
  bool with_tight = false, with_hkj = false;
  CLI::App* q = app.add_subcommand("q", "Rank quotient");
  q->add_option("--system", system_path)->required();
  q->add_flag("--tight", with_tight, "Add {0,1} weights attaining q");
  q->add_flag("--hkj", with_hkj, "Add the circuit bound 1/p");
  q->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      const QuotientReport r = RankQuotient(sys);
      Json j;
      Put(j, "q", r.q, ctx);
      j["witness"] = HexMask(r.witness);
      j["l"] = r.l;
      j["r"] = r.r;
      if (with_tight) {
        const TightInstance t = TightWeights(sys);
        j["tight"] = {{"weights", WeightsToJson(t.weights)["v"]},
                      {"perm", t.tie_break.perm()},
                      {"ratio", ToString(t.ratio)}};
      }
      if (with_hkj) {
        const CircuitBoundReport cb = CircuitBound(sys);
        j["p"] = cb.p;
        Put(j, "bound", cb.bound, ctx);
      }
      return j;
    };
  });

  // rho
  bool dagger = false;
  CLI::App* rho = app.add_subcommand("rho", "Approximation quality");
  rho->add_option("--system", system_path)->required();
  rho->add_option("--acceptable", acceptable_path)->required();
  rho->add_option("--inner", inner_path)->required();
  rho->add_flag("--dagger", dagger, "Use the downward closure of O");
  rho->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      AcceptableSet acceptable = LoadAcceptable(ctx, sys, acceptable_path);
      if (dagger) acceptable = acceptable.Dagger();
      const IndependenceSystem inner = LoadSystem(ctx, inner_path);
      const RhoReport r = Rho(acceptable, inner);
      Json j;
      Put(j, "rho", r.rho, ctx);
      j["witness"] = HexMask(r.argmin);
      j["inner_basis"] = HexMask(r.inner_basis);
      return j;
    };
  });

  // rho-max
  bool heuristic = false;
  int budget = 2000;
  std::uint64_t seed = 1;
  CLI::App* rho_max = app.add_subcommand("rho-max", "Substitutability index");
  rho_max->add_option("--system", system_path)->required();
  rho_max->add_option("--acceptable", acceptable_path)->required();
  rho_max->add_flag("--heuristic", heuristic, "Local search lower bound");
  rho_max->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
  rho_max->add_option("--seed", seed);
  rho_max->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      const AcceptableSet acceptable = LoadAcceptable(ctx, sys, acceptable_path);
      if (!heuristic && sys.n() > kMaxExactN) {
        throw Error(ErrorCode::kCapability,
                    "exact rho-max supports n <= 6; use --heuristic or "
                    "export-ip");
      }
      const RhoMaxResult r = heuristic
                                 ? RhoMaxHeuristic(acceptable, budget, seed)
                                 : RhoMaxExact(acceptable);
      Json j;
      Put(j, "rho_max", r.rho, ctx);
      j["method"] = heuristic ? "heuristic" : "exact";
      j["certified"] = heuristic ? "lower_bound" : "exact";
      j["rank"] = r.best.rank();
      j["witness"] = SystemToJson(r.best.system());
      return j;
    };
  });

  // export-ip
  std::string ip_out;
  bool solve = false;
  CLI::App* export_ip = app.add_subcommand("export-ip", "Write the IP model");
  export_ip->add_option("--system", system_path)->required();
  export_ip->add_option("--acceptable", acceptable_path)->required();
  export_ip->add_option("--out", ip_out);
  export_ip->add_flag("--solve", solve, "Brute-force optimum (n <= 4)");
  export_ip->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      const AcceptableSet acceptable = LoadAcceptable(ctx, sys, acceptable_path);
      const IPModel model = BuildIp(acceptable);
      const std::string text = ExportIp(model);
      if (ip_out.empty() && !solve) {
        ctx.raw = text;
        return Json();
      }
      Json j;
      if (!ip_out.empty()) {
        std::ofstream file(ip_out);
        if (!file) {
          throw Error(ErrorCode::kInvalidInput, "cannot write " + ip_out);
        }
        file << text;
        j["file"] = ip_out;
      }
      j["variables"] = model.num_variables();
      j["rows"] = model.rows().size();
      if (solve) {
        const IPSolution s = SolveIpBruteforce(model, acceptable);
        Put(j, "t_star", s.t_star, ctx);
        j["feasible"] = s.feasible;
        j["round_trip"] = s.round_trip;
      }
      return j;
    };
  });

  // verify
  std::string suite = "all", shard_text = "0/1";
  int n_max = 4, trials = 200, random_count = 100;
  std::uint64_t verify_seed = 42;
  CLI::App* verify = app.add_subcommand("verify", "Property suites");
  verify->add_option("--suite", suite, "all or one suite name");
  verify->add_option("--n-max", n_max)->check(CLI::Range(1, 12));
  verify->add_option("--seed", verify_seed);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--random", random_count)->check(CLI::NonNegativeNumber);
  verify->add_option("--shard", shard_text, "i/k: check instance j iff j%k==i");
  verify->callback([&] {
    handler = [&] {
      VerifyOptions o;
      o.exhaustive_n = n_max;
      o.random_n_min = n_max;
      o.random_n_max = n_max + 1;
      o.random_count = random_count;
      o.trials = trials;
      o.seed = verify_seed;
      int i = 0, k = 0;
      char tail = 0;
      if (std::sscanf(shard_text.c_str(), "%d/%d%c", &i, &k, &tail) != 2 ||
          k < 1 || i < 0 || i >= k) {
        throw Error(ErrorCode::kInvalidInput, "--shard must be i/k, 0 <= i < k");
      }
      o.shard = i;
      o.shards = k;
      std::vector<std::string> names;
      if (suite == "all") {
        names = SuiteNames();
      } else {
        names.push_back(suite);
      }
      Json results = Json::array();
      bool passed = true;
      for (const std::string& name : names) {
        const SuiteResult r = RunSuite(name, o);
        passed &= r.passed;
        Json s;
        s["suite"] = r.name;
        s["passed"] = r.passed;
        s["checked"] = r.checked;
        s["message"] = r.message;
        if (!r.passed) s["counterexample"] = r.counterexample;
        results.push_back(s);
      }
      Json j;
      j["passed"] = passed;
      j["shard"] = shard_text;
      j["suites"] = results;
      if (!passed) ctx.exit_code = kExitVerifyFailed;
      return j;
    };
  });

  // compare
  int compare_trials = 200;
  std::uint64_t compare_seed = 1;
  CLI::App* compare =
      app.add_subcommand("compare", "Greedy versus the inner matroid");
  compare->add_option("--system", system_path)->required();
  compare->add_option("--acceptable", acceptable_path)->required();
  compare->add_option("--inner", inner_path);
  compare->add_option("--trials", compare_trials)->check(CLI::PositiveNumber);
  compare->add_option("--seed", compare_seed);
  compare->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
  compare->callback([&] {
    handler = [&] {
      const IndependenceSystem sys = LoadSystem(ctx, system_path);
      const AcceptableSet acceptable = LoadAcceptable(ctx, sys, acceptable_path);
      std::string source;
      std::optional<Matroid> inner;
      if (!inner_path.empty()) {
        ctx.inputs.push_back(inner_path);
        inner = MatroidFromJson(ReadJsonFile(inner_path));
        if (!IsInner(sys, inner->system())) {
          throw Error(ErrorCode::kNotInner, "--inner is not inside the system");
        }
        source = "given";
      } else if (sys.n() <= kMaxExactN) {
        inner = RhoMaxExact(acceptable).best;
        source = "exact";
      } else {
        inner = RhoMaxHeuristic(acceptable, budget, compare_seed).best;
        source = "heuristic";
      }
      const bool all_independent =
          acceptable.sets().members() == IndependentSets(sys);
      const IndependenceSystem dagger_sys =
          HereditaryClosure(acceptable.Dagger().sets());
      const TieBreak tb = TieBreak::Identity(sys.n());
      std::mt19937_64 rng(compare_seed);
      Stats greedy_sys, greedy_dagger, inner_stats;
      for (int t = 0; t < compare_trials; ++t) {
        const Weights v = RandomWeights(sys.ground(), rng);
        const Rational best = BestValue(sys, v);
        if (best == 0) continue;
        if (!all_independent && !InW(acceptable, v)) continue;
        greedy_sys.Add(Greedy(sys, v, tb).value / best);
        greedy_dagger.Add(Greedy(dagger_sys, v, tb).value / best);
        inner_stats.Add(BestValue(inner->system(), v) / best);
      }
      Json j;
      j["trials"] = compare_trials;
      j["samples_used"] = inner_stats.count;
      j["inner"] = {{"source", source},
                    {"rho", ToString(RhoMatroid(acceptable, *inner).rho)},
                    {"witness", SystemToJson(inner->system())}};
      j["greedy_system"] = greedy_sys.ToJson(ctx);
      j["greedy_dagger"] = greedy_dagger.ToJson(ctx);
      j["inner_matroid"] = inner_stats.ToJson(ctx);
      if (!IsMatroid(dagger_sys) &&
          dagger_sys.maximal().members() != std::vector<Mask>{0}) {
        const TightInstance tight = TightWeights(dagger_sys);
        const GreedyResult g = Greedy(dagger_sys, tight.weights, tight.tie_break);
        Json d;
        d["weights"] = WeightsToJson(tight.weights)["v"];
        d["perm"] = tight.tie_break.perm();
        Put(d, "ratio_vs_dagger_optimum", tight.ratio, ctx);
        Put(d, "ratio_vs_system_optimum",
            g.value / BestValue(sys, tight.weights), ctx);
        d["in_w"] = InW(acceptable, tight.weights);
        j["dagger_tight"] = d;
      }
      return j;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report;
  try {
    report = handler();
  } catch (const Error& e) {
    Json j;
    j["error"] = e.what();
    err << j.dump() << '\n';
    return e.code() == ErrorCode::kCapability ? kExitCapability
                                              : kExitValidation;
  }
  if (ctx.raw) {
    out << *ctx.raw;
    return ctx.exit_code;
  }
  std::vector<std::string> echo(argv + 1, argv + argc);
  report["command"] = echo;
  report["inputs_digest"] = InputsDigest(ctx.inputs);
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  out << report.dump(2) << '\n';
  return ctx.exit_code;
}

}  // namespace matapprox
