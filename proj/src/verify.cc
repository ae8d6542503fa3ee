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

#include "matapprox/verify.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "matapprox/approx.h"
#include "matapprox/error.h"
#include "matapprox/greedy.h"
#include "matapprox/instances.h"
#include "matapprox/ip.h"
#include "matapprox/matroid.h"
#include "matapprox/quotient.h"

namespace matapprox {
namespace {

// Thrown to unwind out of an enumeration after the first failure.
struct Stop {};

class Run {
 public:
  explicit Run(std::string name) { result_.name = std::move(name); }

  // Records the first failure and unwinds. `describe` builds the instance
  // JSON and is only called on failure.
  void Expect(bool ok, const std::string& what,
              const std::function<Json()>& describe) {
    if (ok) return;
    result_.passed = false;
    result_.message = what;
    result_.counterexample = describe();
    throw Stop{};
  }

  void Count() { ++result_.checked; }
  SuiteResult& result() { return result_; }

 private:
  SuiteResult result_;
};

// Wraps a suite body: Stop ends it, other exceptions count as failures.
SuiteResult Execute(const std::string& name,
                    const std::function<void(Run&)>& body) {
  Run run(name);
  try {
    body(run);
  } catch (const Stop&) {
  } catch (const std::exception& e) {
    run.result().passed = false;
    run.result().message = std::string("exception: ") + e.what();
  }
  if (run.result().passed && run.result().message.empty()) {
    run.result().message =
        "ok, " + std::to_string(run.result().checked) + " checks";
  }
  return run.result();
}

Json Describe(const IndependenceSystem& sys,
              const SetFamily* acceptable = nullptr,
              const Matroid* inner = nullptr, const Weights* v = nullptr) {
  Json j;
  j["system"] = SystemToJson(sys);
  if (acceptable) j["acceptable"] = FamilyToJson(*acceptable);
  if (inner) j["inner"] = SystemToJson(inner->system());
  if (v) j["weights"] = WeightsToJson(*v);
  return j;
}

std::uint64_t InstanceSeed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

struct Visit {
  const IndependenceSystem& sys;
  std::mt19937_64& rng;
};

// Visits every system with n <= min(exhaustive_n, exhaustive_cap), then
// random_count random systems of nondecreasing size in
// [random_n_min, min(random_n_max, random_cap)]. Each instance gets its own
// generator, so sharding does not change what is checked on an instance.
void ForEachSystem(const VerifyOptions& o, int exhaustive_cap, int random_cap,
                   bool normal_random, const std::function<void(Visit)>& fn) {
  std::uint64_t index = 0;
  auto mine = [&o](std::uint64_t i) {
    return o.shards <= 1 ||
           i % static_cast<std::uint64_t>(o.shards) ==
               static_cast<std::uint64_t>(o.shard);
  };
  const int exhaustive = std::min({o.exhaustive_n, exhaustive_cap,
                                   kMaxAllSystemsN});
  for (int n = 1; n <= exhaustive; ++n) {
    ForEachIndependenceSystem(n, [&](const IndependenceSystem& sys) {
      const std::uint64_t i = index++;
      if (!mine(i)) return;
      std::mt19937_64 rng(InstanceSeed(o.seed, i));
      fn({sys, rng});
    });
  }
  const int hi = std::min(o.random_n_max, random_cap);
  const int lo = std::max(1, std::min(o.random_n_min, hi));
  if (hi < 1) return;
  static const Rational kDensities[] = {Rational(1, 4), Rational(1, 3),
                                        Rational(1, 2), Rational(2, 3),
                                        Rational(3, 4)};
  for (int k = 0; k < o.random_count; ++k) {
    const std::uint64_t i = index++;
    if (!mine(i)) continue;
    std::mt19937_64 rng(InstanceSeed(o.seed, i));
    const int n = lo + static_cast<int>(
                           static_cast<std::int64_t>(k) * (hi - lo + 1) /
                           std::max(1, o.random_count));
    const Rational density = kDensities[rng() % 5];
    const bool loops = !normal_random && rng() % 4 == 0;
    const IndependenceSystem sys = RandomHereditary(n, density, rng(), loops);
    fn({sys, rng});
  }
}

bool AllLoops(const IndependenceSystem& sys) {
  return sys.maximal().members() == std::vector<Mask>{0};
}

bool HasNonempty(const SetFamily& f) {
  return std::any_of(f.begin(), f.end(), [](Mask s) { return s != 0; });
}

// A uniformly chosen inner matroid, preferring positive rank. n <= 6.
Matroid RandomInner(const IndependenceSystem& sys, std::mt19937_64& rng) {
  std::vector<Matroid> inner = EnumerateInnerMatroids(sys);
  std::vector<Matroid> positive;
  for (const Matroid& m : inner) {
    if (m.rank() > 0) positive.push_back(m);
  }
  const auto& pool = positive.empty() ? inner : positive;
  return pool[rng() % pool.size()];
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "setfamily", "matroid",   "greedy",          "quotient", "hkj",
      "rho",       "rho-bound", "perfect-matroid", "milgrom",  "ip"};
  return kNames;
}

SuiteResult RunSuite(const std::string& name, const VerifyOptions& options) {
  static const std::map<std::string, SuiteResult (*)(const VerifyOptions&)>
      kSuites = {{"setfamily", SetFamilySuite}, {"matroid", MatroidSuite},
                 {"greedy", GreedySuite},       {"quotient", QuotientSuite},
                 {"hkj", HkjSuite},             {"rho", RhoSuite},
                 {"rho-bound", RhoBoundSuite},
                 {"perfect-matroid", PerfectMatroidSuite},
                 {"milgrom", MilgromSuite},     {"ip", IpSuite}};
  const auto it = kSuites.find(name);
  if (it == kSuites.end()) {
    throw Error(ErrorCode::kInvalidInput, "unknown suite \"" + name + "\"");
  }
  return it->second(options);
}

SuiteResult SetFamilySuite(const VerifyOptions& options) {
  return Execute("setfamily", [&](Run& run) {
    ForEachSystem(options, 5, 10, false, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      auto describe = [&sys] { return Describe(sys); };
      const GroundSet ground = sys.ground();
      const std::vector<Mask> independent = IndependentSets(sys);
      run.Expect(HereditaryClosure(SetFamily(ground, independent)) == sys,
                 "closure of the independent sets differs from the system",
                 describe);
      const auto indep = IndependenceBitmap(sys);
      const SetFamily circuits = Circuits(sys);
      for (std::uint64_t x = 0; x < ground.num_subsets(); ++x) {
        const Mask t = static_cast<Mask>(x);
        run.Expect((indep[t] != 0) == sys.IsIndependentUnchecked(t),
                   "bitmap and membership disagree", describe);
        if (indep[t]) {
          for (Mask rest = t; rest != 0; rest &= rest - 1) {
            run.Expect(indep[t & ~(rest & -rest)] != 0,
                       "independent set with a dependent subset", describe);
          }
        }
        const bool has_circuit =
            std::any_of(circuits.begin(), circuits.end(),
                        [t](Mask c) { return (c & t) == c; });
        run.Expect(has_circuit == (indep[t] == 0),
                   "dependence does not match circuit containment", describe);
        for (Mask b : BasesOf(sys, t)) {
          run.Expect(indep[b] && (b & ~t) == 0,
                     "basis of F is dependent or leaves F", describe);
          for (Mask rest = t & ~b; rest != 0; rest &= rest - 1) {
            run.Expect(!indep[b | (rest & -rest)], "basis of F not maximal",
                       describe);
          }
        }
      }
      const Mask full = ground.full();
      for (int e = 1; e <= ground.size(); ++e) {
        const Mask bit = Mask{1} << (e - 1);
        const IndependenceSystem deleted = Delete(sys, e);
        for (std::uint64_t x = 0; x < ground.num_subsets(); ++x) {
          const Mask s = static_cast<Mask>(x);
          if (s & bit) continue;
          run.Expect(deleted.IsIndependentUnchecked(Compress(s, full & ~bit)) ==
                         (indep[s] != 0),
                     "deletion changes membership of a set avoiding e",
                     describe);
        }
      }
      const SetFamily o = RandomAcceptable(sys, in.rng);
      const SetFamily dagger = DaggerClosure(sys, o);
      for (Mask s : dagger) {
        const bool covered = std::any_of(
            o.begin(), o.end(), [s](Mask m) { return (s & m) == s; });
        run.Expect(covered, "O-dagger member outside every O member", [&] {
          return Describe(sys, &o);
        });
      }
      for (Mask m : o) {
        for (Mask sub = m;; sub = (sub - 1) & m) {
          run.Expect(dagger.Contains(sub), "O-dagger not downward closed",
                     [&] { return Describe(sys, &o); });
          if (sub == 0) break;
        }
      }
      run.Count();
    });
  });
}

SuiteResult MatroidSuite(const VerifyOptions& options) {
  return Execute("matroid", [&](Run& run) {
    std::map<int, std::size_t> matroids_seen;
    ForEachSystem(options, 5, 7, false, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      auto describe = [&sys] { return Describe(sys); };
      const bool augmentation = IsMatroid(sys);
      const RankTable rank = RankTable::Of(sys);
      const bool axioms = CheckRankAxioms(rank);
      const bool exchange = CheckBasisExchange(sys.maximal());
      const bool unit_quotient =
          AllLoops(sys) || RankQuotient(sys).q == Rational(1);
      run.Expect(augmentation == axioms && axioms == exchange &&
                     exchange == unit_quotient,
                 "matroid characterizations disagree", describe);
      if (!augmentation) {
        run.Count();
        return;
      }
      ++matroids_seen[sys.n()];
      const GroundSet ground = sys.ground();
      for (std::uint64_t x = 0; x < ground.num_subsets(); ++x) {
        const Mask f = static_cast<Mask>(x);
        run.Expect(LowerRank(sys, f) == rank[f],
                   "lower rank differs from rank on a matroid", describe);
        for (std::uint64_t y = 0; y < ground.num_subsets(); ++y) {
          const Mask g = static_cast<Mask>(y);
          if ((f & g) == f) {
            run.Expect(rank[f] <= rank[g], "rank not monotone", describe);
          }
          run.Expect(rank[f | g] + rank[f & g] <= rank[f] + rank[g],
                     "rank not submodular", describe);
        }
      }
      const RankTable zero(ground, std::vector<int>(ground.num_subsets(), 0));
      run.Expect(MatroidFromDelta(sys, zero).system() == sys,
                 "zero rank reduction changes the matroid", describe);
      run.Count();
    });
    // The catalog must hold exactly the systems that passed augmentation.
    if (options.shards <= 1) {
      for (int n = 1; n <= std::min({options.exhaustive_n, kMaxCatalogN,
                                     kMaxAllSystemsN});
           ++n) {
        run.Expect(AllMatroids(n).size() == matroids_seen[n],
                   "catalog size differs from exhaustive matroid count",
                   [n] { return Json{{"n", n}}; });
        run.Count();
      }
    }
  });
}

SuiteResult GreedySuite(const VerifyOptions& options) {
  return Execute("greedy", [&](Run& run) {
    ForEachSystem(options, 5, 7, true, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      if (AllLoops(sys)) return;
      const GroundSet ground = sys.ground();
      const Rational q = RankQuotient(sys).q;
      std::vector<int> perm(ground.size());
      for (int i = 0; i < ground.size(); ++i) perm[i] = i + 1;
      for (int t = 0; t < options.trials; ++t) {
        const Weights v = RandomWeights(ground, in.rng);
        std::shuffle(perm.begin(), perm.end(), in.rng);
        const TieBreak tb(perm);
        if (OptimalBasis(sys, v).value == 0) continue;
        const Rational ratio = GreedyRatio(sys, v, tb);
        run.Expect(q <= ratio && ratio <= 1, "greedy ratio outside [q, 1]",
                   [&] { return Describe(sys, nullptr, nullptr, &v); });
      }
      if (IsMatroid(sys)) {
        const TieBreak tb = TieBreak::Identity(ground.size());
        std::vector<Rational> values(ground.size(), Rational(0));
        // Odometer over {0,1,2}^n.
        while (true) {
          const Weights v(ground, values);
          run.Expect(Greedy(sys, v, tb).value == OptimalBasis(sys, v).value,
                     "greedy not optimal on a matroid",
                     [&] { return Describe(sys, nullptr, nullptr, &v); });
          int i = 0;
          while (i < ground.size() && values[i] == 2) values[i++] = 0;
          if (i == ground.size()) break;
          values[i] += 1;
        }
      } else {
        const TightInstance tight = TightWeights(sys);
        const bool binary = std::all_of(
            tight.weights.values().begin(), tight.weights.values().end(),
            [](const Rational& x) { return x == 0 || x == 1; });
        run.Expect(binary && tight.ratio == q &&
                       GreedyRatio(sys, tight.weights, tight.tie_break) == q,
                   "tight weights miss q on a non-matroid", [&] {
                     return Describe(sys, nullptr, nullptr, &tight.weights);
                   });
      }
      run.Count();
    });
  });
}

SuiteResult QuotientSuite(const VerifyOptions& options) {
  return Execute("quotient", [&](Run& run) {
    ForEachSystem(options, 5, 8, true, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      if (AllLoops(sys)) return;
      auto describe = [&sys] { return Describe(sys); };
      const QuotientReport report = RankQuotient(sys);
      run.Expect(report.r > 0 && report.r == Rank(sys, report.witness) &&
                     report.l == LowerRank(sys, report.witness) &&
                     report.q == Rational(report.l, report.r),
                 "quotient report inconsistent with its witness", describe);
      const GroundSet ground = sys.ground();
      for (std::uint64_t x = 1; x < ground.num_subsets(); ++x) {
        const Mask f = static_cast<Mask>(x);
        const int r = Rank(sys, f);
        if (r == 0) continue;
        const Rational ratio(LowerRank(sys, f), r);
        run.Expect(ratio >= report.q, "a subset beats the reported quotient",
                   describe);
        if ((f & report.witness) == f && f != report.witness) {
          run.Expect(ratio != report.q, "witness is not minimal", describe);
        }
      }
      if (IsNormal(sys)) {
        run.Expect(report.q.denominator() <= Rank(sys, ground.full()),
                   "q is not a ratio of integers at most r(E)", describe);
      }
      const Rational bound = CircuitBound(sys).bound;
      run.Expect(bound <= report.q && report.q <= 1,
                 "circuit bound exceeds q", describe);
      run.Count();
    });
  });
}

SuiteResult HkjSuite(const VerifyOptions& options) {
  return Execute("hkj", [&](Run& run) {
    ForEachSystem(options, 5, 6, true, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      if (AllLoops(sys)) return;
      const CircuitBoundReport cb = CircuitBound(sys);
      run.Expect(cb.bound <= RankQuotient(sys).q, "q below 1/p",
                 [&sys] { return Describe(sys); });
      run.Count();
    });
    for (int k = 0; k < options.random_count; ++k) {
      std::mt19937_64 rng(InstanceSeed(options.seed ^ 0x484b4aULL, k));
      const int n = 2 + static_cast<int>(rng() % 7);
      const int p = 2 + static_cast<int>(rng() % 2);
      const GroundSet ground(n);
      std::vector<Matroid> parts;
      for (int i = 0; i < p; ++i) parts.push_back(RandomPartitionMatroid(ground, rng));
      const IndependenceSystem sys = MatroidIntersection(parts);
      if (AllLoops(sys)) continue;
      run.Expect(RankQuotient(sys).q >= Rational(1, p),
                 "intersection of p partition matroids has q below 1/p",
                 [&] {
                   Json j = Describe(sys);
                   j["p"] = p;
                   return j;
                 });
      run.Count();
    }
    for (int n = 1; n <= 10; ++n) {
      run.Expect(PathStableSet(n) ==
                     MatroidIntersection(PathEdgePartitionMatroids(n)),
                 "path stable sets differ from the edge-partition "
                 "intersection",
                 [n] { return Json{{"path_n", n}}; });
      run.Count();
    }
  });
}

SuiteResult RhoSuite(const VerifyOptions& options) {
  return Execute("rho", [&](Run& run) {
    ForEachSystem(options, 4, 6, false, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      const SetFamily o = RandomAcceptable(sys, in.rng);
      if (!HasNonempty(o)) return;
      const Matroid m = RandomInner(sys, in.rng);
      auto describe = [&] { return Describe(sys, &o, &m); };
      const AcceptableSet acceptable(sys, o);
      const RhoReport lower = Rho(acceptable, m.system());
      const RhoReport rank = RhoMatroid(acceptable, m);
      run.Expect(lower.rho == rank.rho && lower.argmin == rank.argmin,
                 "rank and lower-rank forms of rho differ", describe);
      const Rational dagger = Rho(acceptable.Dagger(), m.system()).rho;
      run.Expect(dagger <= lower.rho, "rho over O-dagger exceeds rho over O",
                 describe);
      if (dagger > 0) {
        Mask covered = 0;
        for (Mask s : o) covered |= s;
        for (int e : ElementsOf(covered)) {
          run.Expect(m.system().IsIndependentUnchecked(Mask{1} << (e - 1)),
                     "positive rho over O-dagger with a loop in the union",
                     describe);
        }
      }
      run.Count();
    });
  });
}

SuiteResult RhoBoundSuite(const VerifyOptions& options) {
  return Execute("rho-bound", [&](Run& run) {
    ForEachSystem(options, 5, 6, true, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      if (AllLoops(sys)) return;
      const Rational q = RankQuotient(sys).q;
      const Rational all = RhoMaxExact(AcceptableSet::AllIndependent(sys)).rho;
      run.Expect(all <= q, "rho^M(I, I) exceeds q",
                 [&sys] { return Describe(sys); });
      const Rational bases = RhoMaxExact(AcceptableSet::Bases(sys)).rho;
      run.Expect(bases <= q, "rho^M(I, B) exceeds q",
                 [&sys] { return Describe(sys); });
      run.Count();
    });
  });
}

SuiteResult PerfectMatroidSuite(const VerifyOptions& options) {
  return Execute("perfect-matroid", [&](Run& run) {
    ForEachSystem(options, 5, 6, false, [&](Visit in) {
      const IndependenceSystem& sys = in.sys;
      std::vector<SetFamily> families = {
          SetFamily(sys.ground(), IndependentSets(sys)), sys.maximal()};
      for (int i = 0; i < 3; ++i) {
        families.push_back(RandomAcceptable(sys, in.rng));
      }
      const std::vector<Matroid> inner = EnumerateInnerMatroids(sys);
      for (const SetFamily& o : families) {
        if (!HasNonempty(o)) continue;
        const AcceptableSet acceptable(sys, o);
        const SetFamily dagger = DaggerClosure(sys, o);
        bool some_rho_one = false;
        bool some_contains_dagger = false;
        for (const Matroid& m : inner) {
          some_rho_one |= std::all_of(o.begin(), o.end(), [&m](Mask s) {
            return m.Rank(s) == Popcount(s);
          });
          some_contains_dagger |=
              std::all_of(dagger.begin(), dagger.end(), [&m](Mask s) {
                return m.system().IsIndependentUnchecked(s);
              });
        }
        auto describe = [&] { return Describe(sys, &o); };
        run.Expect(some_rho_one == some_contains_dagger,
                   "rho = 1 and containing O-dagger disagree", describe);
        const PerfectMatroidAnswer answer = ExistsPerfectMatroid(acceptable);
        run.Expect(answer.exists == some_contains_dagger,
                   "perfect-matroid answer disagrees with enumeration",
                   describe);
        run.Count();
      }
    });
  });
}

SuiteResult MilgromSuite(const VerifyOptions& options) {
  return Execute("milgrom", [&](Run& run) {
    std::size_t dagger_form_held = 0;
    std::size_t instances = 0;
    auto check = [&](const IndependenceSystem& sys, const SetFamily& o,
                     const Matroid& m, std::uint64_t seed) {
      const AcceptableSet acceptable(sys, o);
      const MilgromReport report =
          VerifyMilgrom(acceptable, m, options.trials, seed);
      ++instances;
      if (!report.sampled_min || *report.sampled_min >= report.rho_dagger) {
        ++dagger_form_held;
      }
      run.Expect(report.lower_bound_holds,
                 "an in-W weight vector has ratio below rho", [&] {
                   Json j = Describe(sys, &o, &m,
                                     report.sampled_argmin
                                         ? &*report.sampled_argmin
                                         : nullptr);
                   j["rho"] = ToString(report.rho.rho);
                   j["ratio"] = ToString(*report.sampled_min);
                   return j;
                 });
      run.Expect(report.witness_in_w && report.witness_attains,
                 "argmin indicator misses W or does not attain rho",
                 [&] { return Describe(sys, &o, &m); });
      run.Count();
    };
    ForEachSystem(
        VerifyOptions{0, options.random_count,
                      std::min(options.random_n_min, 5),
                      std::min(options.random_n_max, 5), options.trials,
                      options.seed, options.shard, options.shards},
        0, 5, false, [&](Visit in) {
          const SetFamily o = RandomAcceptable(in.sys, in.rng);
          if (!HasNonempty(o)) return;
          check(in.sys, o, RandomInner(in.sys, in.rng), in.rng());
        });
    for (const std::string& name : FixtureNames()) {
      const FixtureBundle b = NamedFixture(name);
      if (!b.acceptable || !b.inner) continue;
      check(b.sys, *b.acceptable, *b.inner, options.seed);
    }
    run.result().message = "ok, " + std::to_string(instances) +
                           " instances; the O-dagger form held on " +
                           std::to_string(dagger_form_held);
  });
}

SuiteResult IpSuite(const VerifyOptions& options) {
  return Execute("ip", [&](Run& run) {
    auto check = [&](const IndependenceSystem& sys, const SetFamily& o) {
      if (!HasNonempty(o)) return;
      const AcceptableSet acceptable(sys, o);
      auto describe = [&] { return Describe(sys, &o); };
      const IPModel model = BuildIp(acceptable);
      const int n = sys.n();
      const std::size_t subsets = std::size_t{1} << n;
      run.Expect(
          model.num_variables() == subsets + 1 &&
              model.CountRows(IPRow::Kind::kMonotone) ==
                  static_cast<std::size_t>(n) * (subsets / 2) &&
              model.CountRows(IPRow::Kind::kSubmodular) ==
                  (n >= 2 ? static_cast<std::size_t>(n * (n - 1) / 2) *
                                (subsets / 4)
                          : 0),
          "IP model has the wrong shape", describe);
      run.Expect(ExportIp(model) == ExportIp(BuildIp(acceptable)),
                 "IP export is not deterministic", describe);
      const IPSolution solution = SolveIpBruteforce(model, acceptable);
      const std::vector<Matroid> inner = EnumerateInnerMatroids(sys);
      run.Expect(solution.round_trip, "a feasible delta does not round-trip",
                 describe);
      run.Expect(solution.feasible == inner.size(),
                 "feasible deltas and inner matroids differ in number",
                 describe);
      run.Expect(solution.t_star == RhoMaxExact(acceptable).rho,
                 "IP optimum differs from exact rho^M", describe);
      run.Expect(model.Satisfies(solution.delta, solution.t_star),
                 "reported optimum violates the model", describe);
      const RankTable& r = model.rank();
      for (const Matroid& m : inner) {
        std::vector<int> delta(subsets);
        for (std::size_t s = 0; s < subsets; ++s) {
          delta[s] = r[static_cast<Mask>(s)] - m.Rank(static_cast<Mask>(s));
        }
        const Rational t = RhoMatroid(acceptable, m).rho;
        run.Expect(model.Satisfies(RankTable(sys.ground(), delta), t),
                   "an inner matroid gives an infeasible delta",
                   [&] { return Describe(sys, &o, &m); });
      }
      run.Count();
    };
    ForEachSystem(options, 4, 4, false, [&](Visit in) {
      check(in.sys, SetFamily(in.sys.ground(), IndependentSets(in.sys)));
      check(in.sys, RandomAcceptable(in.sys, in.rng));
    });
    for (const std::string& name : FixtureNames()) {
      const FixtureBundle b = NamedFixture(name);
      if (b.sys.n() > kMaxIpSolveN || !b.acceptable) continue;
      check(b.sys, *b.acceptable);
    }
  });
}

}  // namespace matapprox
