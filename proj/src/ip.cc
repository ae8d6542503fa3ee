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

#include "matapprox/ip.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "matapprox/error.h"

namespace matapprox {

Mask IPRow::MaxMask() const {
  Mask best = 0;
  for (int i = 0; i < num_terms; ++i) {
    if (terms[i].var != IPModel::kTVar) {
      best = std::max(best, static_cast<Mask>(terms[i].var));
    }
  }
  return best;
}

IPModel::IPModel(GroundSet ground, RankTable rank, std::vector<IPRow> rows)
    : ground_(ground), rank_(std::move(rank)), rows_(std::move(rows)) {
  std::stable_sort(rows_.begin(), rows_.end(),
                   [](const IPRow& a, const IPRow& b) {
                     return std::tie(a.kind, a.mask) < std::tie(b.kind, b.mask);
                   });
}

std::size_t IPModel::CountRows(IPRow::Kind kind) const {
  return std::count_if(rows_.begin(), rows_.end(),
                       [kind](const IPRow& r) { return r.kind == kind; });
}

bool IPModel::Satisfies(const RankTable& delta, const Rational& t) const {
  if (!(delta.ground() == ground_)) return false;
  if (t < 0 || t > 1) return false;
  for (std::uint64_t s = 0; s < ground_.num_subsets(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (delta[m] < 0 || delta[m] > rank_[m]) return false;
  }
  for (const IPRow& row : rows_) {
    Rational lhs(0);
    for (int i = 0; i < row.num_terms; ++i) {
      const IPTerm& term = row.terms[i];
      lhs += term.var == kTVar
                 ? t * term.coeff
                 : Rational(term.coeff * delta[static_cast<Mask>(term.var)]);
    }
    if (lhs > row.rhs) return false;
  }
  return true;
}

IPModel BuildIp(const AcceptableSet& acceptable) {
  const IndependenceSystem& sys = acceptable.host();
  const int n = sys.n();
  if (n > kMaxIpN) {
    throw Error(ErrorCode::kCapability,
                "IP model supports n <= 16; use rho-max --heuristic");
  }
  const GroundSet ground = sys.ground();
  RankTable r = RankTable::Of(sys);
  std::vector<IPRow> rows;
  for (std::uint64_t x = 0; x < ground.num_subsets(); ++x) {
    const Mask s = static_cast<Mask>(x);
    for (int j = 0; j < n; ++j) {
      const Mask bj = Mask{1} << j;
      if (s & bj) continue;
      IPRow row;
      row.kind = IPRow::Kind::kMonotone;
      row.mask = s;
      row.name = "mono_" + HexMask(s) + "_" + std::to_string(j + 1);
      row.terms = {IPTerm{s | bj, 1}, IPTerm{s, -1}};
      row.num_terms = 2;
      row.rhs = r[s | bj] - r[s];
      rows.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j) {
      const Mask bj = Mask{1} << j;
      if (s & bj) continue;
      for (int k = j + 1; k < n; ++k) {
        const Mask bk = Mask{1} << k;
        if (s & bk) continue;
        const Mask full = s | bj | bk;
        IPRow row;
        row.kind = IPRow::Kind::kSubmodular;
        row.mask = s;
        row.name = "sub_" + HexMask(s) + "_" + std::to_string(j + 1) + "_" +
                   std::to_string(k + 1);
        row.terms = {IPTerm{full, -1}, IPTerm{full & ~bk, 1},
                     IPTerm{full & ~bj, 1}, IPTerm{s, -1}};
        row.num_terms = 4;
        row.rhs = r[full & ~bj] + r[full & ~bk] - r[full] - r[s];
        rows.push_back(std::move(row));
      }
    }
  }
  for (Mask s : acceptable.sets()) {
    if (r[s] == 0) continue;
    IPRow row;
    row.kind = IPRow::Kind::kObjective;
    row.mask = s;
    row.name = "obj_" + HexMask(s);
    row.terms = {IPTerm{IPModel::kTVar, r[s]}, IPTerm{s, 1}};
    row.num_terms = 2;
    row.rhs = r[s];
    rows.push_back(std::move(row));
  }
  return IPModel(ground, std::move(r), std::move(rows));
}

namespace {

std::string VarName(std::uint64_t var) {
  return var == IPModel::kTVar ? "t" : "d_" + HexMask(static_cast<Mask>(var));
}

void WriteTerm(std::ostream& out, const IPTerm& term, bool first) {
  const std::int64_t mag = term.coeff < 0 ? -term.coeff : term.coeff;
  if (first) {
    if (term.coeff < 0) out << '-';
  } else {
    out << (term.coeff < 0 ? " - " : " + ");
  }
  if (mag != 1) out << mag << ' ';
  out << VarName(term.var);
}

}  // namespace

std::string ExportIp(const IPModel& model) {
  std::ostringstream out;
  const GroundSet& ground = model.ground();
  out << "\\ rank-reduction IP, n = " << ground.size() << ", "
      << model.num_variables() << " variables\n";
  out << "OBJECTIVE\n maximize: t\n\n";
  out << "CONSTRAINTS\n";
  for (const IPRow& row : model.rows()) {
    out << ' ' << row.name << ": ";
    for (int i = 0; i < row.num_terms; ++i) WriteTerm(out, row.terms[i], i == 0);
    out << " <= " << row.rhs << '\n';
  }
  out << "\nBOUNDS\n";
  for (std::uint64_t s = 0; s < ground.num_subsets(); ++s) {
    out << " 0 <= " << VarName(s) << " <= " << model.rank()[static_cast<Mask>(s)]
        << '\n';
  }
  out << " 0 <= t <= 1\n\nGENERAL\n";
  for (std::uint64_t s = 0; s < ground.num_subsets(); ++s) {
    out << ' ' << VarName(s) << '\n';
  }
  out << "\nEND\n";
  return out.str();
}

IPSolution SolveIpBruteforce(const IPModel& model,
                             const AcceptableSet& acceptable) {
  const GroundSet ground = model.ground();
  const int n = ground.size();
  if (n > kMaxIpSolveN) {
    throw Error(ErrorCode::kCapability,
                "brute-force IP solve supports n <= 4; export the model");
  }
  if (!(acceptable.host().ground() == ground)) {
    throw Error(ErrorCode::kInvalidInput, "model and system differ in size");
  }
  const std::uint64_t size = ground.num_subsets();
  const RankTable& r = model.rank();

  // Constraint rows without t, grouped by the last variable they mention.
  std::vector<std::vector<const IPRow*>> closing(size);
  std::vector<const IPRow*> objective;
  for (const IPRow& row : model.rows()) {
    if (row.kind == IPRow::Kind::kObjective) {
      objective.push_back(&row);
    } else {
      closing[row.MaxMask()].push_back(&row);
    }
  }

  std::vector<int> delta(size, 0);
  IPSolution best{Rational(-1), RankTable(ground, delta), 0, true};

  auto row_holds = [&delta](const IPRow& row) {
    std::int64_t lhs = 0;
    for (int i = 0; i < row.num_terms; ++i) {
      lhs += row.terms[i].coeff * delta[row.terms[i].var];
    }
    return lhs <= row.rhs;
  };

  auto finish = [&]() {
    // t is capped by its bound and by every objective row.
    Rational t(1);
    for (const IPRow* row : objective) {
      std::int64_t rest = row->rhs;
      std::int64_t coeff_t = 0;
      for (int i = 0; i < row->num_terms; ++i) {
        const IPTerm& term = row->terms[i];
        if (term.var == IPModel::kTVar) {
          coeff_t = term.coeff;
        } else {
          rest -= term.coeff * delta[term.var];
        }
      }
      t = std::min(t, Rational(rest, coeff_t));
    }
    if (t < 0) return;
    ++best.feasible;
    RankTable table(ground, delta);
    try {
      const Matroid m = MatroidFromDelta(acceptable.host(), table);
      for (std::uint64_t s = 0; s < size; ++s) {
        const Mask mask = static_cast<Mask>(s);
        if (m.Rank(mask) != r[mask] - delta[s]) best.round_trip = false;
      }
    } catch (const Error&) {
      best.round_trip = false;
    }
    if (t > best.t_star) {
      best.t_star = t;
      best.delta = std::move(table);
    }
  };

  // Assign r'(s) = r(s) - delta(s) for s in mask order. r' is kept monotone
  // with unit increments, both implied by the rows and bounds.
  std::function<void(std::uint64_t)> assign = [&](std::uint64_t s) {
    if (s == size) {
      finish();
      return;
    }
    const Mask mask = static_cast<Mask>(s);
    int lo = 0;
    int hi = r[mask];
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const Mask sub = mask & ~(rest & -rest);
      const int below = r[sub] - delta[sub];
      lo = std::max(lo, below);
      hi = std::min(hi, below + 1);
    }
    for (int value = lo; value <= hi; ++value) {
      delta[s] = r[mask] - value;
      const bool ok = std::all_of(closing[s].begin(), closing[s].end(),
                                  [&](const IPRow* row) { return row_holds(*row); });
      if (ok) assign(s + 1);
    }
    delta[s] = 0;
  };
  assign(0);

  if (best.feasible == 0) {
    throw std::logic_error("IP has no feasible point; the loop matroid is one");
  }
  return best;
}

}  // namespace matapprox
