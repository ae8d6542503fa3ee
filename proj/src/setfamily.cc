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

#include "matapprox/setfamily.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "matapprox/error.h"

namespace matapprox {

int Popcount(Mask m) { return std::popcount(m); }

Mask MaskOf(std::initializer_list<int> elements) {
  return MaskOf(std::vector<int>(elements));
}

Mask MaskOf(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) {
      throw Error(ErrorCode::kInvalidInput,
                  "element label out of range: " + std::to_string(e));
    }
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::vector<int> ElementsOf(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i + 1);
  }
  return out;
}

std::string HexMask(Mask m) {
  std::ostringstream os;
  os << "0x" << std::hex << m;
  return os.str();
}

std::string SetString(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : ElementsOf(m)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Mask Compress(Mask s, Mask support) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = support; rest != 0; rest &= rest - 1) {
    const Mask bit = rest & -rest;
    if (s & bit) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidInput,
                "ground set size must lie in [0, 24], got " +
                    std::to_string(n));
  }
}

void GroundSet::Validate(Mask s) const {
  if (!Contains(s)) {
    throw Error(ErrorCode::kInvalidInput,
                "mask " + HexMask(s) + " exceeds ground set of size " +
                    std::to_string(n_));
  }
}

Mask GroundSet::Element(int label) const {
  if (label < 1 || label > n_) {
    throw Error(ErrorCode::kInvalidInput,
                "element " + std::to_string(label) + " not in 1.." +
                    std::to_string(n_));
  }
  return Mask{1} << (label - 1);
}

SetFamily::SetFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(ground), members_(std::move(members)) {
  for (Mask m : members_) ground_.Validate(m);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::Contains(Mask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<Mask> MaximalMembers(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Larger sets first: a set can only be covered by a strictly larger one.
  std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return Popcount(a) > Popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [s](Mask k) { return (s & k) == s; });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

SetFamily CheckedAntichain(GroundSet ground, std::vector<Mask> maximal) {
  if (maximal.empty()) maximal.push_back(0);
  SetFamily family(ground, std::move(maximal));
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && (m[i] & m[j]) == m[i]) {
        throw Error(ErrorCode::kInvalidInput,
                    "maximal sets are not an antichain: " + HexMask(m[i]) +
                        " is contained in " + HexMask(m[j]));
      }
    }
  }
  return family;
}

}  // namespace

IndependenceSystem::IndependenceSystem(GroundSet ground,
                                       std::vector<Mask> maximal)
    : maximal_(CheckedAntichain(ground, std::move(maximal))) {}

bool IndependenceSystem::IsIndependent(Mask s) const {
  ground().Validate(s);
  return IsIndependentUnchecked(s);
}

bool IndependenceSystem::IsIndependentUnchecked(Mask s) const {
  for (Mask b : maximal_) {
    if ((s & b) == s) return true;
  }
  return false;
}

IndependenceSystem HereditaryClosure(const SetFamily& family) {
  return IndependenceSystem(family.ground(), MaximalMembers(family.members()));
}

bool IsNormal(const IndependenceSystem& sys) {
  Mask covered = 0;
  for (Mask b : sys.maximal()) covered |= b;
  return covered == sys.ground().full();
}

IndependenceSystem Delete(const IndependenceSystem& sys, int label) {
  const Mask e = sys.ground().Element(label);
  return Restrict(sys, sys.ground().full() & ~e);
}

IndependenceSystem Restrict(const IndependenceSystem& sys, Mask f) {
  sys.ground().Validate(f);
  std::vector<Mask> parts;
  parts.reserve(sys.maximal().size());
  for (Mask b : sys.maximal()) parts.push_back(Compress(b & f, f));
  return IndependenceSystem(GroundSet(Popcount(f)),
                            MaximalMembers(std::move(parts)));
}

SetFamily BasesOf(const IndependenceSystem& sys, Mask f) {
  sys.ground().Validate(f);
  std::vector<Mask> parts;
  parts.reserve(sys.maximal().size());
  for (Mask b : sys.maximal()) parts.push_back(b & f);
  return SetFamily(sys.ground(), MaximalMembers(std::move(parts)));
}

std::vector<std::uint8_t> IndependenceBitmap(const IndependenceSystem& sys) {
  const std::uint64_t size = sys.ground().num_subsets();
  std::vector<std::uint8_t> indep(size, 0);
  for (Mask b : sys.maximal()) indep[b] = 1;
  // Propagate downwards: masks are visited in decreasing order, so every
  // superset obtained by adding one bit has already been settled.
  for (std::uint64_t s = size; s-- > 0;) {
    if (!indep[s]) continue;
    for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
      indep[s & ~(rest & -rest)] = 1;
    }
  }
  return indep;
}

std::vector<Mask> IndependentSets(const IndependenceSystem& sys) {
  const auto indep = IndependenceBitmap(sys);
  std::vector<Mask> out;
  for (std::uint64_t s = 0; s < indep.size(); ++s) {
    if (indep[s]) out.push_back(static_cast<Mask>(s));
  }
  return out;
}

SetFamily Circuits(const IndependenceSystem& sys) {
  const auto indep = IndependenceBitmap(sys);
  std::vector<Mask> out;
  for (std::uint64_t s = 1; s < indep.size(); ++s) {
    if (indep[s]) continue;
    bool minimal = true;
    for (Mask rest = static_cast<Mask>(s); rest != 0 && minimal;
         rest &= rest - 1) {
      minimal = indep[s & ~(rest & -rest)] != 0;
    }
    if (minimal) out.push_back(static_cast<Mask>(s));
  }
  return SetFamily(sys.ground(), std::move(out));
}

int MaxCircuitsOnAugment(const IndependenceSystem& sys) {
  const SetFamily circuits = Circuits(sys);
  const Mask full = sys.ground().full();
  int best = 0;
  // The count is monotone in A, so it suffices to take A maximal among
  // independent sets avoiding e, i.e. a basis of E \ {e}.
  for (int label = 1; label <= sys.n(); ++label) {
    const Mask e = Mask{1} << (label - 1);
    for (Mask a : BasesOf(sys, full & ~e)) {
      const Mask augmented = a | e;
      int count = 0;
      for (Mask c : circuits) {
        if ((c & e) && (c & augmented) == c) ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}

SetFamily DaggerClosure(const IndependenceSystem& sys,
                        const SetFamily& acceptable) {
  std::vector<Mask> out;
  for (Mask o : acceptable) {
    if (!sys.IsIndependent(o)) {
      throw Error(ErrorCode::kInvalidAcceptableSet,
                  "acceptable set member " + HexMask(o) +
                      " is not independent");
    }
    // Enumerate every submask of o.
    for (Mask sub = o;; sub = (sub - 1) & o) {
      out.push_back(sub);
      if (sub == 0) break;
    }
  }
  if (out.empty()) out.push_back(0);
  return SetFamily(sys.ground(), std::move(out));
}

}  // namespace matapprox
