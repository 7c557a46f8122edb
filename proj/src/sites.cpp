#include "catspec/sites.hpp"

#include "catspec/limits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace catspec {

bool Sieve::contains(int m) const { return std::binary_search(members.begin(), members.end(), m); }

bool operator==(const Sieve& a, const Sieve& b) {
  return a.target == b.target && a.members == b.members;
}

ValidationReport validate_sieve(const FinCat& c, const Sieve& S) {
  ValidationReport r;
  for (int m : S.members) {
    if (c.cod(m) != S.target) {
      r.violations.push_back({"target", "member does not land in the target", {c.morphism_name(m)}});
      return r;
    }
  }
  for (int s : S.members)
    for (int h : c.into(c.dom(s))) {
      int sh = c.compose(s, h);
      if (!S.contains(sh)) {
        r.violations.push_back(
            {"closure", "sieve not right-closed", {c.morphism_name(s), c.morphism_name(h)}});
        return r;
      }
    }
  return r;
}

Sieve maximal_sieve(const FinCat& c, int target) {
  Sieve S;
  S.target = target;
  S.members = c.into(target);
  std::sort(S.members.begin(), S.members.end());
  return S;
}

Sieve generated_sieve(const FinCat& c, int target, const std::vector<int>& family) {
  Sieve S;
  S.target = target;
  std::set<int> acc;
  for (int f : family) {
    if (c.cod(f) != target) throw spec_error("generated_sieve: family member has wrong codomain");
    for (int h : c.into(c.dom(f))) acc.insert(c.compose(f, h));
    acc.insert(f);
  }
  S.members.assign(acc.begin(), acc.end());
  return S;
}

Sieve pullback_sieve(const FinCat& c, int f, const Sieve& S) {
  if (c.cod(f) != S.target) throw spec_error("pullback_sieve: cod(f) is not the sieve target");
  Sieve out;
  out.target = c.dom(f);
  for (int h : c.into(out.target))
    if (S.contains(c.compose(f, h))) out.members.push_back(h);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Sieve> all_sieves_on(const FinCat& c, int target, const Limits& lim) {
  const auto& arrows = c.into(target);
  if (arrows.size() > 20)
    throw guardrail_error("all_sieves_on: " + std::to_string(arrows.size()) +
                          " arrows into the target exceed the sieve-lattice bound");
  (void)lim;
  std::vector<Sieve> out;
  const int n = static_cast<int>(arrows.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Sieve S;
    S.target = target;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) S.members.push_back(arrows[i]);
    std::sort(S.members.begin(), S.members.end());
    if (validate_sieve(c, S).ok()) out.push_back(std::move(S));
  }
  return out;
}

namespace {

std::vector<int> family_key(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool has_family(const std::vector<Covering>& cs, const std::vector<int>& key) {
  for (const auto& c : cs)
    if (family_key(c.members) == key) return true;
  return false;
}

}  // namespace

PretopologyCheck validate_pretopology(const Pretopology& t, const Limits& lim) {
  PretopologyCheck out;
  const FinCat& B = *t.base;
  if (static_cast<int>(t.coverings.size()) != B.object_count()) {
    out.axiom = 0;
    out.message = "coverings not total";
    return out;
  }
  for (int b = 0; b < B.object_count(); ++b)
    for (const auto& cov : t.coverings[b])
      for (int m : cov.members)
        if (B.cod(m) != b) {
          out.axiom = 0;
          out.message = "covering member does not land in its object";
          return out;
        }

  // axiom 1: singleton iso coverings present
  for (int b = 0; b < B.object_count(); ++b)
    for (int b2 = 0; b2 < B.object_count(); ++b2)
      for (auto [f, finv] : isomorphisms(B, b2, b)) {
        if (!has_family(t.coverings[b], {f})) {
          out.axiom = 1;
          out.message = "missing singleton covering for iso " + B.morphism_name(f);
          return out;
        }
      }

  // axiom 2: some pullback family of every covering along every arrow is a covering
  for (int b = 0; b < B.object_count(); ++b) {
    for (const auto& cov : t.coverings[b]) {
      for (int g = 0; g < B.morphism_count(); ++g) {
        if (B.cod(g) != b) continue;
        const int b2 = B.dom(g);
        // pullback projections of each member along g
        std::vector<std::vector<int>> projections(cov.members.size());
        for (std::size_t i = 0; i < cov.members.size(); ++i) {
          auto ws = find_limits(B, LimitKind::Pullback,
                                pullback_diagram(B, cov.members[i], g), lim);
          for (const auto& w : ws) projections[i].push_back(w.legs[1]);
        }
        bool found = false;
        for (const auto& cand : t.coverings[b2]) {
          auto key = family_key(cand.members);
          // every candidate member is a projection of some covering member,
          // and every covering member contributes at least one projection
          bool all_are_proj = true;
          for (int h : key) {
            bool hit = false;
            for (const auto& pr : projections)
              if (std::find(pr.begin(), pr.end(), h) != pr.end()) hit = true;
            if (!hit) {
              all_are_proj = false;
              break;
            }
          }
          if (!all_are_proj) continue;
          bool all_covered = true;
          for (const auto& pr : projections) {
            bool hit = false;
            for (int h : pr)
              if (std::find(key.begin(), key.end(), h) != key.end()) hit = true;
            if (!hit) {
              all_covered = false;
              break;
            }
          }
          if (all_covered) {
            found = true;
            break;
          }
        }
        if (!found) {
          out.axiom = 2;
          out.message = "no pullback family of a covering of " + B.object_name(b) + " along " +
                        B.morphism_name(g) + " is present";
          return out;
        }
      }
    }
  }

  // axiom 3: composability over every choice tuple
  for (int b = 0; b < B.object_count(); ++b) {
    for (const auto& cov : t.coverings[b]) {
      std::size_t tuples = 1;
      for (int m : cov.members) {
        tuples *= std::max<std::size_t>(1, t.coverings[B.dom(m)].size());
        if (tuples > 4096)
          throw guardrail_error("validate_pretopology: too many refinement choice tuples");
      }
      std::vector<std::size_t> choice(cov.members.size(), 0);
      bool done = cov.members.empty();
      while (true) {
        std::vector<int> composite;
        bool valid_choice = true;
        for (std::size_t i = 0; i < cov.members.size(); ++i) {
          const auto& avail = t.coverings[B.dom(cov.members[i])];
          if (avail.empty()) {
            valid_choice = false;
            break;
          }
          for (int h : avail[choice[i]].members) composite.push_back(B.compose(cov.members[i], h));
        }
        if (valid_choice && !cov.members.empty()) {
          if (!has_family(t.coverings[b], family_key(composite))) {
            out.axiom = 3;
            out.message = "composite covering of " + B.object_name(b) + " is missing";
            return out;
          }
        }
        if (done || cov.members.empty()) break;
        std::size_t i = 0;
        while (i < choice.size()) {
          choice[i]++;
          if (choice[i] < std::max<std::size_t>(1, t.coverings[B.dom(cov.members[i])].size())) break;
          choice[i++] = 0;
        }
        if (i == choice.size()) break;
      }
    }
  }
  out.ok = true;
  return out;
}

bool Topology::covers(const Sieve& S) const {
  for (const auto& T : covering[S.target])
    if (T == S) return true;
  return false;
}

Topology generate_topology(const Pretopology& t, const Limits& lim) {
  const FinCat& B = *t.base;
  require_within(B.morphism_count(), lim, "generate_topology");
  Topology T;
  T.name = t.name + "_topology";
  T.base = t.base;
  T.covering.resize(B.object_count());

  auto add = [&](const Sieve& S) {
    if (!T.covers(S)) {
      T.covering[S.target].push_back(S);
      return true;
    }
    return false;
  };

  for (int b = 0; b < B.object_count(); ++b) {
    add(maximal_sieve(B, b));
    for (const auto& cov : t.coverings[b]) add(generated_sieve(B, b, cov.members));
  }
  // close under inverse images; the literal local-character rule is subsumed
  // because its hypothesis quantifies over the identity as well
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < B.object_count(); ++b) {
      // copy: add() mutates
      auto current = T.covering[b];
      for (const auto& S : current)
        for (int f : B.into(b))
          if (add(pullback_sieve(B, f, S))) changed = true;
    }
  }
  for (auto& per : T.covering) {
    std::sort(per.begin(), per.end(),
              [](const Sieve& a, const Sieve& b) { return a.members < b.members; });
  }
  return T;
}

TopologyCheck validate_topology(const Topology& T, const Limits& lim) {
  TopologyCheck out;
  const FinCat& B = *T.base;
  for (int b = 0; b < B.object_count(); ++b) {
    if (!T.covers(maximal_sieve(B, b))) {
      out.axiom = 1;
      out.message = "maximal sieve of " + B.object_name(b) + " is not covering";
      return out;
    }
  }
  for (int b = 0; b < B.object_count(); ++b)
    for (const auto& S : T.covering[b])
      for (int f : B.into(b))
        if (!T.covers(pullback_sieve(B, f, S))) {
          out.axiom = 2;
          out.message = "inverse image along " + B.morphism_name(f) + " is not covering";
          return out;
        }
  // literal local character: a sieve all of whose inverse images (identity
  // included) are covering must be covering
  for (int b = 0; b < B.object_count(); ++b) {
    for (const auto& S : all_sieves_on(B, b, lim)) {
      bool all_cover = true;
      for (int f : B.into(b))
        if (!T.covers(pullback_sieve(B, f, S))) {
          all_cover = false;
          break;
        }
      if (all_cover && !T.covers(S)) {
        out.axiom = 3;
        out.message = "saturation fails at " + B.object_name(b);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

ArrowClass covering_members(const Pretopology& t) {
  ArrowClass cls;
  cls.base = t.base;
  std::set<int> acc;
  for (const auto& per : t.coverings)
    for (const auto& cov : per)
      for (int m : cov.members) acc.insert(m);
  cls.members.assign(acc.begin(), acc.end());
  return cls;
}

bool is_local(const FiberedFunctor& p, const Pretopology& t, const Limits& lim) {
  if (p.p.dst.get() != t.base.get()) throw spec_error("is_local: pretopology is not on the base");
  auto cls = covering_members(t);
  auto c = classify(p, cls, lim);
  return c.fibrationWrtClass.value_or(false);
}

std::vector<MatchingFamily> matching_families(const SetPresheaf& P, const Sieve& S,
                                              const Limits& lim) {
  const FinCat& B = *P.base;
  std::size_t total = 1;
  for (int s : S.members) {
    total *= std::max<std::size_t>(1, P.value[B.dom(s)].size());
    if (total > lim.max_morphisms * 64)
      throw guardrail_error("matching_families: search space too large");
  }
  std::vector<MatchingFamily> out;
  const int n = static_cast<int>(S.members.size());
  MatchingFamily mf;
  mf.assign.assign(n, 0);
  // position of each member for compatibility lookups
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[S.members[i]] = i;

  auto compatible = [&](int upto) {
    // check the compatibility equations that only mention members <= upto
    for (int i = 0; i <= upto; ++i) {
      int s = S.members[i];
      for (int h : B.into(B.dom(s))) {
        int sh = B.compose(s, h);
        int j = pos.at(sh);
        if (j > upto) continue;
        if (P.restr[h][mf.assign[i]] != mf.assign[j]) return false;
      }
    }
    return true;
  };

  std::vector<int> sizes(n);
  for (int i = 0; i < n; ++i) sizes[i] = static_cast<int>(P.value[B.dom(S.members[i])].size());
  if (n == 0) {
    out.push_back(mf);
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (sizes[i] == 0) return out;

  auto partial_compatible = [&](int upto) {
    for (int k = 0; k <= upto; ++k) {
      int s = S.members[k];
      for (int h : B.into(B.dom(s))) {
        int j = pos.at(B.compose(s, h));
        if (j > upto) continue;
        if (P.restr[h][mf.assign[k]] != mf.assign[j]) return false;
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(mf);
      return;
    }
    for (int v = 0; v < sizes[i]; ++v) {
      mf.assign[i] = v;
      if (partial_compatible(i)) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<int> amalgamations(const SetPresheaf& P, const Sieve& S, const MatchingFamily& mf) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(P.value[S.target].size()); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < S.members.size(); ++i)
      if (P.restr[S.members[i]][x] != mf.assign[i]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

SheafCheck is_sheaf(const SetPresheaf& P, const Topology& T, const Limits& lim) {
  SheafCheck out;
  if (P.base.get() != T.base.get()) throw spec_error("is_sheaf: presheaf is not on the site base");
  for (int b = 0; b < T.base->object_count(); ++b) {
    for (std::size_t si = 0; si < T.covering[b].size(); ++si) {
      const Sieve& S = T.covering[b][si];
      for (const auto& mf : matching_families(P, S, lim)) {
        auto am = amalgamations(P, S, mf);
        if (am.size() != 1) {
          out.object = b;
          out.sieve_index = static_cast<int>(si);
          out.family = mf;
          out.amalgam_count = static_cast<int>(am.size());
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

SetPresheaf plus_construction(const SetPresheaf& P, const Topology& T, const Limits& lim) {
  const FinCat& B = *T.base;
  struct Entry {
    int sieve;  // index into T.covering[b]
    MatchingFamily mf;
  };
  std::vector<std::vector<Entry>> entries(B.object_count());
  for (int b = 0; b < B.object_count(); ++b)
    for (std::size_t si = 0; si < T.covering[b].size(); ++si)
      for (auto& mf : matching_families(P, T.covering[b][si], lim))
        entries[b].push_back({static_cast<int>(si), std::move(mf)});

  // agreement: equal restrictions on a common covering refinement
  auto value_on = [&](int b, const Entry& e, int arrow) -> int {
    const Sieve& S = T.covering[b][e.sieve];
    for (std::size_t i = 0; i < S.members.size(); ++i)
      if (S.members[i] == arrow) return e.mf.assign[i];
    return -1;
  };
  auto agree = [&](int b, const Entry& e1, const Entry& e2) {
    for (const auto& R : T.covering[b]) {
      bool contained = true;
      for (int m : R.members)
        if (!T.covering[b][e1.sieve].contains(m) || !T.covering[b][e2.sieve].contains(m)) {
          contained = false;
          break;
        }
      if (!contained) continue;
      bool same = true;
      for (int m : R.members)
        if (value_on(b, e1, m) != value_on(b, e2, m)) {
          same = false;
          break;
        }
      if (same) return true;
    }
    return false;
  };

  SetPresheaf Q;
  Q.name = P.name + "+";
  Q.base = P.base;
  Q.value.resize(B.object_count());
  Q.restr.resize(B.morphism_count());
  std::vector<std::vector<int>> cls(B.object_count());
  for (int b = 0; b < B.object_count(); ++b) {
    const int n = static_cast<int>(entries[b].size());
    // union-find over entries by the agreement relation
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (agree(b, entries[b][i], entries[b][j])) parent[find(i)] = find(j);
    cls[b].assign(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      int r = find(i);
      if (cls[b][r] < 0) cls[b][r] = k++;
      cls[b][i] = cls[b][r];
    }
    Q.value[b].resize(k);
    for (int i = 0; i < k; ++i) Q.value[b][i] = "p" + std::to_string(i);
  }

  for (int f = 0; f < B.morphism_count(); ++f) {
    int b = B.cod(f), b2 = B.dom(f);
    Q.restr[f].assign(Q.value[b].size(), -1);
    for (std::size_t i = 0; i < entries[b].size(); ++i) {
      const Sieve& S = T.covering[b][entries[b][i].sieve];
      Sieve fS = pullback_sieve(B, f, S);
      // locate fS in the topology at b2
      int sj = -1;
      for (std::size_t k = 0; k < T.covering[b2].size(); ++k)
        if (T.covering[b2][k] == fS) sj = static_cast<int>(k);
      if (sj < 0) throw spec_error("plus_construction: inverse-image sieve not covering");
      Entry pulled;
      pulled.sieve = sj;
      pulled.mf.assign.resize(fS.members.size());
      for (std::size_t m = 0; m < fS.members.size(); ++m) {
        int composed = B.compose(f, fS.members[m]);
        int v = value_on(b, entries[b][i], composed);
        if (v < 0) throw spec_error("plus_construction: pulled family incomplete");
        pulled.mf.assign[m] = v;
      }
      // find the class of the pulled entry
      int cj = -1;
      for (std::size_t j = 0; j < entries[b2].size(); ++j)
        if (entries[b2][j].sieve == pulled.sieve && entries[b2][j].mf.assign == pulled.mf.assign)
          cj = cls[b2][j];
      if (cj < 0) throw spec_error("plus_construction: pulled family not enumerated");
      Q.restr[f][cls[b][i]] = cj;
    }
    for (int v : Q.restr[f])
      if (v < 0) throw spec_error("plus_construction: restriction incomplete");
  }
  return Q;
}

SetPresheaf sheafify(const SetPresheaf& P, const Topology& T, const Limits& lim) {
  auto Q = plus_construction(plus_construction(P, T, lim), T, lim);
  Q.name = P.name + "_sh";
  return Q;
}

}  // namespace catspec
