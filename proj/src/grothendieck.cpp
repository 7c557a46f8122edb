#include "catspec/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace catspec {

namespace {

// Composable base pairs (g, f) with cod f = dom g.
template <typename Fn>
void for_composable_pairs(const FinCat& B, Fn&& fn) {
  for (int f = 0; f < B.morphism_count(); ++f)
    for (int g : B.out_of(B.cod(f))) fn(g, f);
}

}  // namespace

ValidationReport validate_pseudofunctor(const Pseudofunctor& F, const Limits& lim) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg) {
    r.violations.push_back({std::move(code), std::move(msg), {}});
  };
  const FinCat& B = *F.base;
  if (static_cast<int>(F.value.size()) != B.object_count() ||
      static_cast<int>(F.action.size()) != B.morphism_count() ||
      static_cast<int>(F.id_iso.size()) != B.object_count()) {
    add("total", F.name + ": value/action/id_iso not total");
    return r;
  }
  std::size_t fib_mors = 0;
  for (const auto& v : F.value) fib_mors = std::max<std::size_t>(fib_mors, v->morphism_count());
  require_within(fib_mors, lim, "validate_pseudofunctor");

  for (int f = 0; f < B.morphism_count(); ++f) {
    const FunctorData& a = F.action[f];
    CatPtr want_src = F.contravariant ? F.value[B.cod(f)] : F.value[B.dom(f)];
    CatPtr want_dst = F.contravariant ? F.value[B.dom(f)] : F.value[B.cod(f)];
    if (a.src.get() != want_src.get() || a.dst.get() != want_dst.get()) {
      add("action", F.name + ": action of " + B.morphism_name(f) + " has wrong endpoints");
      return r;
    }
    if (!validate_functor(a).ok())
      add("action", F.name + ": action of " + B.morphism_name(f) + " is not a functor");
  }
  if (!r.ok()) return r;

  // id_iso endpoints, iso-ness, naturality
  for (int b = 0; b < B.object_count(); ++b) {
    const FinCat& V = *F.value[b];
    const FunctorData& a1 = F.action[B.identity(b)];
    if (static_cast<int>(F.id_iso[b].size()) != V.object_count()) {
      add("id_iso", F.name + ": id_iso at " + B.object_name(b) + " not total");
      return r;
    }
    for (int e = 0; e < V.object_count(); ++e) {
      int c = F.id_iso[b][e];
      int want_d = F.contravariant ? e : a1.omap[e];
      int want_c = F.contravariant ? a1.omap[e] : e;
      if (c < 0 || V.dom(c) != want_d || V.cod(c) != want_c) {
        add("id_iso",
            F.name + ": id_iso component at " + V.object_name(e) + " has wrong endpoints");
        continue;
      }
      if (inverse_of(V, c) < 0)
        add("id_iso", F.name + ": id_iso component at " + V.object_name(e) + " is not an iso");
    }
    if (!r.ok()) return r;
    for (int m = 0; m < V.morphism_count(); ++m) {
      int x = V.dom(m), y = V.cod(m);
      bool nat = F.contravariant
                     ? V.compose(a1.mmap[m], F.id_iso[b][x]) == V.compose(F.id_iso[b][y], m)
                     : V.compose(m, F.id_iso[b][x]) == V.compose(F.id_iso[b][y], a1.mmap[m]);
      if (!nat) add("id_iso", F.name + ": id_iso not natural at " + V.morphism_name(m));
    }
  }

  // comp_iso endpoints, iso-ness, naturality
  bool comp_ok = true;
  for_composable_pairs(B, [&](int g, int f) {
    auto it = F.comp_iso.find({g, f});
    if (it == F.comp_iso.end()) {
      add("comp_iso", F.name + ": missing comp_iso for (" + B.morphism_name(g) + "," +
                          B.morphism_name(f) + ")");
      comp_ok = false;
      return;
    }
    int gf = B.compose(g, f);
    const FinCat& idxcat = F.contravariant ? *F.value[B.cod(g)] : *F.value[B.dom(f)];
    const FinCat& target = F.contravariant ? *F.value[B.dom(f)] : *F.value[B.cod(g)];
    if (static_cast<int>(it->second.size()) != idxcat.object_count()) {
      add("comp_iso", F.name + ": comp_iso not total for (" + B.morphism_name(g) + "," +
                          B.morphism_name(f) + ")");
      comp_ok = false;
      return;
    }
    for (int e = 0; e < idxcat.object_count(); ++e) {
      int c = it->second[e];
      int want_d, want_c;
      if (F.contravariant) {
        want_d = F.action[f].omap[F.action[g].omap[e]];
        want_c = F.action[gf].omap[e];
      } else {
        want_d = F.action[gf].omap[e];
        want_c = F.action[g].omap[F.action[f].omap[e]];
      }
      if (c < 0 || target.dom(c) != want_d || target.cod(c) != want_c) {
        add("comp_iso", F.name + ": comp_iso component has wrong endpoints");
        comp_ok = false;
        continue;
      }
      if (inverse_of(target, c) < 0) {
        add("comp_iso", F.name + ": comp_iso component is not an iso");
        comp_ok = false;
      }
    }
    if (!comp_ok) return;
    for (int m = 0; m < idxcat.morphism_count(); ++m) {
      int x = idxcat.dom(m), y = idxcat.cod(m);
      bool nat;
      if (F.contravariant) {
        int lhs = target.compose(F.action[gf].mmap[m], it->second[x]);
        int rhs = target.compose(it->second[y], F.action[f].mmap[F.action[g].mmap[m]]);
        nat = lhs == rhs;
      } else {
        int lhs = target.compose(F.action[g].mmap[F.action[f].mmap[m]], it->second[x]);
        int rhs = target.compose(it->second[y], F.action[gf].mmap[m]);
        nat = lhs == rhs;
      }
      if (!nat) {
        add("comp_iso", F.name + ": comp_iso not natural at " + idxcat.morphism_name(m));
        comp_ok = false;
      }
    }
  });
  if (!comp_ok) return r;

  // unit compatibility with the identity isos
  for (int f = 0; f < B.morphism_count(); ++f) {
    int bd = B.dom(f), bc = B.cod(f);
    if (F.contravariant) {
      const FinCat& V = *F.value[bd];
      const auto& gamma1 = F.comp_iso.at({B.identity(bc), f});
      const auto& gamma2 = F.comp_iso.at({f, B.identity(bd)});
      for (int e2 = 0; e2 < F.value[bc]->object_count(); ++e2) {
        if (V.compose(gamma1[e2], F.action[f].mmap[F.id_iso[bc][e2]]) !=
            V.identity(F.action[f].omap[e2]))
          add("unit", F.name + ": unit coherence (id∘f) fails along " + B.morphism_name(f));
        if (V.compose(gamma2[e2], F.id_iso[bd][F.action[f].omap[e2]]) !=
            V.identity(F.action[f].omap[e2]))
          add("unit", F.name + ": unit coherence (f∘id) fails along " + B.morphism_name(f));
      }
    } else {
      const FinCat& V = *F.value[bc];
      const auto& gamma1 = F.comp_iso.at({f, B.identity(bd)});
      const auto& gamma2 = F.comp_iso.at({B.identity(bc), f});
      for (int e = 0; e < F.value[bd]->object_count(); ++e) {
        if (V.compose(F.action[f].mmap[F.id_iso[bd][e]], gamma1[e]) !=
            V.identity(F.action[f].omap[e]))
          add("unit", F.name + ": unit coherence (f∘id) fails along " + B.morphism_name(f));
        if (V.compose(F.id_iso[bc][F.action[f].omap[e]], gamma2[e]) !=
            V.identity(F.action[f].omap[e]))
          add("unit", F.name + ": unit coherence (id∘f) fails along " + B.morphism_name(f));
      }
    }
  }
  if (!r.ok()) return r;

  // compatibility on composable triples
  for (int f = 0; f < B.morphism_count(); ++f)
    for (int g : B.out_of(B.cod(f)))
      for (int h : B.out_of(B.cod(g))) {
        int gf = B.compose(g, f), hg = B.compose(h, g);
        if (F.contravariant) {
          const FinCat& V = *F.value[B.dom(f)];
          const auto& g_gf = F.comp_iso.at({g, f});
          const auto& g_h_gf = F.comp_iso.at({h, gf});
          const auto& g_hg = F.comp_iso.at({h, g});
          const auto& g_hg_f = F.comp_iso.at({hg, f});
          for (int e = 0; e < F.value[B.cod(h)]->object_count(); ++e) {
            int path1 = V.compose(g_h_gf[e], g_gf[F.action[h].omap[e]]);
            int path2 = V.compose(g_hg_f[e], F.action[f].mmap[g_hg[e]]);
            if (path1 != path2)
              add("triple", F.name + ": composition coherence fails on (" + B.morphism_name(h) +
                                "," + B.morphism_name(g) + "," + B.morphism_name(f) + ")");
          }
        } else {
          const FinCat& V = *F.value[B.cod(h)];
          const auto& g_h_gf = F.comp_iso.at({h, gf});
          const auto& g_gf = F.comp_iso.at({g, f});
          const auto& g_hg_f = F.comp_iso.at({hg, f});
          const auto& g_hg = F.comp_iso.at({h, g});
          for (int e = 0; e < F.value[B.dom(f)]->object_count(); ++e) {
            int path1 = V.compose(F.action[h].mmap[g_gf[e]], g_h_gf[e]);
            int path2 = V.compose(g_hg[F.action[f].omap[e]], g_hg_f[e]);
            if (path1 != path2)
              add("triple", F.name + ": composition coherence fails on (" + B.morphism_name(h) +
                                "," + B.morphism_name(g) + "," + B.morphism_name(f) + ")");
          }
        }
      }
  return r;
}

Cleavage choose_cleavage(const FiberedFunctor& p, LiftDirection dir, const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  Cleavage clv;
  clv.direction = dir;
  for (int f = 0; f < B.morphism_count(); ++f) {
    int anchor_obj = dir == LiftDirection::Cartesian ? B.cod(f) : B.dom(f);
    for (int e = 0; e < E.object_count(); ++e) {
      if (p.p.omap[e] != anchor_obj) continue;
      auto ls = lifts(p, f, e, dir, lim);
      if (ls.empty())
        throw spec_error("choose_cleavage: no lift of '" + B.morphism_name(f) + "' at '" +
                         E.object_name(e) + "'");
      int best = -1;
      if (B.is_identity(f)) {
        int ide = E.identity(e);
        if (std::find(ls.begin(), ls.end(), ide) != ls.end()) best = ide;
      }
      if (best < 0) {
        best = ls.front();
        for (int m : ls)
          if (E.morphism_name(m) < E.morphism_name(best)) best = m;
      }
      clv.chosen[{f, e}] = best;
    }
  }
  return clv;
}

PseudofunctorExtraction to_pseudofunctor(const FiberedFunctor& p, const Cleavage& clv,
                                         const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  require_within(E.morphism_count(), lim, "to_pseudofunctor");
  const bool cart = clv.direction == LiftDirection::Cartesian;

  PseudofunctorExtraction out;
  out.cleavage = clv;
  out.F.name = "F_" + p.p.name;
  out.F.base = p.p.dst;
  out.F.contravariant = cart;
  for (int b = 0; b < B.object_count(); ++b) {
    out.fibers.push_back(fiber(p, b));
    out.F.value.push_back(out.fibers.back().cat);
  }

  auto unique_filler = [&](int lift, int rhs, bool through_cart) {
    int found = -1, count = 0;
    if (through_cart) {
      for (int w : E.hom(E.dom(rhs), E.dom(lift)))
        if (is_vertical(p, w) && E.compose(lift, w) == rhs) {
          found = w;
          ++count;
        }
    } else {
      for (int w : E.hom(E.cod(lift), E.cod(rhs)))
        if (is_vertical(p, w) && E.compose(w, lift) == rhs) {
          found = w;
          ++count;
        }
    }
    if (count != 1) throw spec_error("to_pseudofunctor: filler count " + std::to_string(count));
    return found;
  };

  for (int f = 0; f < B.morphism_count(); ++f) {
    const Fiber& from = cart ? out.fibers[B.cod(f)] : out.fibers[B.dom(f)];
    const Fiber& to = cart ? out.fibers[B.dom(f)] : out.fibers[B.cod(f)];
    out.F.action.push_back(transport(p, clv, f, from, to));
  }

  out.F.id_iso.assign(B.object_count(), {});
  for (int b = 0; b < B.object_count(); ++b) {
    const Fiber& fb = out.fibers[b];
    out.F.id_iso[b].assign(fb.cat->object_count(), -1);
    for (int i = 0; i < fb.cat->object_count(); ++i) {
      int e = fb.obj_total[i];
      int lift = clv.lift_of(B.identity(b), e);
      int v = unique_filler(lift, E.identity(e), cart);
      out.F.id_iso[b][i] = fb.index_of_total_morphism(v);
      if (out.F.id_iso[b][i] < 0)
        throw spec_error("to_pseudofunctor: id_iso filler is not vertical in the fiber");
    }
  }

  for_composable_pairs(B, [&](int g, int f) {
    int gf = B.compose(g, f);
    const Fiber& idxfib = cart ? out.fibers[B.cod(g)] : out.fibers[B.dom(f)];
    const Fiber& tgtfib = cart ? out.fibers[B.dom(f)] : out.fibers[B.cod(g)];
    std::vector<int> comps(idxfib.cat->object_count(), -1);
    for (int i = 0; i < idxfib.cat->object_count(); ++i) {
      int e = idxfib.obj_total[i];
      int v;
      if (cart) {
        int lift_g = clv.lift_of(g, e);
        int lift_f = clv.lift_of(f, E.dom(lift_g));
        int lift_gf = clv.lift_of(gf, e);
        v = unique_filler(lift_gf, E.compose(lift_g, lift_f), true);
      } else {
        int lift_f = clv.lift_of(f, e);
        int lift_g = clv.lift_of(g, E.cod(lift_f));
        int lift_gf = clv.lift_of(gf, e);
        v = unique_filler(lift_gf, E.compose(lift_g, lift_f), false);
      }
      comps[i] = tgtfib.index_of_total_morphism(v);
      if (comps[i] < 0)
        throw spec_error("to_pseudofunctor: comp_iso filler is not vertical in the fiber");
    }
    out.F.comp_iso[{g, f}] = std::move(comps);
  });
  return out;
}

int GrothendieckResult::object_of(int B, int fiberObj) const {
  for (int i = 0; i < static_cast<int>(obj_base.size()); ++i)
    if (obj_base[i] == B && obj_fiber[i] == fiberObj) return i;
  return -1;
}

GrothendieckResult grothendieck(const Pseudofunctor& F, const Limits& lim) {
  auto vr = validate_pseudofunctor(F, lim);
  if (!vr.ok())
    throw spec_error("grothendieck: coherence data incomplete: " + vr.violations.front().message);
  const FinCat& B = *F.base;

  GrothendieckResult out;
  FinCatBuilder bld("Tot_" + F.name);
  std::vector<std::string> obj_names;
  for (int bb = 0; bb < B.object_count(); ++bb)
    for (int e = 0; e < F.value[bb]->object_count(); ++e) {
      obj_names.push_back("(" + F.value[bb]->object_name(e) + "|" + B.object_name(bb) + ")");
      bld.add_object(obj_names.back());
      out.obj_base.push_back(bb);
      out.obj_fiber.push_back(e);
    }

  struct Arrow {
    int src, dst, h, f;
  };
  std::vector<Arrow> arrows;
  std::map<std::pair<int, int>, int> multiplicity;
  const int nObj = static_cast<int>(out.obj_base.size());
  for (int i = 0; i < nObj; ++i)
    for (int j = 0; j < nObj; ++j) {
      int bi = out.obj_base[i], bj = out.obj_base[j];
      for (int f : B.hom(bi, bj)) {
        if (F.contravariant) {
          const FinCat& Vi = *F.value[bi];
          int tgt = F.action[f].omap[out.obj_fiber[j]];
          for (int h : Vi.hom(out.obj_fiber[i], tgt)) {
            arrows.push_back({i, j, h, f});
            multiplicity[{h, f}]++;
          }
        } else {
          const FinCat& Vj = *F.value[bj];
          int src = F.action[f].omap[out.obj_fiber[i]];
          for (int h : Vj.hom(src, out.obj_fiber[j])) {
            arrows.push_back({i, j, h, f});
            multiplicity[{h, f}]++;
          }
        }
      }
    }
  require_within(arrows.size(), lim, "grothendieck");

  std::map<std::tuple<int, int, int, int>, int> arrow_index;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Arrow& a = arrows[k];
    const FinCat& V =
        F.contravariant ? *F.value[out.obj_base[a.src]] : *F.value[out.obj_base[a.dst]];
    std::string nm = "(" + V.morphism_name(a.h) + "|" + B.morphism_name(a.f) + ")";
    if (multiplicity[{a.h, a.f}] > 1)
      nm += "@" + std::to_string(a.src) + ">" + std::to_string(a.dst);
    bld.add_morphism_idx(nm, a.src, a.dst);
    out.mor_base.push_back(a.f);
    out.mor_fiber.push_back(a.h);
    arrow_index[{a.src, a.dst, a.h, a.f}] = static_cast<int>(k);
  }

  // identities are (ι_B(E) | 1_B)
  for (int i = 0; i < nObj; ++i) {
    int bb = out.obj_base[i];
    int iota = F.id_iso[bb][out.obj_fiber[i]];
    auto it = arrow_index.find({i, i, iota, B.identity(bb)});
    if (it == arrow_index.end()) throw spec_error("grothendieck: identity arrow missing");
    bld.set_identity_idx(i, it->second);
  }

  // composition per the composite formula
  const int M = static_cast<int>(arrows.size());
  for (int k1 = 0; k1 < M; ++k1)
    for (int k2 = 0; k2 < M; ++k2) {
      const Arrow& a1 = arrows[k1];  // (u|f) : i -> j
      const Arrow& a2 = arrows[k2];  // (v|g) : j -> l
      if (a1.dst != a2.src) continue;
      int gf = B.compose(a2.f, a1.f);
      int w;
      if (F.contravariant) {
        const FinCat& V = *F.value[out.obj_base[a1.src]];
        int gamma = F.comp_iso.at({a2.f, a1.f})[out.obj_fiber[a2.dst]];
        w = V.compose(gamma, V.compose(F.action[a1.f].mmap[a2.h], a1.h));
      } else {
        const FinCat& V = *F.value[out.obj_base[a2.dst]];
        int gamma = F.comp_iso.at({a2.f, a1.f})[out.obj_fiber[a1.src]];
        w = V.compose(a2.h, V.compose(F.action[a2.f].mmap[a1.h], gamma));
      }
      auto it = arrow_index.find({a1.src, a2.dst, w, gf});
      if (it == arrow_index.end()) throw spec_error("grothendieck: composite arrow missing");
      bld.set_compose_idx(k2, k1, it->second);
    }
  out.total = bld.build();

  out.projection.name = "p_" + F.name;
  out.projection.src = out.total;
  out.projection.dst = F.base;
  out.projection.omap = out.obj_base;
  out.projection.mmap = out.mor_base;
  auto pr = validate_functor(out.projection);
  if (!pr.ok()) throw spec_error("grothendieck: projection is not a functor");
  return out;
}

RoundTrip roundtrip_check(const FiberedFunctor& p, const Limits& lim) {
  const FinCat& E = p.total();
  RoundTrip rt;
  auto clv = choose_cleavage(p, LiftDirection::Cartesian, lim);
  auto ext = to_pseudofunctor(p, clv, lim);
  auto g = grothendieck(ext.F, lim);

  FunctorData M;
  M.name = "compare";
  M.src = g.total;
  M.dst = p.p.src;
  M.omap.assign(g.total->object_count(), -1);
  M.mmap.assign(g.total->morphism_count(), -1);
  for (int i = 0; i < g.total->object_count(); ++i)
    M.omap[i] = ext.fibers[g.obj_base[i]].obj_total[g.obj_fiber[i]];
  for (int k = 0; k < g.total->morphism_count(); ++k) {
    int f = g.mor_base[k];
    int src_b = g.obj_base[g.total->dom(k)];
    int h_total = ext.fibers[src_b].mor_total[g.mor_fiber[k]];
    int tgt_total = M.omap[g.total->cod(k)];
    int lift = clv.lift_of(f, tgt_total);
    M.mmap[k] = E.compose(lift, h_total);
    if (M.mmap[k] < 0) throw spec_error("roundtrip_check: comparison morphism missing");
  }
  rt.mediating = M;
  if (!validate_functor(M).ok()) return rt;

  rt.commutes_with_projections = true;
  for (int i = 0; i < g.total->object_count(); ++i)
    if (p.p.omap[M.omap[i]] != g.projection.omap[i]) rt.commutes_with_projections = false;
  for (int k = 0; k < g.total->morphism_count(); ++k)
    if (p.p.mmap[M.mmap[k]] != g.projection.mmap[k]) rt.commutes_with_projections = false;

  rt.analysis = analyze_functor(M, lim);
  rt.ok = rt.commutes_with_projections && rt.analysis.equivalence;
  return rt;
}

}  // namespace catspec
