#include "catspec/fibration.hpp"

#include <algorithm>
#include <unordered_map>

namespace catspec {

FiberedFunctor make_fibered(FunctorData p) {
  auto r = validate_functor(p);
  if (!r.ok())
    throw spec_error("make_fibered: '" + p.name + "' is not a functor: " + r.violations.front().message);
  return FiberedFunctor{std::move(p)};
}

bool is_vertical(const FiberedFunctor& p, int m) {
  return p.base().is_identity(p.p.mmap[m]);
}

CartesianCheck is_cartesian(const FiberedFunctor& p, int phi, LiftDirection dir,
                            const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  if (phi < 0 || phi >= E.morphism_count()) throw spec_error("is_cartesian: unknown morphism");
  require_within(E.morphism_count(), lim, "is_cartesian");

  const int f = p.p.mmap[phi];
  CartesianCheck out;
  // counts keyed by (candidate f', base factorization g)
  std::unordered_map<std::uint64_t, int> counts;
  const std::uint64_t MB = static_cast<std::uint64_t>(B.morphism_count());

  if (dir == LiftDirection::Cartesian) {
    const int Eprime = E.dom(phi), Etgt = E.cod(phi);
    const int Bprime = B.dom(f);
    for (int S = 0; S < E.object_count(); ++S) {
      const auto& fprimes = E.hom(S, Etgt);
      if (fprimes.empty()) continue;
      counts.clear();
      for (int gt : E.hom(S, Eprime)) {
        int h = E.compose(phi, gt);
        counts[static_cast<std::uint64_t>(h) * MB + p.p.mmap[gt]]++;
      }
      const int pS = p.p.omap[S];
      for (int fp : fprimes) {
        const int pfp = p.p.mmap[fp];
        for (int g : B.hom(pS, Bprime)) {
          if (B.compose(f, g) != pfp) continue;
          auto it = counts.find(static_cast<std::uint64_t>(fp) * MB + g);
          int n = it == counts.end() ? 0 : it->second;
          if (n != 1) {
            out.witness_fprime = fp;
            out.witness_g = g;
            out.filler_count = n;
            return out;
          }
        }
      }
    }
  } else {
    const int Esrc = E.dom(phi), Eprime = E.cod(phi);
    const int Bprime = B.cod(f);
    for (int S = 0; S < E.object_count(); ++S) {
      const auto& fprimes = E.hom(Esrc, S);
      if (fprimes.empty()) continue;
      counts.clear();
      for (int gt : E.hom(Eprime, S)) {
        int h = E.compose(gt, phi);
        counts[static_cast<std::uint64_t>(h) * MB + p.p.mmap[gt]]++;
      }
      const int pS = p.p.omap[S];
      for (int fp : fprimes) {
        const int pfp = p.p.mmap[fp];
        for (int g : B.hom(Bprime, pS)) {
          if (B.compose(g, f) != pfp) continue;
          auto it = counts.find(static_cast<std::uint64_t>(fp) * MB + g);
          int n = it == counts.end() ? 0 : it->second;
          if (n != 1) {
            out.witness_fprime = fp;
            out.witness_g = g;
            out.filler_count = n;
            return out;
          }
        }
      }
    }
  }
  out.ok = true;
  return out;
}

std::vector<int> lifts(const FiberedFunctor& p, int f, int anchor, LiftDirection dir,
                       const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  if (dir == LiftDirection::Cartesian && p.p.omap[anchor] != B.cod(f))
    throw spec_error("lifts: anchor is not over cod(f)");
  if (dir == LiftDirection::Cocartesian && p.p.omap[anchor] != B.dom(f))
    throw spec_error("lifts: anchor is not over dom(f)");
  std::vector<int> out;
  const auto& cands = dir == LiftDirection::Cartesian ? E.into(anchor) : E.out_of(anchor);
  for (int m : cands) {
    if (p.p.mmap[m] != f) continue;
    if (is_cartesian(p, m, dir, lim).ok) out.push_back(m);
  }
  return out;
}

Classification classify(const FiberedFunctor& p, const std::optional<ArrowClass>& cls,
                        const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  require_within(E.morphism_count(), lim, "classify");

  Classification c;
  auto has_lift = [&](int f, int anchor, LiftDirection dir) {
    const auto& cands = dir == LiftDirection::Cartesian ? E.into(anchor) : E.out_of(anchor);
    for (int m : cands) {
      if (p.p.mmap[m] != f) continue;
      if (is_cartesian(p, m, dir, lim).ok) return true;
    }
    return false;
  };

  c.fibration = true;
  c.cofibration = true;
  for (int f = 0; f < B.morphism_count() && (c.fibration || c.cofibration); ++f) {
    for (int e = 0; e < E.object_count(); ++e) {
      if (c.fibration && p.p.omap[e] == B.cod(f) && !has_lift(f, e, LiftDirection::Cartesian)) {
        c.fibration = false;
        if (c.witness.empty()) c.witness = {B.morphism_name(f), E.object_name(e)};
      }
      if (c.cofibration && p.p.omap[e] == B.dom(f) && !has_lift(f, e, LiftDirection::Cocartesian)) {
        c.cofibration = false;
        if (c.witness.empty()) c.witness = {B.morphism_name(f), E.object_name(e)};
      }
    }
  }
  c.bifibration = c.fibration && c.cofibration;

  if (cls.has_value()) {
    bool ok = true;
    for (int f : cls->members) {
      for (int e = 0; e < E.object_count() && ok; ++e)
        if (p.p.omap[e] == B.cod(f) && !has_lift(f, e, LiftDirection::Cartesian)) {
          ok = false;
          if (c.witness.empty()) c.witness = {B.morphism_name(f), E.object_name(e)};
        }
      if (!ok) break;
    }
    c.fibrationWrtClass = ok;
  }
  return c;
}

int Fiber::index_of_total_object(int e) const {
  for (int i = 0; i < static_cast<int>(obj_total.size()); ++i)
    if (obj_total[i] == e) return i;
  return -1;
}

int Fiber::index_of_total_morphism(int m) const {
  for (int i = 0; i < static_cast<int>(mor_total.size()); ++i)
    if (mor_total[i] == m) return i;
  return -1;
}

Fiber fiber(const FiberedFunctor& p, int B) {
  const FinCat& E = p.total();
  const FinCat& Bc = p.base();
  if (B < 0 || B >= Bc.object_count()) throw spec_error("fiber: unknown base object");
  Fiber fb;
  fb.base_object = B;
  FinCatBuilder b(E.name() + "_fib_" + Bc.object_name(B));
  std::vector<int> oidx(E.object_count(), -1), midx(E.morphism_count(), -1);
  for (int e = 0; e < E.object_count(); ++e)
    if (p.p.omap[e] == B) {
      oidx[e] = b.add_object(E.object_name(e));
      fb.obj_total.push_back(e);
    }
  const int idB = Bc.identity(B);
  for (int m = 0; m < E.morphism_count(); ++m)
    if (p.p.mmap[m] == idB && oidx[E.dom(m)] >= 0 && oidx[E.cod(m)] >= 0) {
      midx[m] = b.add_morphism_idx(E.morphism_name(m), oidx[E.dom(m)], oidx[E.cod(m)]);
      fb.mor_total.push_back(m);
      if (E.is_identity(m)) b.set_identity(E.object_name(E.dom(m)), E.morphism_name(m));
    }
  b.complete_identities();
  for (int f : fb.mor_total)
    for (int g : fb.mor_total) {
      if (E.cod(f) != E.dom(g)) continue;
      int gf = E.compose(g, f);
      if (gf < 0 || midx[gf] < 0)
        throw spec_error("fiber: vertical morphisms not closed under composition");
      b.set_compose_idx(midx[g], midx[f], midx[gf]);
    }
  fb.cat = b.build();
  fb.inclusion.name = "incl_" + fb.cat->name();
  fb.inclusion.src = fb.cat;
  fb.inclusion.dst = p.p.src;
  fb.inclusion.omap = fb.obj_total;
  fb.inclusion.mmap = fb.mor_total;
  return fb;
}

int Cleavage::lift_of(int f, int anchor) const {
  auto it = chosen.find({f, anchor});
  if (it == chosen.end())
    throw spec_error("cleavage: missing entry for (f=" + std::to_string(f) +
                     ", E=" + std::to_string(anchor) + ")");
  return it->second;
}

ValidationReport validate_cleavage(const FiberedFunctor& p, const Cleavage& clv,
                                   const Limits& lim) {
  ValidationReport r;
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  for (const auto& [key, m] : clv.chosen) {
    auto [f, anchor] = key;
    if (p.p.mmap[m] != f) {
      r.violations.push_back({"over", "chosen lift is not over its arrow", {E.morphism_name(m)}});
      continue;
    }
    int endpoint = clv.direction == LiftDirection::Cartesian ? E.cod(m) : E.dom(m);
    if (endpoint != anchor) {
      r.violations.push_back({"anchor", "chosen lift has wrong anchor", {E.morphism_name(m)}});
      continue;
    }
    if (!is_cartesian(p, m, clv.direction, lim).ok)
      r.violations.push_back({"cartesian",
                              "chosen lift is not (co)cartesian",
                              {B.morphism_name(f), E.object_name(anchor)}});
  }
  return r;
}

FunctorData transport(const FiberedFunctor& p, const Cleavage& clv, int f, const Fiber& from,
                      const Fiber& to) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  FunctorData T;
  T.src = from.cat;
  T.dst = to.cat;
  T.name = "Cart_" + B.morphism_name(f);

  if (clv.direction == LiftDirection::Cartesian) {
    if (from.base_object != B.cod(f) || to.base_object != B.dom(f))
      throw spec_error("transport: fibers do not match the arrow (cartesian direction)");
    T.omap.assign(from.cat->object_count(), -1);
    T.mmap.assign(from.cat->morphism_count(), -1);
    for (int i = 0; i < from.cat->object_count(); ++i) {
      int lift = clv.lift_of(f, from.obj_total[i]);
      T.omap[i] = to.index_of_total_object(E.dom(lift));
      if (T.omap[i] < 0) throw spec_error("transport: lift domain is not in the target fiber");
    }
    // unique filler: f̃_E ∘ Cart_f(g) = g ∘ f̃_{E1}
    for (int mi = 0; mi < from.cat->morphism_count(); ++mi) {
      int g = from.mor_total[mi];
      int e1 = E.dom(g), e = E.cod(g);
      int lift1 = clv.lift_of(f, e1), lift = clv.lift_of(f, e);
      int rhs = E.compose(g, lift1);
      int found = -1, count = 0;
      for (int w : E.hom(E.dom(lift1), E.dom(lift))) {
        if (!is_vertical(p, w)) continue;
        if (E.compose(lift, w) == rhs) {
          found = w;
          ++count;
        }
      }
      if (count != 1)
        throw spec_error("transport: filler count " + std::to_string(count) + " for " +
                         E.morphism_name(g));
      T.mmap[mi] = to.index_of_total_morphism(found);
      if (T.mmap[mi] < 0) throw spec_error("transport: filler is not in the target fiber");
    }
  } else {
    if (from.base_object != B.dom(f) || to.base_object != B.cod(f))
      throw spec_error("transport: fibers do not match the arrow (cocartesian direction)");
    T.omap.assign(from.cat->object_count(), -1);
    T.mmap.assign(from.cat->morphism_count(), -1);
    for (int i = 0; i < from.cat->object_count(); ++i) {
      int lift = clv.lift_of(f, from.obj_total[i]);
      T.omap[i] = to.index_of_total_object(E.cod(lift));
      if (T.omap[i] < 0) throw spec_error("transport: lift codomain is not in the target fiber");
    }
    for (int mi = 0; mi < from.cat->morphism_count(); ++mi) {
      int g = from.mor_total[mi];
      int e1 = E.dom(g), e = E.cod(g);
      int lift1 = clv.lift_of(f, e1), lift = clv.lift_of(f, e);
      int rhs = E.compose(lift, g);
      int found = -1, count = 0;
      for (int w : E.hom(E.cod(lift1), E.cod(lift))) {
        if (!is_vertical(p, w)) continue;
        if (E.compose(w, lift1) == rhs) {
          found = w;
          ++count;
        }
      }
      if (count != 1)
        throw spec_error("transport: filler count " + std::to_string(count) + " for " +
                         E.morphism_name(g));
      T.mmap[mi] = to.index_of_total_morphism(found);
      if (T.mmap[mi] < 0) throw spec_error("transport: filler is not in the target fiber");
    }
  }
  auto vr = validate_functor(T);
  if (!vr.ok())
    throw spec_error("transport: result is not a functor: " + vr.violations.front().message);
  return T;
}

std::vector<int> vertical_isos(const FiberedFunctor& p, int E1, int E2) {
  std::vector<int> out;
  for (auto [iso, inv] : isomorphisms(p.total(), E1, E2)) {
    if (is_vertical(p, iso)) out.push_back(iso);
  }
  return out;
}

std::vector<int> connecting_verticals(const FiberedFunctor& p, int phi1, int phi2,
                                      LiftDirection dir) {
  const FinCat& E = p.total();
  std::vector<int> out;
  if (dir == LiftDirection::Cartesian) {
    // v : dom(phi1) -> dom(phi2) vertical with phi2∘v = phi1
    for (int v : E.hom(E.dom(phi1), E.dom(phi2))) {
      if (!is_vertical(p, v)) continue;
      if (E.compose(phi2, v) == phi1) out.push_back(v);
    }
  } else {
    // v : cod(phi1) -> cod(phi2) vertical with v∘phi1 = phi2
    for (int v : E.hom(E.cod(phi1), E.cod(phi2))) {
      if (!is_vertical(p, v)) continue;
      if (E.compose(v, phi1) == phi2) out.push_back(v);
    }
  }
  return out;
}

FreeFibration free_fibration(const FunctorData& F, const Limits& lim) {
  auto vr = validate_functor(F);
  if (!vr.ok()) throw spec_error("free_fibration: input is not a functor");
  FreeFibration out;
  out.comma = comma_category(identity_functor(F.dst), F, lim);
  out.one_over = out.comma.cat;
  out.dom = out.comma.projA;
  out.dom.name = "dom";

  const FinCat& C = *F.src;
  const FinCat& B = *F.dst;
  out.unit.name = "i";
  out.unit.src = F.src;
  out.unit.dst = out.one_over;
  out.unit.omap.assign(C.object_count(), -1);
  out.unit.mmap.assign(C.morphism_count(), -1);
  for (int i = 0; i < out.one_over->object_count(); ++i) {
    if (out.comma.obj_f[i] == B.identity(F.omap[out.comma.obj_b[i]]) &&
        out.comma.obj_a[i] == F.omap[out.comma.obj_b[i]])
      out.unit.omap[out.comma.obj_b[i]] = i;
  }
  for (int c = 0; c < C.object_count(); ++c)
    if (out.unit.omap[c] < 0) throw spec_error("free_fibration: unit object missing");
  for (int m = 0; m < out.one_over->morphism_count(); ++m) {
    int src = out.one_over->dom(m), dst = out.one_over->cod(m);
    // i(f) = (F f, f)
    int v = out.comma.mor_v[m];
    if (out.comma.mor_u[m] == F.mmap[v] && out.unit.omap[C.dom(v)] == src &&
        out.unit.omap[C.cod(v)] == dst && out.unit.mmap[v] < 0)
      out.unit.mmap[v] = m;
  }
  for (int m = 0; m < C.morphism_count(); ++m)
    if (out.unit.mmap[m] < 0) throw spec_error("free_fibration: unit morphism missing");
  auto ur = validate_functor(out.unit);
  if (!ur.ok()) throw spec_error("free_fibration: unit is not a functor");
  return out;
}

PullbackFibration pullback_fibration(const FunctorData& F, const FiberedFunctor& p,
                                     const Limits& lim) {
  if (F.dst.get() != p.p.dst.get())
    throw spec_error("pullback_fibration: F does not land in the base of p");
  const FinCat& A = *F.src;
  const FinCat& E = p.total();

  PullbackFibration out;
  FinCatBuilder b(A.name() + "*" + E.name());
  for (int a = 0; a < A.object_count(); ++a)
    for (int e = 0; e < E.object_count(); ++e)
      if (F.omap[a] == p.p.omap[e]) {
        b.add_object("(" + A.object_name(a) + "," + E.object_name(e) + ")");
        out.obj_a.push_back(a);
        out.obj_e.push_back(e);
      }
  const int n = static_cast<int>(out.obj_a.size());
  std::vector<int> msrc, mdst;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int u : A.hom(out.obj_a[i], out.obj_a[j]))
        for (int v : E.hom(out.obj_e[i], out.obj_e[j])) {
          if (F.mmap[u] != p.p.mmap[v]) continue;
          std::string nm;
          if (i == j && A.is_identity(u) && E.is_identity(v)) {
            nm = "id_(" + A.object_name(out.obj_a[i]) + "," + E.object_name(out.obj_e[i]) + ")";
          } else {
            nm = "(" + A.morphism_name(u) + "," + E.morphism_name(v) + "):" + std::to_string(i) +
                 ">" + std::to_string(j);
          }
          b.add_morphism_idx(nm, i, j);
          out.mor_u.push_back(u);
          out.mor_v.push_back(v);
          msrc.push_back(i);
          mdst.push_back(j);
          require_within(out.mor_u.size(), lim, "pullback_fibration");
        }
  b.complete_identities();
  const int M = static_cast<int>(out.mor_u.size());
  for (int f = 0; f < M; ++f)
    for (int g = 0; g < M; ++g) {
      if (mdst[f] != msrc[g]) continue;
      int cu = A.compose(out.mor_u[g], out.mor_u[f]);
      int cv = E.compose(out.mor_v[g], out.mor_v[f]);
      int gf = -1;
      for (int k = 0; k < M; ++k)
        if (msrc[k] == msrc[f] && mdst[k] == mdst[g] && out.mor_u[k] == cu && out.mor_v[k] == cv) {
          gf = k;
          break;
        }
      if (gf < 0) throw spec_error("pullback_fibration: composite missing");
      b.set_compose_idx(g, f, gf);
    }
  out.cat = b.build();
  out.proj_base.name = "p'";
  out.proj_base.src = out.cat;
  out.proj_base.dst = F.src;
  out.proj_base.omap = out.obj_a;
  out.proj_base.mmap = out.mor_u;
  out.proj_total.name = "Fbar";
  out.proj_total.src = out.cat;
  out.proj_total.dst = p.p.src;
  out.proj_total.omap = out.obj_e;
  out.proj_total.mmap = out.mor_v;
  return out;
}

}  // namespace catspec
