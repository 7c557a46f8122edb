#include "catspec/functor.hpp"

#include <algorithm>
#include <functional>

namespace catspec {

FunctorData identity_functor(CatPtr c) {
  FunctorData F;
  F.name = "id_" + c->name();
  F.src = c;
  F.dst = c;
  F.omap.resize(c->object_count());
  F.mmap.resize(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) F.omap[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) F.mmap[i] = i;
  return F;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (f.dst.get() != g.src.get())
    throw spec_error("compose_functors: middle categories differ");
  FunctorData h;
  h.name = g.name + "∘" + f.name;
  h.src = f.src;
  h.dst = g.dst;
  h.omap.resize(f.omap.size());
  h.mmap.resize(f.mmap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i) h.omap[i] = g.omap[f.omap[i]];
  for (std::size_t i = 0; i < f.mmap.size(); ++i) h.mmap[i] = g.mmap[f.mmap[i]];
  return h;
}

FunctorData constant_functor(CatPtr src, CatPtr dst, int obj, const std::string& name) {
  FunctorData F;
  F.name = name;
  F.src = src;
  F.dst = dst;
  F.omap.assign(src->object_count(), obj);
  F.mmap.assign(src->morphism_count(), dst->identity(obj));
  return F;
}

ValidationReport validate_functor(const FunctorData& F) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg, std::vector<std::string> wit) {
    r.violations.push_back({std::move(code), std::move(msg), std::move(wit)});
  };
  const FinCat& A = *F.src;
  const FinCat& B = *F.dst;
  if (static_cast<int>(F.omap.size()) != A.object_count() ||
      static_cast<int>(F.mmap.size()) != A.morphism_count()) {
    add("total", F.name + ": omap/mmap not total", {});
    return r;
  }
  for (int x = 0; x < A.object_count(); ++x)
    if (F.omap[x] < 0 || F.omap[x] >= B.object_count()) {
      add("total", F.name + ": omap out of range at " + A.object_name(x), {A.object_name(x)});
      return r;
    }
  for (int m = 0; m < A.morphism_count(); ++m) {
    int fm = F.mmap[m];
    if (fm < 0 || fm >= B.morphism_count()) {
      add("total", F.name + ": mmap out of range at " + A.morphism_name(m), {A.morphism_name(m)});
      return r;
    }
    if (B.dom(fm) != F.omap[A.dom(m)] || B.cod(fm) != F.omap[A.cod(m)])
      add("endpoints", F.name + ": image of " + A.morphism_name(m) + " has wrong endpoints",
          {A.morphism_name(m)});
  }
  for (int x = 0; x < A.object_count(); ++x)
    if (F.mmap[A.identity(x)] != B.identity(F.omap[x]))
      add("identity", F.name + ": identity of " + A.object_name(x) + " not preserved",
          {A.object_name(x)});
  for (int f = 0; f < A.morphism_count(); ++f)
    for (int g : A.out_of(A.cod(f))) {
      int gf = A.compose(g, f);
      if (gf < 0) continue;
      if (B.compose(F.mmap[g], F.mmap[f]) != F.mmap[gf])
        add("composition",
            F.name + ": composite " + A.morphism_name(g) + "∘" + A.morphism_name(f) +
                " not preserved",
            {A.morphism_name(g), A.morphism_name(f)});
    }
  return r;
}

ValidationReport validate_nattrans(const NatTransData& t) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg, std::vector<std::string> wit) {
    r.violations.push_back({std::move(code), std::move(msg), std::move(wit)});
  };
  const FunctorData& F = t.srcFunctor;
  const FunctorData& G = t.dstFunctor;
  if (F.src.get() != G.src.get() || F.dst.get() != G.dst.get()) {
    add("parallel", t.name + ": functors are not parallel", {});
    return r;
  }
  const FinCat& A = *F.src;
  const FinCat& B = *F.dst;
  if (static_cast<int>(t.component.size()) != A.object_count()) {
    add("total", t.name + ": components not total", {});
    return r;
  }
  for (int x = 0; x < A.object_count(); ++x) {
    int c = t.component[x];
    if (c < 0 || B.dom(c) != F.omap[x] || B.cod(c) != G.omap[x])
      add("endpoints", t.name + ": component at " + A.object_name(x) + " has wrong endpoints",
          {A.object_name(x)});
  }
  if (!r.ok()) return r;
  for (int m = 0; m < A.morphism_count(); ++m) {
    int x = A.dom(m), y = A.cod(m);
    if (B.compose(t.component[y], F.mmap[m]) != B.compose(G.mmap[m], t.component[x]))
      add("naturality", t.name + ": square at " + A.morphism_name(m) + " does not commute",
          {A.morphism_name(m)});
  }
  return r;
}

std::vector<NatTransData> natural_isos(const FunctorData& F, const FunctorData& G,
                                       const Limits& lim) {
  if (F.src.get() != G.src.get() || F.dst.get() != G.dst.get())
    throw spec_error("natural_isos: functors are not parallel");
  const FinCat& A = *F.src;
  const FinCat& B = *F.dst;
  require_within(B.morphism_count(), lim, "natural_isos");

  std::vector<std::vector<int>> candidates(A.object_count());
  for (int x = 0; x < A.object_count(); ++x) {
    for (auto [iso, inv] : isomorphisms(B, F.omap[x], G.omap[x])) candidates[x].push_back(iso);
    if (candidates[x].empty()) return {};
  }
  std::vector<NatTransData> out;
  std::vector<int> comp(A.object_count(), -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == A.object_count()) {
      NatTransData t;
      t.name = "iso";
      t.srcFunctor = F;
      t.dstFunctor = G;
      t.component = comp;
      out.push_back(std::move(t));
      return;
    }
    for (int c : candidates[x]) {
      comp[x] = c;
      bool ok = true;
      // naturality against already-assigned objects
      for (int m = 0; m < A.morphism_count() && ok; ++m) {
        int d = A.dom(m), e = A.cod(m);
        if (d > x || e > x) continue;
        if (comp[d] < 0 || comp[e] < 0) continue;
        if (B.compose(comp[e], F.mmap[m]) != B.compose(G.mmap[m], comp[d])) ok = false;
      }
      if (ok) rec(x + 1);
    }
    comp[x] = -1;
  };
  rec(0);
  return out;
}

bool naturally_isomorphic(const FunctorData& F, const FunctorData& G, const Limits& lim) {
  return !natural_isos(F, G, lim).empty();
}

FunctorAnalysis analyze_functor(const FunctorData& F, const Limits& lim) {
  FunctorAnalysis a;
  auto vr = validate_functor(F);
  a.functorial = vr.ok();
  if (!a.functorial) {
    for (const auto& v : vr.violations) a.witness_functorial.push_back(v.message);
    return a;
  }
  const FinCat& A = *F.src;
  const FinCat& B = *F.dst;
  require_within(A.morphism_count(), lim, "analyze_functor");
  require_within(B.morphism_count(), lim, "analyze_functor");

  a.faithful = true;
  for (int x = 0; x < A.object_count() && a.faithful; ++x)
    for (int y = 0; y < A.object_count() && a.faithful; ++y) {
      const auto& hs = A.hom(x, y);
      for (std::size_t i = 0; i < hs.size() && a.faithful; ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (F.mmap[hs[i]] == F.mmap[hs[j]]) {
            a.faithful = false;
            a.witness_faithful = {A.morphism_name(hs[i]), A.morphism_name(hs[j])};
            break;
          }
    }

  a.full = true;
  for (int x = 0; x < A.object_count() && a.full; ++x)
    for (int y = 0; y < A.object_count() && a.full; ++y)
      for (int h : B.hom(F.omap[x], F.omap[y])) {
        bool hit = false;
        for (int f : A.hom(x, y))
          if (F.mmap[f] == h) {
            hit = true;
            break;
          }
        if (!hit) {
          a.full = false;
          a.witness_full = {A.object_name(x), A.object_name(y), B.morphism_name(h)};
          break;
        }
      }

  a.essentiallySurjective = true;
  std::vector<int> preimage(B.object_count(), -1);  // least c with Fc ≅ d
  std::vector<int> iso_to(B.object_count(), -1);    // least iso Fc -> d
  for (int d = 0; d < B.object_count(); ++d) {
    for (int c = 0; c < A.object_count() && preimage[d] < 0; ++c) {
      auto isos = isomorphisms(B, F.omap[c], d);
      if (!isos.empty()) {
        preimage[d] = c;
        iso_to[d] = isos.front().forward;
      }
    }
    if (preimage[d] < 0) {
      a.essentiallySurjective = false;
      a.witness_esssurj = {B.object_name(d)};
    }
  }

  a.equivalence = a.faithful && a.full && a.essentiallySurjective;
  if (!a.equivalence) return a;

  FunctorData H;
  H.name = "quasi_inverse_" + F.name;
  H.src = F.dst;
  H.dst = F.src;
  H.omap = preimage;
  H.mmap.assign(B.morphism_count(), -1);
  for (int h = 0; h < B.morphism_count(); ++h) {
    int d = B.dom(h), e = B.cod(h);
    // unique f with F f = η_e⁻¹ ∘ h ∘ η_d
    int target = B.compose(inverse_of(B, iso_to[e]), B.compose(h, iso_to[d]));
    for (int f : A.hom(preimage[d], preimage[e]))
      if (F.mmap[f] == target) {
        H.mmap[h] = f;
        break;
      }
    if (H.mmap[h] < 0) throw spec_error("analyze_functor: quasi-inverse construction failed");
  }
  a.quasi_inverse = H;

  NatTransData counit;  // F∘H => Id
  counit.name = "counit";
  counit.srcFunctor = compose_functors(F, H);
  counit.dstFunctor = identity_functor(F.dst);
  counit.component = iso_to;
  a.counit = counit;

  NatTransData unit;  // Id => H∘F
  unit.name = "unit";
  unit.srcFunctor = identity_functor(F.src);
  unit.dstFunctor = compose_functors(H, F);
  unit.component.assign(A.object_count(), -1);
  for (int c = 0; c < A.object_count(); ++c) {
    int target = inverse_of(B, iso_to[F.omap[c]]);  // F c -> F H F c
    for (int u : A.hom(c, H.omap[F.omap[c]]))
      if (F.mmap[u] == target) {
        unit.component[c] = u;
        break;
      }
    if (unit.component[c] < 0) throw spec_error("analyze_functor: unit construction failed");
  }
  a.unit = unit;
  return a;
}

CommaCategory comma_category(const FunctorData& F, const FunctorData& G, const Limits& lim) {
  if (F.dst.get() != G.dst.get()) throw spec_error("comma_category: functors have different codomains");
  const FinCat& A = *F.src;
  const FinCat& Bc = *G.src;
  const FinCat& C = *F.dst;

  CommaCategory out;
  FinCatBuilder b("(" + F.name + "/" + G.name + ")");
  // objects (a, b, f: Fa -> Gb)
  for (int x = 0; x < A.object_count(); ++x)
    for (int y = 0; y < Bc.object_count(); ++y)
      for (int f : C.hom(F.omap[x], G.omap[y])) {
        b.add_object("(" + A.object_name(x) + "," + Bc.object_name(y) + "," + C.morphism_name(f) +
                     ")");
        out.obj_a.push_back(x);
        out.obj_b.push_back(y);
        out.obj_f.push_back(f);
      }
  const int nObj = static_cast<int>(out.obj_a.size());
  // morphisms (u, v) with Gv ∘ f = f' ∘ Fu
  std::vector<int> msrc, mdst;
  for (int i = 0; i < nObj; ++i)
    for (int j = 0; j < nObj; ++j) {
      for (int u : A.hom(out.obj_a[i], out.obj_a[j]))
        for (int v : Bc.hom(out.obj_b[i], out.obj_b[j])) {
          if (C.compose(G.mmap[v], out.obj_f[i]) != C.compose(out.obj_f[j], F.mmap[u])) continue;
          std::string nm;
          if (i == j && A.is_identity(u) && Bc.is_identity(v)) {
            nm = "id_" + std::string("(") + A.object_name(out.obj_a[i]) + "," +
                 Bc.object_name(out.obj_b[i]) + "," + C.morphism_name(out.obj_f[i]) + ")";
          } else {
            nm = "(" + A.morphism_name(u) + "," + Bc.morphism_name(v) + "):" + std::to_string(i) +
                 ">" + std::to_string(j);
          }
          b.add_morphism_idx(nm, i, j);
          out.mor_u.push_back(u);
          out.mor_v.push_back(v);
          msrc.push_back(i);
          mdst.push_back(j);
          require_within(out.mor_u.size(), lim, "comma_category");
        }
    }
  b.complete_identities();
  // composition componentwise
  const int M = static_cast<int>(out.mor_u.size());
  for (int f = 0; f < M; ++f)
    for (int g = 0; g < M; ++g) {
      if (mdst[f] != msrc[g]) continue;
      int cu = A.compose(out.mor_u[g], out.mor_u[f]);
      int cv = Bc.compose(out.mor_v[g], out.mor_v[f]);
      int gf = -1;
      for (int k = 0; k < M; ++k)
        if (msrc[k] == msrc[f] && mdst[k] == mdst[g] && out.mor_u[k] == cu && out.mor_v[k] == cv) {
          gf = k;
          break;
        }
      if (gf < 0) throw spec_error("comma_category: composite square missing");
      b.set_compose_idx(g, f, gf);
    }
  out.cat = b.build();

  out.projA.name = "dom";
  out.projA.src = out.cat;
  out.projA.dst = F.src;
  out.projA.omap = out.obj_a;
  out.projA.mmap = out.mor_u;
  out.projB.name = "cod";
  out.projB.src = out.cat;
  out.projB.dst = G.src;
  out.projB.omap = out.obj_b;
  out.projB.mmap = out.mor_v;
  return out;
}

namespace {

// Backtracking search for a strict isomorphism of categories.
struct IsoSearch {
  const FinCat& A;
  const FinCat& B;
  std::vector<int> osigma, msigma;   // a -> b assignments
  std::vector<bool> oused, mused;

  bool match_morphisms(int m) {
    if (m == A.morphism_count()) return true;
    int td = osigma[A.dom(m)], tc = osigma[A.cod(m)];
    for (int cand : B.hom(td, tc)) {
      if (mused[cand]) continue;
      if (A.is_identity(m) != B.is_identity(cand)) continue;
      msigma[m] = cand;
      mused[cand] = true;
      bool ok = true;
      // composition consistency against assigned morphisms
      for (int f = 0; f <= m && ok; ++f) {
        if (msigma[f] < 0) continue;
        if (A.cod(f) == A.dom(m)) {
          int mf = A.compose(m, f);
          if (mf <= m && msigma[mf] >= 0 && B.compose(cand, msigma[f]) != msigma[mf]) ok = false;
          if (mf > m && B.compose(cand, msigma[f]) < 0) ok = false;
        }
        if (ok && A.cod(m) == A.dom(f)) {
          int fm = A.compose(f, m);
          if (fm <= m && msigma[fm] >= 0 && B.compose(msigma[f], cand) != msigma[fm]) ok = false;
        }
      }
      if (ok && match_morphisms(m + 1)) return true;
      mused[cand] = false;
      msigma[m] = -1;
    }
    return false;
  }

  bool match_objects(int x) {
    if (x == A.object_count()) {
      std::fill(msigma.begin(), msigma.end(), -1);
      std::fill(mused.begin(), mused.end(), false);
      return match_morphisms(0);
    }
    for (int y = 0; y < B.object_count(); ++y) {
      if (oused[y]) continue;
      // prune on hom-set sizes with already-assigned objects
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        if (A.hom(x, z).size() != B.hom(y, osigma[z]).size()) ok = false;
        if (A.hom(z, x).size() != B.hom(osigma[z], y).size()) ok = false;
      }
      if (A.hom(x, x).size() != B.hom(y, y).size()) ok = false;
      if (!ok) continue;
      osigma[x] = y;
      oused[y] = true;
      if (match_objects(x + 1)) return true;
      oused[y] = false;
      osigma[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<FunctorData> find_category_isomorphism(CatPtr a, CatPtr b, const Limits& lim) {
  require_within(a->morphism_count(), lim, "find_category_isomorphism");
  if (a->object_count() != b->object_count() || a->morphism_count() != b->morphism_count())
    return std::nullopt;
  IsoSearch s{*a, *b,
              std::vector<int>(a->object_count(), -1),
              std::vector<int>(a->morphism_count(), -1),
              std::vector<bool>(b->object_count(), false),
              std::vector<bool>(b->morphism_count(), false)};
  if (!s.match_objects(0)) return std::nullopt;
  FunctorData F;
  F.name = "iso_" + a->name() + "_" + b->name();
  F.src = a;
  F.dst = b;
  F.omap = s.osigma;
  F.mmap = s.msigma;
  return F;
}

}  // namespace catspec
