#include "catspec/structures.hpp"

#include <algorithm>
#include <map>

namespace catspec {

StructureCheck is_structure(const FiberedFunctor& p, const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();
  require_within(E.morphism_count(), lim, "is_structure");
  StructureCheck out;

  // faithful
  for (int x = 0; x < E.object_count(); ++x)
    for (int y = 0; y < E.object_count(); ++y) {
      const auto& hs = E.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (p.p.mmap[hs[i]] == p.p.mmap[hs[j]]) {
            out.failed = "faithful";
            out.witness = {E.morphism_name(hs[i]), E.morphism_name(hs[j])};
            return out;
          }
    }

  // iso lifting onto every object
  for (int e = 0; e < E.object_count(); ++e) {
    int pe = p.p.omap[e];
    for (int b2 = 0; b2 < B.object_count(); ++b2) {
      for (auto [f, finv] : isomorphisms(B, b2, pe)) {
        bool lifted = false;
        for (int m : E.into(e)) {
          if (p.p.mmap[m] != f) continue;
          if (inverse_of(E, m) >= 0) {
            lifted = true;
            break;
          }
        }
        if (!lifted) {
          out.failed = "iso-lifting";
          out.witness = {B.morphism_name(f), E.object_name(e)};
          return out;
        }
      }
    }
  }

  // skeletal fibers: vertically isomorphic fiber objects are equal
  for (int x = 0; x < E.object_count(); ++x)
    for (int y = 0; y < E.object_count(); ++y) {
      if (x == y || p.p.omap[x] != p.p.omap[y]) continue;
      if (!vertical_isos(p, x, y).empty()) {
        out.failed = "skeletal-fibers";
        out.witness = {E.object_name(x), E.object_name(y)};
        return out;
      }
    }
  out.ok = true;
  return out;
}

IdentityCriteria identity_criteria(const FiberedFunctor& p, int E1, int E2, const Limits& lim) {
  const FinCat& E = p.total();
  auto sc = is_structure(p, lim);
  if (!sc.ok) throw spec_error("identity_criteria: p is not a structure (" + sc.failed + ")");
  if (p.p.omap[E1] != p.p.omap[E2])
    throw spec_error("identity_criteria: objects are not in a common fiber");

  IdentityCriteria out;
  out.a = E1 == E2;

  auto image_homs = [&](int X, int Y) {
    std::vector<int> v;
    for (int h : E.hom(X, Y)) v.push_back(p.p.mmap[h]);
    std::sort(v.begin(), v.end());
    return v;
  };
  out.b = true;
  out.c = true;
  for (int x = 0; x < E.object_count(); ++x) {
    if (image_homs(x, E1) != image_homs(x, E2)) out.b = false;
    if (image_homs(E1, x) != image_homs(E2, x)) out.c = false;
  }

  auto vertical_hom_empty = [&](int X, int Y) {
    for (int h : E.hom(X, Y))
      if (is_vertical(p, h)) return false;
    return true;
  };
  out.d = true;
  out.e = true;
  const int base_obj = p.p.omap[E1];
  for (int x = 0; x < E.object_count(); ++x) {
    if (p.p.omap[x] != base_obj) continue;
    if (vertical_hom_empty(x, E1) != vertical_hom_empty(x, E2)) out.d = false;
    if (vertical_hom_empty(E1, x) != vertical_hom_empty(E2, x)) out.e = false;
  }
  return out;
}

SetPresheaf structure_presheaf(const FiberedFunctor& p, int E, bool* subfunctor_ok) {
  const FinCat& Ec = p.total();
  const FinCat& B = p.base();
  SetPresheaf P;
  P.name = "pE(-," + Ec.object_name(E) + ")";
  P.base = p.p.src;
  P.value.resize(Ec.object_count());
  P.restr.resize(Ec.morphism_count());
  std::vector<std::vector<int>> ids(Ec.object_count());
  for (int x = 0; x < Ec.object_count(); ++x) {
    std::vector<int> v;
    for (int h : Ec.hom(x, E)) v.push_back(p.p.mmap[h]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    ids[x] = v;
    for (int g : v) P.value[x].push_back(B.morphism_name(g));
  }
  bool closed = true;
  for (int m = 0; m < Ec.morphism_count(); ++m) {
    int X = Ec.dom(m), Y = Ec.cod(m);
    P.restr[m].resize(ids[Y].size());
    for (std::size_t e = 0; e < ids[Y].size(); ++e) {
      int composed = B.compose(ids[Y][e], p.p.mmap[m]);
      auto it = std::lower_bound(ids[X].begin(), ids[X].end(), composed);
      if (it == ids[X].end() || *it != composed) {
        closed = false;
        P.restr[m][e] = 0;
      } else {
        P.restr[m][e] = static_cast<int>(it - ids[X].begin());
      }
    }
  }
  // hom-subfunctor: values sit inside B(p(-), p(E))
  bool inside = true;
  for (int x = 0; x < Ec.object_count() && inside; ++x)
    for (int g : ids[x])
      if (B.dom(g) != p.p.omap[x] || B.cod(g) != p.p.omap[E]) inside = false;
  if (subfunctor_ok) *subfunctor_ok = closed && inside;
  return P;
}

bool AlmostStructure::contains(int total_obj, int g) const {
  const auto& v = members[total_obj];
  return std::binary_search(v.begin(), v.end(), g);
}

ValidationReport validate_almost(const AlmostStructure& A) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg, std::vector<std::string> wit) {
    r.violations.push_back({std::move(code), std::move(msg), std::move(wit)});
  };
  const FinCat& E = *A.p.src;
  const FinCat& B = *A.p.dst;
  if (static_cast<int>(A.members.size()) != E.object_count()) {
    add("total", "almost-structure member sets not total", {});
    return r;
  }
  for (int x = 0; x < E.object_count(); ++x)
    for (int g : A.members[x])
      if (B.dom(g) != A.p.omap[x] || B.cod(g) != A.B)
        add("range", "member is not an arrow p(E) -> B", {B.morphism_name(g), E.object_name(x)});
  for (int v = 0; v < E.morphism_count(); ++v) {
    int X2 = E.dom(v), X = E.cod(v);
    for (int g : A.members[X]) {
      int composed = B.compose(g, A.p.mmap[v]);
      if (!A.contains(X2, composed))
        add("closure", "members not closed under precomposition",
            {B.morphism_name(g), E.morphism_name(v)});
    }
  }
  return r;
}

AlmostStructure almost_full(const FiberedFunctor& p, int B) {
  AlmostStructure A;
  A.p = p.p;
  A.B = B;
  A.members.resize(p.total().object_count());
  for (int x = 0; x < p.total().object_count(); ++x) {
    A.members[x] = p.base().hom(p.p.omap[x], B);
    std::sort(A.members[x].begin(), A.members[x].end());
  }
  return A;
}

AlmostStructure almost_empty(const FiberedFunctor& p, int B) {
  AlmostStructure A;
  A.p = p.p;
  A.B = B;
  A.members.assign(p.total().object_count(), {});
  return A;
}

AlmostStructure almost_principal(const FiberedFunctor& p, int B, int total_obj, int g) {
  AlmostStructure A = almost_empty(p, B);
  const FinCat& E = p.total();
  const FinCat& Bc = p.base();
  std::vector<std::vector<bool>> in(E.object_count());
  for (int x = 0; x < E.object_count(); ++x) in[x].assign(Bc.morphism_count(), false);
  std::vector<std::pair<int, int>> work{{total_obj, g}};
  in[total_obj][g] = true;
  while (!work.empty()) {
    auto [X, h] = work.back();
    work.pop_back();
    for (int v = 0; v < E.morphism_count(); ++v) {
      if (E.cod(v) != X) continue;
      int composed = Bc.compose(h, p.p.mmap[v]);
      if (!in[E.dom(v)][composed]) {
        in[E.dom(v)][composed] = true;
        work.push_back({E.dom(v), composed});
      }
    }
  }
  for (int x = 0; x < E.object_count(); ++x)
    for (int m = 0; m < Bc.morphism_count(); ++m)
      if (in[x][m]) A.members[x].push_back(m);
  return A;
}

AlmostInverseImage almost_inverse_image(const AlmostStructure& A, int f, const Limits& lim) {
  const FinCat& E = *A.p.src;
  const FinCat& B = *A.p.dst;
  require_within(B.morphism_count(), lim, "almost_inverse_image");
  if (B.cod(f) != A.B) throw spec_error("almost_inverse_image: cod f is not the structure's base object");
  const int Bp = B.dom(f);

  AlmostInverseImage out;
  out.result.p = A.p;
  out.result.B = Bp;
  out.result.members.resize(E.object_count());
  for (int x = 0; x < E.object_count(); ++x)
    for (int g : B.hom(A.p.omap[x], Bp))
      if (A.contains(x, B.compose(f, g))) out.result.members[x].push_back(g);

  // Cartesianness of (f∘-, f): an arrow over a base h : B'' -> A.B from any
  // almost-structure (F'', B'') exists iff h∘F'' ⊆ F, and for every
  // factorization h = f∘g the unique candidate filler is g itself, valid iff
  // g∘F'' ⊆ f*F.  Since h∘F'' ⊆ F forces F'' ⊆ h*F and memberships are
  // monotone, checking F'' = h*F covers every F''.
  out.cartesian_ok = true;
  for (int b2 = 0; b2 < B.object_count() && out.cartesian_ok; ++b2) {
    for (int h : B.hom(b2, A.B)) {
      // h*F member test per total object
      for (int g : B.hom(b2, Bp)) {
        if (B.compose(f, g) != h) continue;
        for (int x = 0; x < E.object_count(); ++x) {
          for (int k : B.hom(A.p.omap[x], b2)) {
            bool in_hF = A.contains(x, B.compose(h, k));
            if (!in_hF) continue;
            bool in_fF = out.result.contains(x, B.compose(g, k));
            if (!in_fF) {
              out.cartesian_ok = false;
              out.witness = {B.morphism_name(h), B.morphism_name(g), B.morphism_name(k)};
              break;
            }
          }
          if (!out.cartesian_ok) break;
        }
        if (!out.cartesian_ok) break;
      }
      if (!out.cartesian_ok) break;
    }
  }
  return out;
}

AlmostCategory almost_structure_category(const FiberedFunctor& p, const Limits& lim) {
  const FinCat& E = p.total();
  const FinCat& B = p.base();

  AlmostCategory out;
  FinCatBuilder bld("A_" + E.name());

  for (int bb = 0; bb < B.object_count(); ++bb) {
    // element universe (X, g : p(X) -> bb)
    std::vector<std::pair<int, int>> universe;
    for (int x = 0; x < E.object_count(); ++x)
      for (int g : B.hom(p.p.omap[x], bb)) universe.push_back({x, g});
    if (universe.size() > 16)
      throw guardrail_error("almost_structure_category: element universe too large (" +
                            std::to_string(universe.size()) + ")");
    const int n = static_cast<int>(universe.size());
    // precompute closure edges: element i forces element j
    std::vector<std::vector<int>> forces(n);
    for (int i = 0; i < n; ++i) {
      auto [X, g] = universe[i];
      for (int v = 0; v < E.morphism_count(); ++v) {
        if (E.cod(v) != X) continue;
        int composed = B.compose(g, p.p.mmap[v]);
        for (int j = 0; j < n; ++j)
          if (universe[j].first == E.dom(v) && universe[j].second == composed)
            forces[i].push_back(j);
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool closed = true;
      for (int i = 0; i < n && closed; ++i) {
        if (!(mask & (1u << i))) continue;
        for (int j : forces[i])
          if (!(mask & (1u << j))) {
            closed = false;
            break;
          }
      }
      if (!closed) continue;
      AlmostStructure A = almost_empty(p, bb);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) A.members[universe[i].first].push_back(universe[i].second);
      for (auto& v : A.members) std::sort(v.begin(), v.end());
      out.obj_base.push_back(bb);
      out.obj_data.push_back(std::move(A));
      bld.add_object("F" + std::to_string(out.obj_data.size() - 1) + "@" + B.object_name(bb));
      require_within(out.obj_data.size(), lim, "almost_structure_category");
    }
  }

  const int N = static_cast<int>(out.obj_data.size());
  std::vector<int> msrc, mdst;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int f : B.hom(out.obj_base[i], out.obj_base[j])) {
        bool maps = true;
        for (int x = 0; x < E.object_count() && maps; ++x)
          for (int g : out.obj_data[i].members[x])
            if (!out.obj_data[j].contains(x, B.compose(f, g))) {
              maps = false;
              break;
            }
        if (!maps) continue;
        std::string nm;
        if (i == j && B.is_identity(f)) {
          nm = "id_F" + std::to_string(i) + "@" + B.object_name(out.obj_base[i]);
        } else {
          nm = B.morphism_name(f) + ":" + std::to_string(i) + ">" + std::to_string(j);
        }
        bld.add_morphism_idx(nm, i, j);
        out.mor_f.push_back(f);
        msrc.push_back(i);
        mdst.push_back(j);
        require_within(out.mor_f.size(), lim, "almost_structure_category");
      }
  bld.complete_identities();
  const int M = static_cast<int>(out.mor_f.size());
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      if (mdst[a] != msrc[b]) continue;
      int c = B.compose(out.mor_f[b], out.mor_f[a]);
      int found = -1;
      for (int k = 0; k < M; ++k)
        if (msrc[k] == msrc[a] && mdst[k] == mdst[b] && out.mor_f[k] == c) {
          found = k;
          break;
        }
      if (found < 0) throw spec_error("almost_structure_category: composite missing");
      bld.set_compose_idx(b, a, found);
    }
  out.cat = bld.build();
  out.proj.name = "pA";
  out.proj.src = out.cat;
  out.proj.dst = p.p.dst;
  out.proj.omap = out.obj_base;
  out.proj.mmap = out.mor_f;
  return out;
}

ConcreteCategory make_concrete(FinSetCat sc, const Limits& lim) {
  const FinCat& c = *sc.cat;
  require_within(c.morphism_count(), lim, "make_concrete");
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      const auto& hs = c.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (sc.func[hs[i]] == sc.func[hs[j]])
            throw spec_error("make_concrete: underlying data is not faithful");
    }
  ConcreteCategory out{std::move(sc), {}};
  out.cart = sets_cartesian_context(out.sets, lim);
  return out;
}

bool is_generalized_element(const ConcreteCategory& C, int Z, int X, int Y,
                            const GeneralizedElement& f) {
  const FinCat& c = C.cat();
  if (!C.cart.has_product(Z, X))
    throw spec_error("generalized elements: missing product witness for (" + c.object_name(Z) +
                     "," + c.object_name(X) + ")");
  const auto& w = C.cart.prod(Z, X);
  const auto& p1 = C.sets.func[w.pi1];
  const auto& p2 = C.sets.func[w.pi2];
  const int nw = static_cast<int>(C.sets.elements[w.apex].size());
  std::vector<int> uncurried(nw);
  for (int i = 0; i < nw; ++i) uncurried[i] = C.sets.func[f[p1[i]]][p2[i]];
  for (int h : c.hom(w.apex, Y))
    if (C.sets.func[h] == uncurried) return true;
  return false;
}

std::vector<GeneralizedElement> generalized_elements(const ConcreteCategory& C, int Z, int X,
                                                     int Y, const Limits& lim) {
  const FinCat& c = C.cat();
  const auto& homXY = c.hom(X, Y);
  const int nz = static_cast<int>(C.sets.elements[Z].size());
  double count = 1;
  for (int i = 0; i < nz; ++i) count *= static_cast<double>(homXY.size());
  if (count > static_cast<double>(lim.max_morphisms) * 64)
    throw guardrail_error("generalized_elements: search space too large");

  std::vector<GeneralizedElement> out;
  if (homXY.empty()) {
    if (nz == 0) out.push_back({});
    return out;
  }
  GeneralizedElement cur(nz, 0);
  while (true) {
    GeneralizedElement f(nz);
    for (int i = 0; i < nz; ++i) f[i] = homXY[cur[i]];
    if (is_generalized_element(C, Z, X, Y, f)) out.push_back(f);
    int i = nz - 1;
    while (i >= 0 && cur[i] == static_cast<int>(homXY.size()) - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

GeneralizedElement ge_restrict(const ConcreteCategory& C, int Z, int X, int Y,
                               const GeneralizedElement& f, int alpha) {
  const FinCat& c = C.cat();
  if (c.cod(alpha) != Z) throw spec_error("ge_restrict: alpha does not land in Z");
  if (!is_generalized_element(C, Z, X, Y, f))
    throw spec_error("ge_restrict: input is not a generalized element");
  const auto& a = C.sets.func[alpha];
  GeneralizedElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f[a[i]];
  if (!is_generalized_element(C, c.dom(alpha), X, Y, out))
    throw spec_error("ge_restrict: restriction failed to stay generalized");
  return out;
}

GeneralizedElement ge_compose(const ConcreteCategory& C, int W, int X, int Y, int Z,
                              const GeneralizedElement& f, const GeneralizedElement& g) {
  const FinCat& c = C.cat();
  if (!is_generalized_element(C, W, Y, Z, f) || !is_generalized_element(C, W, X, Y, g))
    throw spec_error("ge_compose: inputs are not generalized elements");
  GeneralizedElement out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = c.compose(f[i], g[i]);
    if (out[i] < 0) throw spec_error("ge_compose: family is not composable");
  }
  return out;
}

SetPresheaf ge_presheaf(const ConcreteCategory& C, int X, int Y, const Limits& lim) {
  const FinCat& c = C.cat();
  SetPresheaf P;
  P.name = "G(|-|,hom(" + c.object_name(X) + "," + c.object_name(Y) + "))";
  P.base = C.sets.cat;
  P.value.resize(c.object_count());
  P.restr.resize(c.morphism_count());
  std::vector<std::vector<GeneralizedElement>> ges(c.object_count());
  for (int z = 0; z < c.object_count(); ++z) {
    ges[z] = generalized_elements(C, z, X, Y, lim);
    for (std::size_t k = 0; k < ges[z].size(); ++k) {
      std::string nm = "g";
      for (int m : ges[z][k]) nm += "_" + std::to_string(m);
      P.value[z].push_back(nm);
    }
  }
  for (int alpha = 0; alpha < c.morphism_count(); ++alpha) {
    int Zp = c.dom(alpha), Z = c.cod(alpha);
    P.restr[alpha].resize(ges[Z].size());
    for (std::size_t e = 0; e < ges[Z].size(); ++e) {
      auto restricted = ge_restrict(C, Z, X, Y, ges[Z][e], alpha);
      int pos = -1;
      for (std::size_t k = 0; k < ges[Zp].size(); ++k)
        if (ges[Zp][k] == restricted) pos = static_cast<int>(k);
      if (pos < 0) throw spec_error("ge_presheaf: restricted element missing");
      P.restr[alpha][e] = pos;
    }
  }
  return P;
}

YonedaExtension yoneda_extend(const FunctorData& F, const FinSetCat& target_sets,
                              const SetPresheaf& P, const Limits& lim) {
  if (F.src.get() != P.base.get()) throw spec_error("yoneda_extend: presheaf is not on F's source");
  if (F.dst.get() != target_sets.cat.get())
    throw spec_error("yoneda_extend: target sets do not match F's codomain");
  YonedaExtension out;
  out.elements = category_of_elements(P, lim);
  SetDiagram D;
  D.index = out.elements.cat;
  for (int i = 0; i < out.elements.cat->object_count(); ++i)
    D.card.push_back(
        static_cast<int>(target_sets.elements[F.omap[out.elements.el_obj[i]]].size()));
  for (int m = 0; m < out.elements.cat->morphism_count(); ++m)
    D.arrow_fn.push_back(target_sets.func[F.mmap[out.elements.mor_f[m]]]);
  out.colimit = set_diagram_colimit(D);
  for (int k = 0; k < out.colimit.classes; ++k) out.class_names.push_back("c" + std::to_string(k));
  return out;
}

}  // namespace catspec
