#include "catspec/presheaf.hpp"

#include <algorithm>
#include <numeric>

namespace catspec {

int SetPresheaf::element(int obj, const std::string& e) const {
  const auto& v = value[obj];
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] == e) return i;
  throw spec_error(name + ": unknown element '" + e + "'");
}

ValidationReport validate_presheaf(const SetPresheaf& P) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg) {
    r.violations.push_back({std::move(code), std::move(msg), {}});
  };
  const FinCat& B = *P.base;
  if (static_cast<int>(P.value.size()) != B.object_count() ||
      static_cast<int>(P.restr.size()) != B.morphism_count()) {
    add("total", P.name + ": value/restr not total");
    return r;
  }
  for (int f = 0; f < B.morphism_count(); ++f) {
    if (static_cast<int>(P.restr[f].size()) != static_cast<int>(P.value[B.cod(f)].size())) {
      add("total", P.name + ": restriction along " + B.morphism_name(f) + " has wrong arity");
      return r;
    }
    for (int v : P.restr[f])
      if (v < 0 || v >= static_cast<int>(P.value[B.dom(f)].size())) {
        add("range", P.name + ": restriction along " + B.morphism_name(f) + " is out of range");
        return r;
      }
  }
  for (int x = 0; x < B.object_count(); ++x) {
    const auto& idr = P.restr[B.identity(x)];
    for (int e = 0; e < static_cast<int>(idr.size()); ++e)
      if (idr[e] != e) {
        add("identity", P.name + ": identity restriction at " + B.object_name(x) + " is not id");
        break;
      }
  }
  for (int f = 0; f < B.morphism_count(); ++f)
    for (int g : B.out_of(B.cod(f))) {
      int gf = B.compose(g, f);
      for (int e = 0; e < static_cast<int>(P.value[B.cod(g)].size()); ++e)
        if (P.restr[gf][e] != P.restr[f][P.restr[g][e]]) {
          add("functoriality", P.name + ": restr(" + B.morphism_name(g) + "∘" +
                                   B.morphism_name(f) + ") != restr(f)∘restr(g)");
          break;
        }
    }
  return r;
}

SetPresheaf representable_presheaf(CatPtr c, int C) {
  SetPresheaf P;
  P.name = "y_" + c->object_name(C);
  P.base = c;
  P.value.resize(c->object_count());
  P.restr.resize(c->morphism_count());
  std::vector<std::vector<int>> ids(c->object_count());
  for (int x = 0; x < c->object_count(); ++x) {
    for (int m : c->hom(x, C)) {
      ids[x].push_back(m);
      P.value[x].push_back(c->morphism_name(m));
    }
  }
  for (int f = 0; f < c->morphism_count(); ++f) {
    const auto& src = ids[c->cod(f)];
    P.restr[f].resize(src.size());
    for (std::size_t e = 0; e < src.size(); ++e) {
      int composed = c->compose(src[e], f);
      const auto& tgt = ids[c->dom(f)];
      int pos = -1;
      for (std::size_t k = 0; k < tgt.size(); ++k)
        if (tgt[k] == composed) pos = static_cast<int>(k);
      P.restr[f][e] = pos;
    }
  }
  return P;
}

SetPresheaf terminal_presheaf(CatPtr c) {
  SetPresheaf P;
  P.name = "terminal";
  P.base = c;
  P.value.assign(c->object_count(), {"*"});
  P.restr.assign(c->morphism_count(), {0});
  return P;
}

SetPresheaf empty_presheaf(CatPtr c) {
  SetPresheaf P;
  P.name = "empty";
  P.base = c;
  P.value.assign(c->object_count(), {});
  P.restr.assign(c->morphism_count(), {});
  return P;
}

SetPresheaf coproduct_presheaf(const SetPresheaf& a, const SetPresheaf& b) {
  if (a.base.get() != b.base.get()) throw spec_error("coproduct_presheaf: different bases");
  SetPresheaf P;
  P.name = a.name + "+" + b.name;
  P.base = a.base;
  const FinCat& B = *a.base;
  P.value.resize(B.object_count());
  P.restr.resize(B.morphism_count());
  for (int x = 0; x < B.object_count(); ++x) {
    for (const auto& e : a.value[x]) P.value[x].push_back("l_" + e);
    for (const auto& e : b.value[x]) P.value[x].push_back("r_" + e);
  }
  for (int f = 0; f < B.morphism_count(); ++f) {
    int na = static_cast<int>(a.value[B.dom(f)].size());
    for (int e : a.restr[f]) P.restr[f].push_back(e);
    for (int e : b.restr[f]) P.restr[f].push_back(na + e);
  }
  return P;
}

ValidationReport validate_presheaf_map(const PresheafMap& t) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg) {
    r.violations.push_back({std::move(code), std::move(msg), {}});
  };
  if (t.src.base.get() != t.dst.base.get()) {
    add("base", t.name + ": presheaves on different bases");
    return r;
  }
  const FinCat& B = *t.src.base;
  if (static_cast<int>(t.component.size()) != B.object_count()) {
    add("total", t.name + ": components not total");
    return r;
  }
  for (int x = 0; x < B.object_count(); ++x) {
    if (t.component[x].size() != t.src.value[x].size()) {
      add("total", t.name + ": component at " + B.object_name(x) + " has wrong arity");
      return r;
    }
    for (int v : t.component[x])
      if (v < 0 || v >= static_cast<int>(t.dst.value[x].size())) {
        add("range", t.name + ": component at " + B.object_name(x) + " out of range");
        return r;
      }
  }
  for (int f = 0; f < B.morphism_count(); ++f) {
    int X = B.dom(f), Y = B.cod(f);
    for (int e = 0; e < static_cast<int>(t.src.value[Y].size()); ++e) {
      if (t.component[X][t.src.restr[f][e]] != t.dst.restr[f][t.component[Y][e]]) {
        add("naturality", t.name + ": square at " + B.morphism_name(f) + " fails");
        break;
      }
    }
  }
  return r;
}

ElementsCategory category_of_elements(const SetPresheaf& P, const Limits& lim) {
  const FinCat& B = *P.base;
  ElementsCategory out;
  FinCatBuilder b("el_" + P.name);
  for (int x = 0; x < B.object_count(); ++x) {
    for (int e = 0; e < static_cast<int>(P.value[x].size()); ++e) {
      b.add_object("(" + B.object_name(x) + ";" + P.value[x][e] + ")");
      out.el_obj.push_back(x);
      out.el_elem.push_back(e);
    }
  }
  std::vector<int> msrc, mdst;
  const int n = static_cast<int>(out.el_obj.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int f : B.hom(out.el_obj[i], out.el_obj[j])) {
        if (P.restr[f][out.el_elem[j]] != out.el_elem[i]) continue;
        std::string nm;
        if (i == j && B.is_identity(f)) {
          nm = "id_(" + B.object_name(out.el_obj[i]) + ";" +
               P.value[out.el_obj[i]][out.el_elem[i]] + ")";
        } else {
          nm = B.morphism_name(f) + ":" + std::to_string(i) + ">" + std::to_string(j);
        }
        b.add_morphism_idx(nm, i, j);
        out.mor_f.push_back(f);
        msrc.push_back(i);
        mdst.push_back(j);
        require_within(out.mor_f.size(), lim, "category_of_elements");
      }
  b.complete_identities();
  const int M = static_cast<int>(out.mor_f.size());
  for (int f = 0; f < M; ++f)
    for (int g = 0; g < M; ++g) {
      if (mdst[f] != msrc[g]) continue;
      int c = B.compose(out.mor_f[g], out.mor_f[f]);
      int gf = -1;
      for (int k = 0; k < M; ++k)
        if (msrc[k] == msrc[f] && mdst[k] == mdst[g] && out.mor_f[k] == c) {
          gf = k;
          break;
        }
      if (gf < 0) throw spec_error("category_of_elements: composite missing");
      b.set_compose_idx(g, f, gf);
    }
  out.cat = b.build();
  out.proj.name = "pi";
  out.proj.src = out.cat;
  out.proj.dst = P.base;
  out.proj.omap = out.el_obj;
  out.proj.mmap = out.mor_f;
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SetColimit set_diagram_colimit(const SetDiagram& D) {
  const FinCat& J = *D.index;
  std::vector<int> offset(J.object_count() + 1, 0);
  for (int x = 0; x < J.object_count(); ++x) offset[x + 1] = offset[x] + D.card[x];
  UnionFind uf(offset.back());
  for (int m = 0; m < J.morphism_count(); ++m)
    for (int e = 0; e < D.card[J.dom(m)]; ++e)
      uf.unite(offset[J.dom(m)] + e, offset[J.cod(m)] + D.arrow_fn[m][e]);

  SetColimit out;
  std::vector<int> rep(offset.back(), -1);
  for (int i = 0; i < offset.back(); ++i) {
    int r = uf.find(i);
    if (rep[r] < 0) rep[r] = out.classes++;
  }
  out.inj.resize(J.object_count());
  for (int x = 0; x < J.object_count(); ++x) {
    out.inj[x].resize(D.card[x]);
    for (int e = 0; e < D.card[x]; ++e) out.inj[x][e] = rep[uf.find(offset[x] + e)];
  }
  return out;
}

DiagonalResult fill_diagonal(const PresheafMap& top, const PresheafMap& left,
                             const PresheafMap& right, const PresheafMap& bottom) {
  DiagonalResult out;
  const FinCat& B = *top.src.base;
  for (int x = 0; x < B.object_count(); ++x)
    for (int a = 0; a < static_cast<int>(top.src.value[x].size()); ++a)
      if (right.component[x][top.component[x][a]] != bottom.component[x][left.component[x][a]]) {
        out.failed_hypothesis = "commutes";
        out.witness = {B.object_name(x), top.src.value[x][a]};
        return out;
      }
  for (int x = 0; x < B.object_count(); ++x) {
    std::vector<bool> hit(top.dst.value[x].size(), false);
    for (int v : top.component[x]) hit[v] = true;
    for (int b = 0; b < static_cast<int>(hit.size()); ++b)
      if (!hit[b]) {
        out.failed_hypothesis = "top-surjective";
        out.witness = {B.object_name(x), top.dst.value[x][b]};
        return out;
      }
  }
  for (int x = 0; x < B.object_count(); ++x) {
    std::vector<int> seen(bottom.dst.value[x].size(), -1);
    for (int c = 0; c < static_cast<int>(bottom.component[x].size()); ++c) {
      int v = bottom.component[x][c];
      if (seen[v] >= 0) {
        out.failed_hypothesis = "bottom-injective";
        out.witness = {B.object_name(x), bottom.src.value[x][seen[v]], bottom.src.value[x][c]};
        return out;
      }
      seen[v] = c;
    }
  }

  PresheafMap d;
  d.name = "diagonal";
  d.src = top.dst;
  d.dst = bottom.src;
  d.component.resize(B.object_count());
  for (int x = 0; x < B.object_count(); ++x) {
    d.component[x].assign(top.dst.value[x].size(), -1);
    for (int a = 0; a < static_cast<int>(top.src.value[x].size()); ++a) {
      int b = top.component[x][a];
      int c = left.component[x][a];
      d.component[x][b] = c;
    }
  }
  auto vr = validate_presheaf_map(d);
  if (!vr.ok()) {
    out.failed_hypothesis = "naturality";
    out.witness = {vr.violations.front().message};
    return out;
  }
  out.ok = true;
  out.diagonal = std::move(d);
  return out;
}

}  // namespace catspec
