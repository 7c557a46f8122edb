#include "catspec/builders.hpp"

#include <algorithm>
#include <map>

namespace catspec {

int FinSetCat::element_index(int obj, const std::string& e) const {
  const auto& v = elements[obj];
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] == e) return i;
  throw spec_error(cat->name() + ": unknown element '" + e + "'");
}

std::vector<int> FinSetCat::table_compose(int g, int f) const {
  std::vector<int> out(func[f].size());
  for (std::size_t i = 0; i < func[f].size(); ++i) out[i] = func[g][func[f][i]];
  return out;
}

std::string FinSetCat::table_key(int dom, int cod, const std::vector<int>& table) {
  std::string key = std::to_string(dom) + "|" + std::to_string(cod) + "|";
  for (int v : table) {
    key += static_cast<char>('A' + (v & 31));
    if (v >= 32) key += std::to_string(v);
  }
  return key;
}

int FinSetCat::by_table(int dom, int cod, const std::vector<int>& table) const {
  auto it = table_index.find(table_key(dom, cod, table));
  return it == table_index.end() ? -1 : it->second;
}

void FinSetCat::build_table_index() {
  table_index.clear();
  for (int m = 0; m < cat->morphism_count(); ++m)
    table_index[table_key(cat->dom(m), cat->cod(m), func[m])] = m;
}

CatPtr walking_arrow() {
  FinCatBuilder b("two");
  b.add_object("o0");
  b.add_object("o1");
  b.add_morphism("u", "o0", "o1");
  return b.build();
}

CatPtr one_object_category(const std::string& obj) {
  FinCatBuilder b("one");
  b.add_object(obj);
  return b.build();
}

CatPtr discrete_category(const std::string& name, const std::vector<std::string>& objects) {
  FinCatBuilder b(name);
  for (const auto& o : objects) b.add_object(o);
  return b.build();
}

CatPtr chaotic_category(const std::string& name, const std::vector<std::string>& objects) {
  FinCatBuilder b(name);
  for (const auto& o : objects) b.add_object(o);
  const int n = static_cast<int>(objects.size());
  // k_<x>_<y> is the unique arrow x -> y; identities double as k_x_x.
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      arrow[x][y] = b.add_morphism("k_" + objects[x] + "_" + objects[y], objects[x], objects[y]);
    }
  }
  b.complete_identities();
  for (int x = 0; x < n; ++x) arrow[x][x] = b.morphism_index("id_" + objects[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) b.set_compose_idx(arrow[y][z], arrow[x][y], arrow[x][z]);
  return b.build();
}

CatPtr poset_category(const std::string& name, const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& leq) {
  const int n = static_cast<int>(elements.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[elements[i]] = i;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : leq) {
    auto a = idx.find(x), c = idx.find(y);
    if (a == idx.end() || c == idx.end()) throw spec_error(name + ": unknown poset element");
    le[a->second][c->second] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;

  FinCatBuilder b(name);
  for (const auto& e : elements) b.add_object(e);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (le[x][y] && x != y)
        arrow[x][y] = b.add_morphism("le_" + elements[x] + "_" + elements[y], elements[x], elements[y]);
  b.complete_identities();
  for (int x = 0; x < n; ++x) arrow[x][x] = b.morphism_index("id_" + elements[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (le[x][y] && le[y][z]) b.set_compose_idx(arrow[y][z], arrow[x][y], arrow[x][z]);
  return b.build();
}

CatPtr cyclic_group_category(int n, const std::string& name) {
  FinCatBuilder b(name.empty() ? ("BZ" + std::to_string(n)) : name);
  b.add_object("b");
  std::vector<int> g(n);
  for (int i = 1; i < n; ++i) g[i] = b.add_morphism("g" + std::to_string(i), "b", "b");
  b.complete_identities();
  g[0] = b.morphism_index("id_b");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_compose_idx(g[i], g[j], g[(i + j) % n]);
  return b.build();
}

namespace {

std::string word_of(const std::vector<int>& images) {
  std::string w;
  for (int v : images) w += static_cast<char>('0' + v);
  return w;
}

// Enumerates all functions {0..m-1} -> {0..k-1} in lexicographic order.
std::vector<std::vector<int>> all_functions(int m, int k) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  if (k == 0) return out;
  std::vector<int> cur(m, 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == k - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

bool is_identity_word(const std::vector<int>& w) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] != i) return false;
  return true;
}

}  // namespace

FinSetCat finset_skeleton(int n, const std::string& name) {
  FinSetCat sc;
  FinCatBuilder b(name.empty() ? ("FinSet" + std::to_string(n)) : name);
  for (int k = 0; k <= n; ++k) b.add_object("s" + std::to_string(k));

  std::vector<std::vector<int>> func;
  std::vector<std::string> names;
  // map (dom,cod,word) -> morphism index, for composing
  std::map<std::tuple<int, int, std::string>, int> by_word;

  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& w : all_functions(m, k)) {
        std::string nm;
        if (m == k && is_identity_word(w)) {
          nm = "id_s" + std::to_string(m);
        } else {
          nm = "m" + std::to_string(m) + "_" + std::to_string(k) + "_" + word_of(w);
        }
        int idx = b.add_morphism(nm, "s" + std::to_string(m), "s" + std::to_string(k));
        if (m == k && is_identity_word(w)) b.set_identity("s" + std::to_string(m), nm);
        if (idx != static_cast<int>(func.size())) throw spec_error("finset_skeleton: index drift");
        func.push_back(w);
        names.push_back(nm);
        by_word[{m, k, word_of(w)}] = idx;
      }
    }
  }
  b.complete_identities();
  // Composition by table composition; endpoints recomputed in enumeration order.
  std::vector<int> dom(func.size()), cod(func.size());
  {
    int idx = 0;
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= n; ++k)
        for (std::size_t c = all_functions(m, k).size(); c > 0; --c) {
          dom[idx] = m;
          cod[idx] = k;
          ++idx;
        }
  }
  for (int f = 0; f < static_cast<int>(func.size()); ++f) {
    for (int g = 0; g < static_cast<int>(func.size()); ++g) {
      if (cod[f] != dom[g]) continue;
      std::vector<int> comp(func[f].size());
      for (std::size_t i = 0; i < func[f].size(); ++i) comp[i] = func[g][func[f][i]];
      b.set_compose_idx(g, f, by_word.at({dom[f], cod[g], word_of(comp)}));
    }
  }
  sc.cat = b.build();
  sc.func = std::move(func);
  sc.elements.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    for (int e = 0; e < k; ++e) sc.elements[k].push_back("e" + std::to_string(e));
  sc.build_table_index();
  return sc;
}

CatPtr finset_injections(const FinSetCat& ambient) {
  const FinCat& c = *ambient.cat;
  FinCatBuilder b(c.name() + "_inj");
  for (int x = 0; x < c.object_count(); ++x) b.add_object(c.object_name(x));
  std::vector<int> keep;  // ambient morphism index per new index
  std::vector<int> newidx(c.morphism_count(), -1);
  for (int m = 0; m < c.morphism_count(); ++m) {
    const auto& w = ambient.func[m];
    std::vector<bool> seen(ambient.elements[c.cod(m)].size(), false);
    bool inj = true;
    for (int v : w) {
      if (seen[v]) {
        inj = false;
        break;
      }
      seen[v] = true;
    }
    if (!inj) continue;
    newidx[m] = b.add_morphism(c.morphism_name(m), c.object_name(c.dom(m)), c.object_name(c.cod(m)));
    keep.push_back(m);
    if (c.is_identity(m)) b.set_identity(c.object_name(c.dom(m)), c.morphism_name(m));
  }
  b.complete_identities();
  for (int f : keep)
    for (int g : keep) {
      if (c.cod(f) != c.dom(g)) continue;
      int gf = c.compose(g, f);
      if (newidx[gf] < 0) throw spec_error("finset_injections: injections not closed under composition");
      b.set_compose_idx(newidx[g], newidx[f], newidx[gf]);
    }
  return b.build();
}

namespace {

class ArrowCompose : public ComposeBackend {
 public:
  CatPtr base;
  std::vector<int> u, v;       // per square
  std::vector<int> src, dst;   // per square: base morphism ("object")
  std::unordered_map<std::uint64_t, int> lookup;  // (src,dst,u,v) -> square

  std::uint64_t key(int a, int b, int uu, int vv) const {
    const std::uint64_t M = static_cast<std::uint64_t>(base->morphism_count());
    return ((static_cast<std::uint64_t>(a) * M + b) * M + uu) * M + vv;
  }

  int compose(int g, int f) const override {
    if (dst[f] != src[g]) return -1;
    int cu = base->compose(u[g], u[f]);
    int cv = base->compose(v[g], v[f]);
    if (cu < 0 || cv < 0) return -1;
    auto it = lookup.find(key(src[f], dst[g], cu, cv));
    return it == lookup.end() ? -1 : it->second;
  }
};

}  // namespace

ArrowCategory arrow_category(CatPtr base, const Limits& lim) {
  const FinCat& c = *base;
  ArrowCategory out;
  out.base = base;

  std::vector<std::string> objects, morphisms;
  std::vector<int> dom, cod, ident;
  for (int a = 0; a < c.morphism_count(); ++a) {
    objects.push_back("[" + c.morphism_name(a) + "]");
    out.object_mor.push_back(a);
  }
  ident.assign(objects.size(), -1);

  auto backend = std::make_shared<ArrowCompose>();
  backend->base = base;

  for (int a = 0; a < c.morphism_count(); ++a) {
    const int X = c.dom(a), Y = c.cod(a);
    for (int u = 0; u < c.morphism_count(); ++u) {
      if (c.dom(u) != X) continue;
      for (int v = 0; v < c.morphism_count(); ++v) {
        if (c.dom(v) != Y) continue;
        int va = c.compose(v, a);
        // b ranges over hom(cod u, cod v) with b∘u = v∘a
        for (int bm : c.hom(c.cod(u), c.cod(v))) {
          if (c.compose(bm, u) != va) continue;
          int idx = static_cast<int>(morphisms.size());
          morphisms.push_back("[" + c.morphism_name(u) + "|" + c.morphism_name(v) + "]:" +
                              std::to_string(a) + ">" + std::to_string(bm));
          dom.push_back(a);
          cod.push_back(bm);
          backend->u.push_back(u);
          backend->v.push_back(v);
          backend->src.push_back(a);
          backend->dst.push_back(bm);
          backend->lookup[backend->key(a, bm, u, v)] = idx;
          if (a == bm && c.is_identity(u) && c.is_identity(v)) ident[a] = idx;
          require_within(morphisms.size(), lim, "arrow_category");
        }
      }
    }
  }
  for (int a = 0; a < c.morphism_count(); ++a) {
    if (ident[a] < 0) throw spec_error("arrow_category: missing identity square");
  }
  out.square_u = backend->u;
  out.square_v = backend->v;
  out.cat = make_fincat_with_backend(c.name() + "_arrow", std::move(objects), std::move(morphisms),
                                     std::move(dom), std::move(cod), std::move(ident),
                                     std::move(backend));
  return out;
}

FinSetCat poset_concrete_category(const std::string& name, const std::vector<PosetSpec>& posets) {
  const int n = static_cast<int>(posets.size());
  // per poset: le matrix
  std::vector<std::vector<std::vector<bool>>> le(n);
  for (int p = 0; p < n; ++p) {
    const int k = static_cast<int>(posets[p].elements.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < k; ++i) idx[posets[p].elements[i]] = i;
    le[p].assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) le[p][i][i] = true;
    for (const auto& [x, y] : posets[p].leq) le[p][idx.at(x)][idx.at(y)] = true;
    for (int a = 0; a < k; ++a)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (le[p][i][a] && le[p][a][j]) le[p][i][j] = true;
  }

  FinCatBuilder b(name);
  for (const auto& ps : posets) b.add_object(ps.name);

  std::vector<std::vector<int>> func;
  std::map<std::tuple<int, int, std::string>, int> by_word;
  auto monotone = [&](int p, int q, const std::vector<int>& w) {
    const int k = static_cast<int>(posets[p].elements.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (le[p][i][j] && !le[q][w[i]][w[j]]) return false;
    return true;
  };

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (const auto& w : all_functions(static_cast<int>(posets[p].elements.size()),
                                         static_cast<int>(posets[q].elements.size()))) {
        if (!monotone(p, q, w)) continue;
        std::string nm;
        if (p == q && is_identity_word(w)) {
          nm = "id_" + posets[p].name;
        } else {
          nm = "h_" + posets[p].name + "_" + posets[q].name + "_" + word_of(w);
        }
        int idx = b.add_morphism(nm, posets[p].name, posets[q].name);
        if (p == q && is_identity_word(w)) b.set_identity(posets[p].name, nm);
        if (idx != static_cast<int>(func.size())) throw spec_error("poset_concrete_category: index drift");
        func.push_back(w);
        by_word[{p, q, word_of(w)}] = idx;
      }
    }
  }
  b.complete_identities();
  std::vector<int> dm(func.size()), cd(func.size());
  {
    int idx = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (const auto& w : all_functions(static_cast<int>(posets[p].elements.size()),
                                           static_cast<int>(posets[q].elements.size())))
          if (monotone(p, q, w)) {
            dm[idx] = p;
            cd[idx] = q;
            ++idx;
          }
  }
  for (int f = 0; f < static_cast<int>(func.size()); ++f)
    for (int g = 0; g < static_cast<int>(func.size()); ++g) {
      if (cd[f] != dm[g]) continue;
      std::vector<int> comp(func[f].size());
      for (std::size_t i = 0; i < func[f].size(); ++i) comp[i] = func[g][func[f][i]];
      b.set_compose_idx(g, f, by_word.at({dm[f], cd[g], word_of(comp)}));
    }

  FinSetCat sc;
  sc.cat = b.build();
  sc.func = std::move(func);
  sc.elements.resize(n);
  for (int p = 0; p < n; ++p) sc.elements[p] = posets[p].elements;
  sc.build_table_index();
  return sc;
}

}  // namespace catspec
