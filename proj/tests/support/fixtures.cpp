#include "support/fixtures.hpp"

namespace catspec::fixtures {

FunctorData inclusion_by_name(CatPtr sub, CatPtr big, const std::string& name) {
  FunctorData F;
  F.name = name;
  F.src = sub;
  F.dst = big;
  F.omap.resize(sub->object_count());
  F.mmap.resize(sub->morphism_count());
  for (int x = 0; x < sub->object_count(); ++x) F.omap[x] = big->object(sub->object_name(x));
  for (int m = 0; m < sub->morphism_count(); ++m) F.mmap[m] = big->morphism(sub->morphism_name(m));
  return F;
}

FunctorData cod_functor(const ArrowCategory& arr) {
  FunctorData F;
  F.name = "cod";
  F.src = arr.cat;
  F.dst = arr.base;
  F.omap.resize(arr.cat->object_count());
  F.mmap = arr.square_v;
  for (int i = 0; i < arr.cat->object_count(); ++i) F.omap[i] = arr.base->cod(arr.object_mor[i]);
  return F;
}

FunctorData dom_functor(const ArrowCategory& arr) {
  FunctorData F;
  F.name = "dom";
  F.src = arr.cat;
  F.dst = arr.base;
  F.omap.resize(arr.cat->object_count());
  F.mmap = arr.square_u;
  for (int i = 0; i < arr.cat->object_count(); ++i) F.omap[i] = arr.base->dom(arr.object_mor[i]);
  return F;
}

FiberedFunctor group_action_covering(int n, int k) {
  if (n % k != 0) throw spec_error("group_action_covering: k must divide n");
  auto base = cyclic_group_category(n);
  FinCatBuilder b("Cov" + std::to_string(n) + "_" + std::to_string(k));
  for (int i = 0; i < k; ++i) b.add_object("x" + std::to_string(i));
  std::vector<std::vector<int>> t(k, std::vector<int>(n, -1));
  for (int i = 0; i < k; ++i)
    for (int g = 0; g < n; ++g) {
      std::string nm = g == 0 ? ("id_x" + std::to_string(i))
                              : ("t" + std::to_string(i) + "_g" + std::to_string(g));
      t[i][g] = b.add_morphism(nm, "x" + std::to_string(i), "x" + std::to_string((i + g) % k));
      if (g == 0) b.set_identity("x" + std::to_string(i), nm);
    }
  b.complete_identities();
  for (int i = 0; i < k; ++i)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        b.set_compose_idx(t[(i + g) % k][h], t[i][g], t[i][(g + h) % n]);
  auto total = b.build();

  FunctorData p;
  p.name = "cover" + std::to_string(n) + "_" + std::to_string(k);
  p.src = total;
  p.dst = base;
  p.omap.assign(k, 0);
  p.mmap.resize(total->morphism_count());
  for (int i = 0; i < k; ++i)
    for (int g = 0; g < n; ++g)
      p.mmap[t[i][g]] = g == 0 ? base->identity(0) : base->morphism("g" + std::to_string(g));
  return make_fibered(std::move(p));
}

FiberedFunctor discrete_over_two() {
  auto d = discrete_category("d2", {"a", "b"});
  auto two = walking_arrow();
  FunctorData p;
  p.name = "disc2two";
  p.src = d;
  p.dst = two;
  p.omap = {two->object("o0"), two->object("o1")};
  p.mmap = {two->identity(two->object("o0")), two->identity(two->object("o1"))};
  return make_fibered(std::move(p));
}

}  // namespace catspec::fixtures
