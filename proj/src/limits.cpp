#include "catspec/limits.hpp"

#include <algorithm>
#include <functional>

namespace catspec {

Diagram product_diagram(int x, int y) {
  Diagram d;
  d.nodes = {x, y};
  return d;
}

Diagram pullback_diagram(const FinCat& c, int f, int g) {
  if (c.cod(f) != c.cod(g)) throw spec_error("pullback_diagram: not a cospan");
  Diagram d;
  d.nodes = {c.dom(f), c.dom(g), c.cod(f)};
  d.edges = {{0, 2, f}, {1, 2, g}};
  return d;
}

Diagram pushout_diagram(const FinCat& c, int f, int g) {
  if (c.dom(f) != c.dom(g)) throw spec_error("pushout_diagram: not a span");
  Diagram d;
  d.nodes = {c.cod(f), c.cod(g), c.dom(f)};
  d.edges = {{2, 0, f}, {2, 1, g}};
  return d;
}

Diagram coequalizer_diagram(const FinCat& c, int f, int g) {
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
    throw spec_error("coequalizer_diagram: not a parallel pair");
  Diagram d;
  d.nodes = {c.dom(f), c.cod(f)};
  d.edges = {{0, 1, f}, {0, 1, g}};
  return d;
}

namespace {

void check_diagram(const FinCat& c, const Diagram& d) {
  for (int n : d.nodes)
    if (n < 0 || n >= c.object_count()) throw spec_error("find_limits: diagram references unknown object");
  for (const auto& e : d.edges) {
    if (e.from < 0 || e.from >= static_cast<int>(d.nodes.size()) || e.to < 0 ||
        e.to >= static_cast<int>(d.nodes.size()))
      throw spec_error("find_limits: edge endpoints out of range");
    if (e.mor < 0 || e.mor >= c.morphism_count())
      throw spec_error("find_limits: diagram references unknown morphism");
    if (c.dom(e.mor) != d.nodes[e.from] || c.cod(e.mor) != d.nodes[e.to])
      throw spec_error("find_limits: edge morphism does not match its nodes");
  }
}

// Enumerates (co)cones with the given apex.  legs[i] is a morphism apex->node_i
// (cone) or node_i->apex (cocone).
void enumerate_cones(const FinCat& c, const Diagram& d, int apex, bool colimit,
                     const std::function<void(const std::vector<int>&)>& yield) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<int> legs(n, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      yield(legs);
      return;
    }
    const auto& cands = colimit ? c.hom(d.nodes[i], apex) : c.hom(apex, d.nodes[i]);
    for (int cand : cands) {
      legs[i] = cand;
      bool ok = true;
      for (const auto& e : d.edges) {
        if (e.from > i || e.to > i) continue;
        if (legs[e.from] < 0 || legs[e.to] < 0) continue;
        if (colimit) {
          if (c.compose(legs[e.to], e.mor) != legs[e.from]) ok = false;
        } else {
          if (c.compose(e.mor, legs[e.from]) != legs[e.to]) ok = false;
        }
        if (!ok) break;
      }
      if (ok) rec(i + 1);
    }
    legs[i] = -1;
  };
  rec(0);
}

int count_mediators(const FinCat& c, const Diagram& d, bool colimit, int apex,
                    const std::vector<int>& legs, int apex2, const std::vector<int>& legs2,
                    int* found) {
  int count = 0;
  const auto& cands = colimit ? c.hom(apex, apex2) : c.hom(apex2, apex);
  for (int m : cands) {
    bool ok = true;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      int lhs = colimit ? c.compose(m, legs[i]) : c.compose(legs[i], m);
      if (lhs != legs2[i]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (found) *found = m;
      if (++count > 1) return count;
    }
  }
  return count;
}

}  // namespace

std::optional<int> mediating_arrow(const FinCat& c, const LimitWitness& w, const Diagram& d,
                                   int apex2, const std::vector<int>& legs2) {
  int found = -1;
  int n = count_mediators(c, d, w.colimit, w.apex, w.legs, apex2, legs2, &found);
  if (n != 1) return std::nullopt;
  return found;
}

std::vector<LimitWitness> find_limits(const FinCat& c, LimitKind kind, const Diagram& boundary,
                                      const Limits& lim) {
  require_within(c.morphism_count(), lim, "find_limits");
  check_diagram(c, boundary);
  const bool colimit =
      kind == LimitKind::Pushout || kind == LimitKind::Coequalizer || kind == LimitKind::Colimit;

  std::vector<LimitWitness> out;
  for (int apex = 0; apex < c.object_count(); ++apex) {
    enumerate_cones(c, boundary, apex, colimit, [&](const std::vector<int>& legs) {
      // universality against every competitor cone
      bool universal = true;
      for (int apex2 = 0; apex2 < c.object_count() && universal; ++apex2) {
        enumerate_cones(c, boundary, apex2, colimit, [&](const std::vector<int>& legs2) {
          if (!universal) return;
          if (count_mediators(c, boundary, colimit, apex, legs, apex2, legs2, nullptr) != 1)
            universal = false;
        });
      }
      if (universal) out.push_back({kind, colimit, apex, legs});
    });
  }
  return out;
}

const ProductWitness& CartesianContext::prod(int x, int y) const {
  auto it = product.find({x, y});
  if (it == product.end())
    throw spec_error(cat->name() + ": no product witness for (" + cat->object_name(x) + "," +
                     cat->object_name(y) + ")");
  return it->second;
}

int CartesianContext::bang_of(int x) const {
  if (terminal < 0) throw spec_error(cat->name() + ": no terminal witness");
  return bang[x];
}

int CartesianContext::tuple(int f, int g) const {
  const FinCat& c = *cat;
  if (c.dom(f) != c.dom(g)) throw spec_error("tuple: domains differ");
  const ProductWitness& w = prod(c.cod(f), c.cod(g));
  if (sets) {
    const auto& ff = sets->func[f];
    const auto& gg = sets->func[g];
    // strides recorded at witness construction
    std::vector<int> table(ff.size());
    for (std::size_t i = 0; i < ff.size(); ++i) table[i] = ff[i] * w.stride1 + gg[i] * w.stride2;
    int m = sets->by_table(c.dom(f), w.apex, table);
    if (m < 0)
      throw spec_error(cat->name() + ": mediating arrow missing for tuple of " +
                       c.morphism_name(f) + "," + c.morphism_name(g));
    return m;
  }
  int found = -1, count = 0;
  for (int h : c.hom(c.dom(f), w.apex)) {
    if (c.compose(w.pi1, h) == f && c.compose(w.pi2, h) == g) {
      found = h;
      ++count;
    }
  }
  if (count != 1)
    throw spec_error(cat->name() + ": tuple mediator count " + std::to_string(count) + " for (" +
                     c.morphism_name(f) + "," + c.morphism_name(g) + ")");
  return found;
}

CartesianContext build_cartesian_context(CatPtr cat, const Limits& lim) {
  CartesianContext ctx;
  ctx.cat = cat;
  Diagram empty;
  auto terms = find_limits(*cat, LimitKind::Terminal, empty, lim);
  if (!terms.empty()) {
    ctx.terminal = terms.front().apex;
    ctx.bang.assign(cat->object_count(), -1);
    for (int x = 0; x < cat->object_count(); ++x) {
      const auto& hs = cat->hom(x, ctx.terminal);
      ctx.bang[x] = hs.empty() ? -1 : hs.front();
    }
  }
  for (int x = 0; x < cat->object_count(); ++x)
    for (int y = 0; y < cat->object_count(); ++y) {
      auto ws = find_limits(*cat, LimitKind::Product, product_diagram(x, y), lim);
      if (!ws.empty())
        ctx.product[{x, y}] = {ws.front().apex, ws.front().legs[0], ws.front().legs[1], -1, -1};
    }
  return ctx;
}

CartesianContext sets_cartesian_context(const FinSetCat& sc, const Limits& lim) {
  require_within(sc.cat->morphism_count(), lim, "sets_cartesian_context");
  const FinCat& c = *sc.cat;
  CartesianContext ctx;
  ctx.cat = sc.cat;
  ctx.sets = &sc;

  for (int w = 0; w < c.object_count() && ctx.terminal < 0; ++w) {
    if (sc.elements[w].size() != 1) continue;
    bool ok = true;
    for (int x = 0; x < c.object_count() && ok; ++x)
      if (c.hom(x, w).size() != 1) ok = false;
    if (ok) ctx.terminal = w;
  }
  if (ctx.terminal >= 0) {
    ctx.bang.assign(c.object_count(), -1);
    for (int x = 0; x < c.object_count(); ++x) ctx.bang[x] = c.hom(x, ctx.terminal).front();
  }

  for (int x = 0; x < c.object_count(); ++x) {
    const int nx = static_cast<int>(sc.elements[x].size());
    for (int y = 0; y < c.object_count(); ++y) {
      const int ny = static_cast<int>(sc.elements[y].size());
      bool done = false;
      for (int w = 0; w < c.object_count() && !done; ++w) {
        if (static_cast<int>(sc.elements[w].size()) != nx * ny) continue;
        // two canonical pairings: index = i*ny + j and index = j*nx + i
        const int strides[2][2] = {{ny, 1}, {1, nx}};
        for (int s = 0; s < 2 && !done; ++s) {
          const int s1 = strides[s][0], s2 = strides[s][1];
          std::vector<int> t1(nx * ny), t2(nx * ny);
          for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) {
              t1[i * s1 + j * s2] = i;
              t2[i * s1 + j * s2] = j;
            }
          int p1 = sc.by_table(w, x, t1);
          int p2 = sc.by_table(w, y, t2);
          if (p1 < 0 || p2 < 0) continue;
          // universality: every cone pairs to a present mediator
          bool universal = true;
          for (int a = 0; a < c.object_count() && universal; ++a) {
            for (int f : c.hom(a, x)) {
              for (int g : c.hom(a, y)) {
                std::vector<int> table(sc.func[f].size());
                for (std::size_t i = 0; i < table.size(); ++i)
                  table[i] = sc.func[f][i] * s1 + sc.func[g][i] * s2;
                if (sc.by_table(a, w, table) < 0) {
                  universal = false;
                  break;
                }
              }
              if (!universal) break;
            }
          }
          if (universal) {
            ctx.product[{x, y}] = {w, p1, p2, s1, s2};
            done = true;
          }
        }
      }
    }
  }
  return ctx;
}

}  // namespace catspec
