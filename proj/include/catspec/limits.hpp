#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catspec/builders.hpp"
#include "catspec/fincat.hpp"

namespace catspec {

// A finite diagram in a category: a graph whose nodes are objects and whose
// edges are labelled by morphisms (no commutativity is imposed on the shape).
struct Diagram {
  std::vector<int> nodes;
  struct Edge {
    int from, to;  // node positions
    int mor;
  };
  std::vector<Edge> edges;
};

enum class LimitKind { Terminal, Product, Pullback, Pushout, Coequalizer, Colimit, Limit };

struct LimitWitness {
  LimitKind kind;
  bool colimit;           // cocone rather than cone
  int apex;
  std::vector<int> legs;  // per diagram node
};

// All apexes+legs satisfying existence and uniqueness of mediating arrows,
// verified against every competitor (co)cone.  Raw list, no dedup up to iso.
std::vector<LimitWitness> find_limits(const FinCat& c, LimitKind kind, const Diagram& boundary,
                                      const Limits& lim = {});

// Unique mediating arrow from/to a competitor (co)cone; nullopt if the count
// is not exactly one (which find_limits witnesses never produce).
std::optional<int> mediating_arrow(const FinCat& c, const LimitWitness& w, const Diagram& d,
                                   int apex2, const std::vector<int>& legs2);

// Shape helpers.
Diagram product_diagram(int x, int y);
Diagram pullback_diagram(const FinCat& c, int f, int g);    // cospan f: X->Z, g: Y->Z
Diagram pushout_diagram(const FinCat& c, int f, int g);     // span  f: Z->X, g: Z->Y
Diagram coequalizer_diagram(const FinCat& c, int f, int g); // parallel pair

// Chosen binary products and terminal object with mediating-arrow data.
// Witnesses are the lexicographically least universal candidates, so the
// context is deterministic.  Products may be partial (pairs without a
// product in the category are simply absent).
struct ProductWitness {
  int apex, pi1, pi2;
  // Element-index strides for set-backed contexts (pair (i,j) lives at index
  // i*stride1 + j*stride2); -1 when the witness came from a generic search.
  int stride1 = -1, stride2 = -1;
};

struct CartesianContext {
  CatPtr cat;
  const FinSetCat* sets = nullptr;  // set for the table-lookup fast path
  int terminal = -1;
  std::vector<int> bang;  // per object: the arrow to the terminal
  std::map<std::pair<int, int>, ProductWitness> product;

  bool has_product(int x, int y) const { return product.count({x, y}) > 0; }
  const ProductWitness& prod(int x, int y) const;
  // ⟨f,g⟩ into prod(cod f, cod g); throws if the witness is missing.
  int tuple(int f, int g) const;
  int bang_of(int x) const;
};

// Builds the context by exhaustive search (suitable for small categories).
CartesianContext build_cartesian_context(CatPtr cat, const Limits& lim = {});

// Fast path for set-backed categories: products located by cardinality with
// row-major element pairing, mediators by table lookup, universality checked
// against every cone.  `sc` must outlive the context.
CartesianContext sets_cartesian_context(const FinSetCat& sc, const Limits& lim = {});

}  // namespace catspec
