#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catspec/fincat.hpp"

namespace catspec {

// A functor between finite categories as explicit object/morphism tables.
struct FunctorData {
  std::string name;
  CatPtr src, dst;
  std::vector<int> omap;  // per src object: dst object
  std::vector<int> mmap;  // per src morphism: dst morphism

  int ob(int x) const { return omap[x]; }
  int mor(int m) const { return mmap[m]; }
};

FunctorData identity_functor(CatPtr c);
// g∘f (apply f first).
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);
// Constant functor at an object of dst.
FunctorData constant_functor(CatPtr src, CatPtr dst, int obj, const std::string& name = "const");

// Checks totality and preservation of dom/cod, identities and composition.
ValidationReport validate_functor(const FunctorData& F);

struct NatTransData {
  std::string name;
  FunctorData srcFunctor, dstFunctor;  // parallel functors
  std::vector<int> component;          // per src object: morphism in dst
};

ValidationReport validate_nattrans(const NatTransData& t);

// Componentwise-iso natural transformations F => G, enumerated exhaustively.
std::vector<NatTransData> natural_isos(const FunctorData& F, const FunctorData& G,
                                       const Limits& lim = {});
bool naturally_isomorphic(const FunctorData& F, const FunctorData& G, const Limits& lim = {});

struct FunctorAnalysis {
  bool functorial = false;
  bool faithful = false;
  bool full = false;
  bool essentiallySurjective = false;
  bool equivalence = false;
  // Witnesses: first failure per flag (names), empty when the flag holds.
  std::vector<std::string> witness_faithful, witness_full, witness_esssurj, witness_functorial;
  // Present when equivalence holds: H with F∘H ≅ Id and H∘F ≅ Id, plus the
  // natural isos, verified componentwise.
  std::optional<FunctorData> quasi_inverse;
  std::optional<NatTransData> unit;    // Id_src => H∘F
  std::optional<NatTransData> counit;  // F∘H => Id_dst
};

// Exhaustive functor analysis; the quasi-inverse picks lexicographically
// least preimages/isos for determinism.
FunctorAnalysis analyze_functor(const FunctorData& F, const Limits& lim = {});

// Comma category (F ↓ G) for functors F: A -> C, G: B -> C.  Objects are
// triples (a, b, f: Fa -> Gb); morphisms are pairs (u, v) making the square
// commute.  Projections to A and B are returned alongside.
struct CommaCategory {
  CatPtr cat;
  FunctorData projA, projB;
  // per comma object: (a, b, f)
  std::vector<int> obj_a, obj_b, obj_f;
  // per comma morphism: (u, v)
  std::vector<int> mor_u, mor_v;
};

CommaCategory comma_category(const FunctorData& F, const FunctorData& G, const Limits& lim = {});

// Searches for an isomorphism of categories (bijective on objects and
// morphisms, strictly functorial both ways).  Returns the functor if found.
std::optional<FunctorData> find_category_isomorphism(CatPtr a, CatPtr b, const Limits& lim = {});

}  // namespace catspec
