#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catspec/fibration.hpp"
#include "catspec/limits.hpp"
#include "catspec/presheaf.hpp"

namespace catspec {

struct StructureCheck {
  bool ok = false;
  std::string failed;  // "functor" | "faithful" | "iso-lifting" | "skeletal-fibers"
  std::vector<std::string> witness;
};

// Def-style structure test: faithful, lifts isos onto objects, skeletal
// fibers.  Reports the first violated bullet with a witness.
StructureCheck is_structure(const FiberedFunctor& p, const Limits& lim = {});

struct IdentityCriteria {
  bool a = false, b = false, c = false, d = false, e = false;
  bool all_equal() const { return a == b && b == c && c == d && d == e; }
};

// The five equivalent identity criteria for two objects of a common fiber.
IdentityCriteria identity_criteria(const FiberedFunctor& p, int E1, int E2,
                                   const Limits& lim = {});

// The presheaf X ↦ p(E(X,E)) on the total category, with the hom-subfunctor
// verification flag.
SetPresheaf structure_presheaf(const FiberedFunctor& p, int E, bool* subfunctor_ok = nullptr);

// An almost-structure over base object B: for each total object a subset of
// hom(p(E), B), closed under precomposition with projected arrows.
struct AlmostStructure {
  FunctorData p;  // the structure functor
  int B = -1;
  std::vector<std::vector<int>> members;  // per total object: sorted base morphisms

  bool contains(int total_obj, int g) const;
};

ValidationReport validate_almost(const AlmostStructure& A);
AlmostStructure almost_full(const FiberedFunctor& p, int B);
AlmostStructure almost_empty(const FiberedFunctor& p, int B);
// Smallest almost-structure containing g : p(X) -> B at X.
AlmostStructure almost_principal(const FiberedFunctor& p, int B, int total_obj, int g);

struct AlmostInverseImage {
  AlmostStructure result;      // f*F over dom f
  bool cartesian_ok = false;   // the arrow (f∘-, f) verified cartesian
  std::vector<std::string> witness;
};

// Prop-style inverse image: g ∈ (f*F)(X) iff f∘g ∈ F(X), with the
// cartesianness of (f∘-, f) checked over every factorization of every
// incoming arrow (the hom-sets of the almost-structure category are thin in
// the base arrow, so the filler count reduces to these memberships).
AlmostInverseImage almost_inverse_image(const AlmostStructure& A, int f, const Limits& lim = {});

// Materialized category of almost-structures over every base object, for
// desk-scale fixtures: objects are (closed member set, B), morphisms the base
// arrows whose postcomposition maps one member set into the other.
struct AlmostCategory {
  CatPtr cat;
  FunctorData proj;  // to the base
  std::vector<int> obj_base;
  std::vector<AlmostStructure> obj_data;
  std::vector<int> mor_f;
};

AlmostCategory almost_structure_category(const FiberedFunctor& p, const Limits& lim = {});

// A set-backed category together with chosen product/terminal witnesses; the
// underlying functor is the element/function table data itself (verified
// faithful and product-preserving).
struct ConcreteCategory {
  FinSetCat sets;
  CartesianContext cart;

  const FinCat& cat() const { return *sets.cat; }
};

ConcreteCategory make_concrete(FinSetCat sc, const Limits& lim = {});

// A generalized element of C(X,Y) with domain |Z| is a function
// |Z| -> hom(X,Y) whose uncurried composite lifts to C.
using GeneralizedElement = std::vector<int>;  // per element of |Z|: a morphism X -> Y

bool is_generalized_element(const ConcreteCategory& C, int Z, int X, int Y,
                            const GeneralizedElement& f);
std::vector<GeneralizedElement> generalized_elements(const ConcreteCategory& C, int Z, int X,
                                                     int Y, const Limits& lim = {});
// Restriction along alpha : Z' -> Z; the result is again generalized.
GeneralizedElement ge_restrict(const ConcreteCategory& C, int Z, int X, int Y,
                               const GeneralizedElement& f, int alpha);
// Pointwise composition of f : |W| -> hom(Y,Z) with g : |W| -> hom(X,Y).
GeneralizedElement ge_compose(const ConcreteCategory& C, int W, int X, int Y, int Z,
                              const GeneralizedElement& f, const GeneralizedElement& g);
// The presheaf Z ↦ G(|Z|, C(X,Y)).
SetPresheaf ge_presheaf(const ConcreteCategory& C, int X, int Y, const Limits& lim = {});

// Colimit of F over the category of elements of P (the universal-cocompletion
// extension applied to P), for Set-valued F given by a FinSetCat target.
struct YonedaExtension {
  SetColimit colimit;
  ElementsCategory elements;
  std::vector<std::string> class_names;  // canonical names of the classes
};

YonedaExtension yoneda_extend(const FunctorData& F, const FinSetCat& target_sets,
                              const SetPresheaf& P, const Limits& lim = {});

}  // namespace catspec
