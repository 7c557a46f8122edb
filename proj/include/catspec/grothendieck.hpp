#pragma once

#include <map>
#include <string>
#include <vector>

#include "catspec/fibration.hpp"

namespace catspec {

// A pseudofunctor on a finite base with explicit coherence isomorphisms.
//
// Contravariant: action[f : B -> B'] is a functor value[B'] -> value[B];
//   comp_iso[(g,f)], indexed by objects E'' of value[cod g], has components
//   F(f)(F(g)(E'')) -> F(g∘f)(E'') and id_iso[B][E] : E -> F(1_B)(E),
//   exactly the isos the composite formula of the total category uses.
// Covariant: action[f] : value[B] -> value[B'];
//   comp_iso[(g,f)][E in value[dom f]] : F(g∘f)(E) -> F(g)(F(f)(E)) and
//   id_iso[B][E] : F(1_B)(E) -> E.
struct Pseudofunctor {
  std::string name;
  CatPtr base;
  bool contravariant = true;
  std::vector<CatPtr> value;
  std::vector<FunctorData> action;
  std::map<std::pair<int, int>, std::vector<int>> comp_iso;  // key (g, f) with cod f = dom g
  std::vector<std::vector<int>> id_iso;
};

// Functoriality of every action, iso-ness and naturality of every coherence
// component, compatibility on composable triples, and unit compatibility.
ValidationReport validate_pseudofunctor(const Pseudofunctor& F, const Limits& lim = {});

// Deterministic cleavage: identity arrows get identity lifts when available,
// otherwise the lift with the lexicographically least name.  Throws when an
// arrow has no lift (naming it).
Cleavage choose_cleavage(const FiberedFunctor& p,
                         LiftDirection dir = LiftDirection::Cartesian, const Limits& lim = {});

struct PseudofunctorExtraction {
  Pseudofunctor F;
  std::vector<Fiber> fibers;  // per base object
  Cleavage cleavage;
};

// Prop 1.1, first bullet: B ↦ fiber, f ↦ Cart_f, with the unique vertical
// fillers as coherence.
PseudofunctorExtraction to_pseudofunctor(const FiberedFunctor& p, const Cleavage& clv,
                                         const Limits& lim = {});

struct GrothendieckResult {
  CatPtr total;
  FunctorData projection;            // total -> base
  std::vector<int> obj_base;         // per total object
  std::vector<int> obj_fiber;        // fiber-object index in value[obj_base]
  std::vector<int> mor_base;         // per total morphism: base morphism
  std::vector<int> mor_fiber;        // fiber-morphism component h

  FiberedFunctor fibered() const { return FiberedFunctor{projection}; }
  int object_of(int B, int fiberObj) const;
};

// Prop 1.1, second bullet.  The projection classifies as a fibration in the
// contravariant case and a cofibration in the covariant case.
GrothendieckResult grothendieck(const Pseudofunctor& F, const Limits& lim = {});

struct RoundTrip {
  bool ok = false;
  FunctorData mediating;  // grothendieck(to_pseudofunctor(p)) -> total of p
  bool commutes_with_projections = false;
  FunctorAnalysis analysis;
};

// Prop 1.1, third bullet, in the fibration -> pseudofunctor -> fibration
// order: the mediating comparison functor is an equivalence over the base.
RoundTrip roundtrip_check(const FiberedFunctor& p, const Limits& lim = {});

}  // namespace catspec
