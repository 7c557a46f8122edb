#pragma once

#include <cstdint>
#include <random>

#include "catspec/grothendieck.hpp"

namespace catspec::testgen {

// Deterministic RNG wrapper; raw modulo draws keep values identical across
// standard library implementations.
struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint32_t>(n)); }
  bool flip() { return (gen() & 1u) != 0; }
};

// Random poset category with 1..max_objects objects.
CatPtr random_poset_base(Rng& rng, int max_objects);

// Random base with invertible arrows: BZ2/BZ3/BZ4 or a chaotic category on
// up to three objects.
CatPtr random_groupoid_base(Rng& rng);

// Random contravariant pseudofunctor with chaotic fibers (1..max_fiber
// objects).  Coherence is genuinely non-strict: every action, including the
// action of identities, is an arbitrary object map.
Pseudofunctor random_chaotic_pseudofunctor(Rng& rng, CatPtr base, int max_fiber);

// Random strict contravariant pseudofunctor with poset fibers (identity
// coherence).  Its Grothendieck total category is a structure on the base.
Pseudofunctor random_strict_poset_pseudofunctor(Rng& rng, CatPtr base, int max_fiber);

// Either of the two above.
Pseudofunctor random_pseudofunctor(Rng& rng, CatPtr base, int max_fiber);

}  // namespace catspec::testgen
