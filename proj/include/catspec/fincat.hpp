#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catspec/common.hpp"

namespace catspec {

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

// Composition storage for categories too large for a dense table.
// Implementations compute g∘f on demand (e.g. componentwise for an arrow
// category).  Must return -1 when the pair is not composable.
class ComposeBackend {
 public:
  virtual ~ComposeBackend() = default;
  virtual int compose(int g, int f) const = 0;
};

// A finite category: named objects and morphisms, total dom/cod/id data and
// a composition table.  Immutable after construction; all operations over it
// are pure functions.
class FinCat {
 public:
  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(int x) const { return objects_[x]; }
  const std::string& morphism_name(int m) const { return morphisms_[m]; }

  // Index lookups; the64 _opt forms return -1 when the name is unknown, the
  // plain forms throw spec_error.
  int object(const std::string& name) const;
  int morphism(const std::string& name) const;
  int object_opt(const std::string& name) const;
  int morphism_opt(const std::string& name) const;

  int dom(int m) const { return dom_[m]; }
  int cod(int m) const { return cod_[m]; }
  int identity(int x) const { return ident_[x]; }
  bool is_identity(int m) const { return ident_[dom_[m]] == m; }

  // g∘f, or -1 when cod(f) != dom(g) or the table has no entry.
  int compose(int g, int f) const {
    if (!dense_.empty()) {
      return dense_[static_cast<std::size_t>(g) * morphisms_.size() + f];
    }
    return backend_->compose(g, f);
  }

  // Morphisms with dom x and cod y, ascending by index.
  const std::vector<int>& hom(int x, int y) const {
    return hom_[static_cast<std::size_t>(x) * objects_.size() + y];
  }
  const std::vector<int>& into(int y) const { return into_[y]; }
  const std::vector<int>& out_of(int x) const { return outof_[x]; }

  friend class FinCatBuilder;
  friend CatPtr make_fincat_with_backend(std::string name,
                                         std::vector<std::string> objects,
                                         std::vector<std::string> morphisms,
                                         std::vector<int> dom, std::vector<int> cod,
                                         std::vector<int> ident,
                                         std::shared_ptr<const ComposeBackend> backend);

 private:
  void index();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> morphisms_;
  std::vector<int> dom_, cod_;
  std::vector<int> ident_;                 // per object
  std::vector<int32_t> dense_;             // M*M entries, -1 = undefined; empty if backend_
  std::shared_ptr<const ComposeBackend> backend_;

  std::unordered_map<std::string, int> obj_index_, mor_index_;
  std::vector<std::vector<int>> hom_;      // nObj*nObj grid
  std::vector<std::vector<int>> into_, outof_;
};

// Incremental construction with a dense composition table.  Identities can
// be declared explicitly or autogenerated as id_<object>; unit composites
// are filled in automatically, everything else must be set explicitly.
class FinCatBuilder {
 public:
  explicit FinCatBuilder(std::string name) : name_(std::move(name)) {}

  int add_object(const std::string& name);
  // Returns the morphism index.  dom/cod are object names.
  int add_morphism(const std::string& name, const std::string& dom, const std::string& cod);
  int add_morphism_idx(const std::string& name, int dom, int cod);
  void set_identity(const std::string& obj, const std::string& mor);
  void set_identity_idx(int obj, int mor);
  void set_compose(const std::string& g, const std::string& f, const std::string& gf);
  void set_compose_idx(int g, int f, int gf);

  bool has_object(const std::string& name) const { return obj_.count(name) > 0; }
  bool has_morphism(const std::string& name) const { return mor_.count(name) > 0; }
  int object_index(const std::string& name) const;
  int morphism_index(const std::string& name) const;

  // Adds id_<obj> for objects without a declared identity and fills unit
  // composites.  Called by build(); exposed for the parser's diagnostics.
  void complete_identities();

  // Finalizes into an immutable category.  Checks that dom/cod/id/comp are
  // well-formed data (category *laws* are validate_category's job), and that
  // every declared composite has matching endpoints.
  CatPtr build();

 private:
  std::string name_;
  std::vector<std::string> objects_, morphisms_;
  std::vector<int> dom_, cod_;
  std::vector<int> identity_of_obj_;  // -1 until declared
  std::unordered_map<std::string, int> obj_, mor_;
  std::unordered_map<std::uint64_t, int> comp_;
  bool identities_done_ = false;
};

CatPtr make_fincat_with_backend(std::string name,
                                std::vector<std::string> objects,
                                std::vector<std::string> morphisms,
                                std::vector<int> dom, std::vector<int> cod,
                                std::vector<int> ident,
                                std::shared_ptr<const ComposeBackend> backend);

// One axiom violation, with the witness morphisms that exhibit it.
struct Violation {
  std::string code;      // e.g. "assoc", "unit-left", "comp-missing"
  std::string message;
  std::vector<std::string> witness;  // morphism/object names involved
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive category-law check: totality of composition on composable
// pairs (and only those), endpoint compatibility, unit laws, associativity.
// Violations are data, not failures.
ValidationReport validate_category(const FinCat& c, const Limits& lim = {});

// All morphisms X -> Y.  Throws on unknown ids.
std::vector<int> hom_set(const FinCat& c, const std::string& X, const std::string& Y);

struct IsoPair {
  int forward;
  int inverse;
};

// All isomorphisms X -> Y with their two-sided inverses.
std::vector<IsoPair> isomorphisms(const FinCat& c, int X, int Y);
std::vector<IsoPair> isomorphisms(const FinCat& c, const std::string& X, const std::string& Y);

// Inverse of a given iso, or -1.
int inverse_of(const FinCat& c, int f);

}  // namespace catspec
