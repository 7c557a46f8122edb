#include "catspec/fincat.hpp"

#include <algorithm>
#include <cstdlib>

namespace catspec {

Limits Limits::from_env() {
  Limits lim;
  if (const char* s = std::getenv("CATSPEC_MAX_MORPHISMS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v > 0) lim.max_morphisms = static_cast<std::size_t>(v);
  }
  return lim;
}

void require_within(std::size_t morphism_count, const Limits& lim, const std::string& where) {
  if (morphism_count > lim.max_morphisms) {
    throw guardrail_error(where + ": input has " + std::to_string(morphism_count) +
                          " morphisms, exceeding the bound of " +
                          std::to_string(lim.max_morphisms));
  }
}

namespace {
std::uint64_t pair_key(int g, int f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}
}  // namespace

int FinCat::object(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw spec_error(name_ + ": unknown object '" + name + "'");
  return it->second;
}

int FinCat::morphism(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end()) throw spec_error(name_ + ": unknown morphism '" + name + "'");
  return it->second;
}

int FinCat::object_opt(const std::string& name) const {
  auto it = obj_index_.find(name);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCat::morphism_opt(const std::string& name) const {
  auto it = mor_index_.find(name);
  return it == mor_index_.end() ? -1 : it->second;
}

void FinCat::index() {
  obj_index_.clear();
  mor_index_.clear();
  for (int i = 0; i < object_count(); ++i) obj_index_[objects_[i]] = i;
  for (int i = 0; i < morphism_count(); ++i) mor_index_[morphisms_[i]] = i;
  const std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  into_.assign(n, {});
  outof_.assign(n, {});
  for (int m = 0; m < morphism_count(); ++m) {
    hom_[static_cast<std::size_t>(dom_[m]) * n + cod_[m]].push_back(m);
    into_[cod_[m]].push_back(m);
    outof_[dom_[m]].push_back(m);
  }
}

int FinCatBuilder::add_object(const std::string& name) {
  if (obj_.count(name)) throw spec_error(name_ + ": duplicate object '" + name + "'");
  int idx = static_cast<int>(objects_.size());
  obj_[name] = idx;
  objects_.push_back(name);
  identity_of_obj_.push_back(-1);
  return idx;
}

int FinCatBuilder::add_morphism(const std::string& name, const std::string& dom,
                                const std::string& cod) {
  auto d = obj_.find(dom);
  auto c = obj_.find(cod);
  if (d == obj_.end()) throw spec_error(name_ + ": morphism '" + name + "' has unknown dom '" + dom + "'");
  if (c == obj_.end()) throw spec_error(name_ + ": morphism '" + name + "' has unknown cod '" + cod + "'");
  return add_morphism_idx(name, d->second, c->second);
}

int FinCatBuilder::add_morphism_idx(const std::string& name, int dom, int cod) {
  if (mor_.count(name)) throw spec_error(name_ + ": duplicate morphism '" + name + "'");
  int idx = static_cast<int>(morphisms_.size());
  mor_[name] = idx;
  morphisms_.push_back(name);
  dom_.push_back(dom);
  cod_.push_back(cod);
  return idx;
}

int FinCatBuilder::object_index(const std::string& name) const {
  auto it = obj_.find(name);
  if (it == obj_.end()) throw spec_error(name_ + ": unknown object '" + name + "'");
  return it->second;
}

int FinCatBuilder::morphism_index(const std::string& name) const {
  auto it = mor_.find(name);
  if (it == mor_.end()) throw spec_error(name_ + ": unknown morphism '" + name + "'");
  return it->second;
}

void FinCatBuilder::set_identity(const std::string& obj, const std::string& mor) {
  set_identity_idx(object_index(obj), morphism_index(mor));
}

void FinCatBuilder::set_identity_idx(int x, int m) {
  if (dom_[m] != x || cod_[m] != x) {
    throw spec_error(name_ + ": identity '" + morphisms_[m] + "' is not an endomorphism of '" +
                     objects_[x] + "'");
  }
  identity_of_obj_[x] = m;
}

void FinCatBuilder::set_compose(const std::string& g, const std::string& f, const std::string& gf) {
  set_compose_idx(morphism_index(g), morphism_index(f), morphism_index(gf));
}

void FinCatBuilder::set_compose_idx(int g, int f, int gf) {
  if (cod_[f] != dom_[g]) {
    throw spec_error(name_ + ": '" + morphisms_[g] + "*" + morphisms_[f] + "' is not composable");
  }
  if (dom_[gf] != dom_[f] || cod_[gf] != cod_[g]) {
    throw spec_error(name_ + ": composite '" + morphisms_[g] + "*" + morphisms_[f] + " = " +
                     morphisms_[gf] + "' has mismatched endpoints");
  }
  auto key = pair_key(g, f);
  auto it = comp_.find(key);
  if (it != comp_.end() && it->second != gf) {
    throw spec_error(name_ + ": conflicting composite for '" + morphisms_[g] + "*" + morphisms_[f] + "'");
  }
  comp_[key] = gf;
}

void FinCatBuilder::complete_identities() {
  if (identities_done_) return;
  identities_done_ = true;
  for (int x = 0; x < static_cast<int>(objects_.size()); ++x) {
    if (identity_of_obj_[x] >= 0) continue;
    std::string idname = "id_" + objects_[x];
    if (mor_.count(idname)) {
      int m = mor_[idname];
      if (dom_[m] != x || cod_[m] != x)
        throw spec_error(name_ + ": '" + idname + "' exists but is not an endomorphism of '" +
                         objects_[x] + "'");
      identity_of_obj_[x] = m;
    } else {
      identity_of_obj_[x] = add_morphism_idx(idname, x, x);
    }
  }
  // Unit composites are implied.
  for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
    set_compose_idx(identity_of_obj_[cod_[m]], m, m);
    set_compose_idx(m, identity_of_obj_[dom_[m]], m);
  }
}

CatPtr FinCatBuilder::build() {
  complete_identities();
  auto cat = std::make_shared<FinCat>();
  cat->name_ = name_;
  cat->objects_ = objects_;
  cat->morphisms_ = morphisms_;
  cat->dom_ = dom_;
  cat->cod_ = cod_;
  cat->ident_ = identity_of_obj_;
  const std::size_t m = morphisms_.size();
  cat->dense_.assign(m * m, -1);
  for (const auto& [key, gf] : comp_) {
    int g = static_cast<int>(key >> 32);
    int f = static_cast<int>(key & 0xffffffffu);
    cat->dense_[static_cast<std::size_t>(g) * m + f] = gf;
  }
  cat->index();
  return cat;
}

CatPtr make_fincat_with_backend(std::string name,
                                std::vector<std::string> objects,
                                std::vector<std::string> morphisms,
                                std::vector<int> dom, std::vector<int> cod,
                                std::vector<int> ident,
                                std::shared_ptr<const ComposeBackend> backend) {
  auto cat = std::make_shared<FinCat>();
  cat->name_ = std::move(name);
  cat->objects_ = std::move(objects);
  cat->morphisms_ = std::move(morphisms);
  cat->dom_ = std::move(dom);
  cat->cod_ = std::move(cod);
  cat->ident_ = std::move(ident);
  cat->backend_ = std::move(backend);
  cat->index();
  return cat;
}

ValidationReport validate_category(const FinCat& c, const Limits& lim) {
  require_within(c.morphism_count(), lim, "validate_category");
  ValidationReport report;
  auto add = [&](std::string code, std::string msg, std::vector<std::string> wit) {
    report.violations.push_back({std::move(code), std::move(msg), std::move(wit)});
  };

  for (int x = 0; x < c.object_count(); ++x) {
    int id = c.identity(x);
    if (id < 0 || id >= c.morphism_count() || c.dom(id) != x || c.cod(id) != x) {
      add("identity", "object '" + c.object_name(x) + "' has no valid identity",
          {c.object_name(x)});
    }
  }

  const int M = c.morphism_count();
  for (int f = 0; f < M; ++f) {
    for (int g = 0; g < M; ++g) {
      int gf = c.compose(g, f);
      if (c.cod(f) == c.dom(g)) {
        if (gf < 0) {
          add("comp-missing", "missing composite " + c.morphism_name(g) + "*" + c.morphism_name(f),
              {c.morphism_name(g), c.morphism_name(f)});
        } else if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g)) {
          add("comp-endpoints",
              "composite " + c.morphism_name(g) + "*" + c.morphism_name(f) +
                  " has wrong endpoints",
              {c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
        }
      } else if (gf >= 0) {
        add("comp-extra", "composite defined for non-composable pair " + c.morphism_name(g) + "*" +
                              c.morphism_name(f),
            {c.morphism_name(g), c.morphism_name(f)});
      }
    }
  }

  for (int f = 0; f < M; ++f) {
    int idc = c.identity(c.cod(f));
    int idd = c.identity(c.dom(f));
    if (idc >= 0 && c.compose(idc, f) != f) {
      add("unit-left", "id∘" + c.morphism_name(f) + " != " + c.morphism_name(f),
          {c.morphism_name(f)});
    }
    if (idd >= 0 && c.compose(f, idd) != f) {
      add("unit-right", c.morphism_name(f) + "∘id != " + c.morphism_name(f),
          {c.morphism_name(f)});
    }
  }

  // Associativity over all composable triples h∘g∘f.
  for (int f = 0; f < M && report.violations.size() < 1000; ++f) {
    for (int g : c.out_of(c.cod(f))) {
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      for (int h : c.out_of(c.cod(g))) {
        int hg = c.compose(h, g);
        if (hg < 0) continue;
        if (c.compose(h, gf) != c.compose(hg, f)) {
          add("assoc",
              c.morphism_name(h) + "∘(" + c.morphism_name(g) + "∘" + c.morphism_name(f) +
                  ") != (" + c.morphism_name(h) + "∘" + c.morphism_name(g) + ")∘" +
                  c.morphism_name(f),
              {c.morphism_name(h), c.morphism_name(g), c.morphism_name(f)});
        }
      }
    }
  }
  return report;
}

std::vector<int> hom_set(const FinCat& c, const std::string& X, const std::string& Y) {
  return c.hom(c.object(X), c.object(Y));
}

int inverse_of(const FinCat& c, int f) {
  int x = c.dom(f), y = c.cod(f);
  for (int g : c.hom(y, x)) {
    if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return g;
  }
  return -1;
}

std::vector<IsoPair> isomorphisms(const FinCat& c, int X, int Y) {
  std::vector<IsoPair> out;
  for (int f : c.hom(X, Y)) {
    int g = inverse_of(c, f);
    if (g >= 0) out.push_back({f, g});
  }
  return out;
}

std::vector<IsoPair> isomorphisms(const FinCat& c, const std::string& X, const std::string& Y) {
  return isomorphisms(c, c.object(X), c.object(Y));
}

}  // namespace catspec
