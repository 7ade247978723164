#include "dfca/context.hpp"

#include <unordered_set>

namespace dfca {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw StructuralError(std::string("duplicate ") + what + " name '" + n + "'");
    }
  }
}

std::optional<std::size_t> index_of(const std::vector<std::string>& names,
                                    const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
  if (incidence.size() != objects_.size()) {
    throw StructuralError("incidence has " + std::to_string(incidence.size()) +
                          " rows, expected " + std::to_string(objects_.size()));
  }
  rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    if (incidence[g].size() != attributes_.size()) {
      throw StructuralError("incidence row " + std::to_string(g) + " has " +
                            std::to_string(incidence[g].size()) + " cells, expected " +
                            std::to_string(attributes_.size()));
    }
    for (std::size_t m = 0; m < attributes_.size(); ++m) {
      if (incidence[g][m]) {
        rows_[g].insert(m);
        columns_[m].insert(g);
      }
    }
  }
}

bool FormalContext::has(std::size_t object, std::size_t attribute) const {
  return row(object).contains(attribute);
}

std::optional<std::size_t> FormalContext::find_object(const std::string& name) const {
  return index_of(objects_, name);
}

std::optional<std::size_t> FormalContext::find_attribute(const std::string& name) const {
  return index_of(attributes_, name);
}

const AttributeSet& FormalContext::row(std::size_t object) const {
  if (object >= rows_.size()) throw StructuralError("object index out of range");
  return rows_[object];
}

const ObjectSet& FormalContext::column(std::size_t attribute) const {
  if (attribute >= columns_.size()) throw StructuralError("attribute index out of range");
  return columns_[attribute];
}

ObjectSet FormalContext::objects_named(const std::vector<std::string>& names) const {
  ObjectSet s = no_objects();
  for (const auto& n : names) {
    auto i = find_object(n);
    if (!i) throw BindingError(n);
    s.insert(*i);
  }
  return s;
}

AttributeSet FormalContext::attributes_named(const std::vector<std::string>& names) const {
  AttributeSet s = no_attributes();
  for (const auto& n : names) {
    auto i = find_attribute(n);
    if (!i) throw BindingError(n);
    s.insert(*i);
  }
  return s;
}

bool operator==(const FormalContext& a, const FormalContext& b) {
  return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
}

AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe() != ctx.object_count()) {
    throw StructuralError("object set does not belong to this context");
  }
  AttributeSet shared = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { shared &= ctx.row(g); });
  return shared;
}

ObjectSet extent(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe() != ctx.attribute_count()) {
    throw StructuralError("attribute set does not belong to this context");
  }
  ObjectSet common = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { common &= ctx.column(m); });
  return common;
}

bool set_satisfies(const AttributeSet& c, const AttributeImplication& impl) {
  return !impl.premise.is_subset_of(c) || impl.conclusion.is_subset_of(c);
}

bool implication_holds(const FormalContext& ctx, const AttributeImplication& impl) {
  return extent(ctx, impl.premise).is_subset_of(extent(ctx, impl.conclusion));
}

AttributeSet closure_under(const std::vector<AttributeImplication>& theory,
                           const AttributeSet& start) {
  AttributeSet closed = start;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& impl : theory) {
      if (impl.premise.is_subset_of(closed) && !impl.conclusion.is_subset_of(closed)) {
        closed |= impl.conclusion;
        changed = true;
      }
    }
  }
  return closed;
}

bool implication_follows(const std::vector<AttributeImplication>& theory,
                         const AttributeImplication& impl) {
  return impl.conclusion.is_subset_of(closure_under(theory, impl.premise));
}

}  // namespace dfca
