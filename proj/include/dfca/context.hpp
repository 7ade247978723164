#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfca/index_set.hpp"

namespace dfca {

/// A formal context (G, M, I): named objects, named attributes and a boolean
/// incidence matrix. Immutable once constructed.
class FormalContext {
 public:
  FormalContext() = default;

  /// `incidence[g][m]` is true iff object g has attribute m. Throws
  /// StructuralError on duplicate names or mismatched dimensions.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }

  bool has(std::size_t object, std::size_t attribute) const;

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_attribute(const std::string& name) const;

  /// {g}^up as an attribute set.
  const AttributeSet& row(std::size_t object) const;
  /// {m}^down as an object set.
  const ObjectSet& column(std::size_t attribute) const;

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  /// Object set from names; throws BindingError for unknown names.
  ObjectSet objects_named(const std::vector<std::string>& names) const;
  AttributeSet attributes_named(const std::vector<std::string>& names) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b);

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

/// A -> B over the attributes of one context.
struct AttributeImplication {
  AttributeSet premise;
  AttributeSet conclusion;
};

/// A^up: attributes shared by every object in A.
AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects);

/// B^down: objects that have every attribute in B.
ObjectSet extent(const FormalContext& ctx, const AttributeSet& attributes);

/// C |= A -> B, i.e. A is not a subset of C or B is a subset of C.
bool set_satisfies(const AttributeSet& c, const AttributeImplication& impl);

/// Whether A -> B holds in the context, checked as A^down within B^down.
bool implication_holds(const FormalContext& ctx, const AttributeImplication& impl);

/// Smallest superset of `start` closed under every implication in `theory`.
AttributeSet closure_under(const std::vector<AttributeImplication>& theory,
                           const AttributeSet& start);

/// theory |= impl, decided through the premise closure.
bool implication_follows(const std::vector<AttributeImplication>& theory,
                         const AttributeImplication& impl);

}  // namespace dfca
