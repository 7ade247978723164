#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dfca/error.hpp"

namespace dfca {

/// Subset of a fixed index universe {0, ..., size()-1}. The tag keeps object
/// sets and attribute sets from being mixed up. Iteration and to_vector()
/// yield indices in ascending order.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : bits_(universe) {
    for (auto i : members) insert(i);
  }
  IndexSet(std::size_t universe, const std::vector<std::size_t>& members)
      : bits_(universe) {
    for (auto i : members) insert(i);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(std::size_t i) const {
    check(i);
    return bits_.test(i);
  }
  void insert(std::size_t i) {
    check(i);
    bits_.set(i);
  }
  void erase(std::size_t i) {
    check(i);
    bits_.reset(i);
  }

  bool is_subset_of(const IndexSet& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  IndexSet& operator&=(const IndexSet& o) {
    same_universe(o);
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    same_universe(o);
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    same_universe(o);
    bits_ -= o.bits_;
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// Complement relative to the universe.
  IndexSet complement() const {
    IndexSet c = *this;
    c.bits_.flip();
    return c;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(i);
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  using Bits = boost::dynamic_bitset<>;

  void check(std::size_t i) const {
    if (i >= bits_.size()) throw StructuralError("index out of range");
  }
  void same_universe(const IndexSet& o) const {
    if (o.universe() != universe()) throw StructuralError("set universes differ");
  }

  Bits bits_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

}  // namespace dfca
