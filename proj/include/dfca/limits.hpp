#pragma once

#include <cstddef>

namespace dfca {

/// Caps on the exhaustive enumerations. Each operation refuses, with a
/// CapacityError, inputs that would exceed its cap.
struct Limits {
  /// Conditionals in a knowledge base whose subsets are enumerated (delta_valid).
  std::size_t max_kb_size = 20;
  /// Objects whose convex rankings are enumerated (enumerate_ranked_models).
  std::size_t max_objects = 6;
  /// Propositional atoms whose valuations are enumerated (prop_entails).
  std::size_t max_atoms = 20;

  /// Defaults, with max_atoms and max_kb_size replaced by DFCA_MAX_ATOMS when
  /// that variable holds a positive integer.
  static Limits from_environment();
};

}  // namespace dfca
