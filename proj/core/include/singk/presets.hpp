#pragma once

// Named groups: cyclic A_n, binary dihedral D_n and the binary polyhedral
// groups behind E6, E7, E8.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singk/localsing.hpp"

namespace singk {

struct Preset {
  std::string name;
  std::string description;
  std::vector<CycMatrix> generators;
  unsigned long conductor = 1;
  std::size_t expected_order = 0;
  std::optional<std::string> ade_label;
  /// Set for cyclic presets: 1/m(weights).
  std::optional<std::pair<unsigned long, std::vector<unsigned long>>> cyclic;

  GroupPtr group(std::size_t max_order = kDefaultMaxOrder) const;
  /// Cyclic presets become cyclic-weight models, the rest matrix models.
  LocalModel model(std::size_t max_order = kDefaultMaxOrder) const;
};

/// A_1..A_8, D_4..D_9, E6, E7, E8.
const std::vector<Preset>& preset_catalog();

/// Accepts the catalog names plus any A_n (n >= 1), D_n (n >= 4), with or
/// without an underscore. Throws InvalidLabel.
Preset find_preset(std::string_view name);

/// 1/m(a_1, ..., a_n) as a preset.
Preset cyclic_preset(unsigned long m, const std::vector<unsigned long>& weights);

/// Binary dihedral group of order 4k.
Preset binary_dihedral_preset(unsigned long k);

/// 64-bit FNV-1a, used to pin the committed preset data files.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace singk
