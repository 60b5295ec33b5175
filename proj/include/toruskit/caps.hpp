#pragma once

#include <string>

namespace toruskit {

// Search and iteration limits. Exceeding one raises CapExceeded (or
// BoundTooLarge for the enumeration exponent box) rather than looping on.
struct Caps {
  int cap_multiple = 24;     // dilation search limit for saturation
  int cap_insertions = 512;  // stellar insertions per resolution
  int cap_exponent = 12;     // per-prime exponent box for point enumeration
  int m_max = 8;             // sample range for section counts

  // Applies comma-separated key=value overrides, e.g. "cap_multiple=12,m_max=6".
  void apply_overrides(const std::string& spec);
  void validate() const;
};

}  // namespace toruskit
