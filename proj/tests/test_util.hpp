#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cyclord/hypergraph.hpp"

namespace testing_util {

/// Edges written as "124F" / "134B" (single-digit vertices).
inline cyclord::OrientedThreeHypergraph oriented(int n, std::initializer_list<const char*> edges) {
  cyclord::OrientedThreeHypergraph h(n);
  for (const char* e : edges) {
    const std::string s(e);
    h.set({cyclord::Triple::of(s[0] - '0', s[1] - '0', s[2] - '0'),
           s[3] == 'F' ? cyclord::Orientation::Forward : cyclord::Orientation::Backward});
  }
  return h;
}

/// Edges written as "123".
inline cyclord::UnorientedThreeHypergraph unoriented(int n, std::initializer_list<const char*> edges) {
  cyclord::UnorientedThreeHypergraph h(n);
  for (const char* e : edges) {
    const std::string s(e);
    h.insert(cyclord::Triple::of(s[0] - '0', s[1] - '0', s[2] - '0'));
  }
  return h;
}

}  // namespace testing_util
