#pragma once

#include <string_view>
#include <vector>

#include "wavedmd/graph.hpp"

namespace wavedmd {

enum class AssignmentMethod { signs, kmeans };
enum class AssignmentSource { dmd, fft, spectral };

std::string_view to_string(AssignmentMethod m);
std::string_view to_string(AssignmentSource s);

struct ClusterAssignment {
  std::vector<int> labels;
  int k = 2;
  AssignmentMethod method = AssignmentMethod::signs;
  AssignmentSource source = AssignmentSource::spectral;
  /// Nodes whose label hinged on an eigenvector entry too close to zero to
  /// carry a sign.
  std::vector<Index> ambiguous_nodes;

  Index size() const noexcept { return static_cast<Index>(labels.size()); }
};

}  // namespace wavedmd
