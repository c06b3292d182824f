#pragma once

#include <string>
#include <vector>

#include "bary/canonical.hpp"
#include "bary/complex.hpp"
#include "bary/graph.hpp"
#include "bary/reconstruct.hpp"
#include "bary/verify.hpp"

namespace bary::io {

// All writers produce compact JSON with a fixed key order. Readers throw
// Error(MalformedInput) on anything they cannot interpret.

std::string complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const std::string& text);

std::string labeling_to_json(const FaceLabeling& labeling);
FaceLabeling labeling_from_json(const std::string& text);

std::string graph_to_json(const LabeledGraph& graph);
LabeledGraph graph_from_json(const std::string& text);

std::string generators_to_json(const std::vector<VertexSet>& generators);
std::string bijection_to_json(const VertexBijection* witness);
std::string report_to_json(const ReconstructionReport& report);
std::string verification_to_json(const VerificationReport& report);

}  // namespace bary::io
