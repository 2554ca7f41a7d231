#ifndef DAISY_JSON_IO_HPP
#define DAISY_JSON_IO_HPP

#include <string>

#include "daisy/core.hpp"
#include "daisy/invariants.hpp"

namespace daisy {

// File formats use the left-to-right bitstring u_1...u_n; the packed word
// representation never leaves the process.

std::string graph_to_json(const CubeSubgraph& g);
CubeSubgraph graph_from_json(const std::string& text);

GeneratorSet generators_from_json(const std::string& text);

std::string report_to_json(const IndexReport& r);
std::string profile_to_json(const DirectionProfile& p);

} // namespace daisy

#endif
