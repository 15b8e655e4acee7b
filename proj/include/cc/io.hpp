#pragma once

#include <string>

#include "cc/candidates.hpp"
#include "cc/color_graph.hpp"
#include "cc/graph.hpp"
#include "cc/perm.hpp"
#include "cc/rigidity.hpp"
#include "cc/spectral.hpp"

namespace cc {

// Group file: {"degree": n, "generators": [[images...], ...], "name": "..."}
PermGroup group_from_json(const std::string& text);
std::string group_to_json(const PermGroup& g);

// ColorGraph file: {"n": n, "colors": [row-major ints]}
ColorGraph color_graph_from_json(const std::string& text);
std::string color_graph_to_json(const ColorGraph& x);

// TSV export of tensor triples: "r s t c" per line.
std::string tensor_to_tsv(const IntersectionTensor& t);

// SphericalRep export: coordinates, W values, color -> w table.
std::string rep_to_json(const SphericalRep& rep);

// Closure certificates, replayable.
std::string certificate_to_json(const RigidityCertificate& cert);
RigidityCertificate certificate_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cc
