#pragma once

#include <string>
#include <vector>

#include "hilden/genword.hpp"
#include "hilden/surface.hpp"

namespace hilden {

// Builds the action table for one catalog generator. Throws index_error for
// indices outside the (g, n) ranges (meridian slides additionally require
// g >= 1).
MappingClassElement generator(const SurfaceConfigPtr& config, const GeneratorName& name);

// Left-to-right product of the catalog elements named by the word; the
// result's provenance is the word itself.
MappingClassElement evaluate(const SurfaceConfigPtr& config, const GeneratorWord& word);

// Every Hilden-family generator name valid at this config (intervals,
// twists, exchanges, arc slides, meridian slides; no handle twists).
std::vector<GeneratorName> hilden_generator_names(const SurfaceConfigPtr& config);

// The psi-side generator names (handle twists tu[j], tv[j]).
std::vector<GeneratorName> psi_generator_names(const SurfaceConfigPtr& config);

// One checked relation instance.
struct RelationInstance {
    std::string relation; // "R1".."R6"
    std::string detail;   // the instantiated identity, e.g. "s[1] = iota[1]^2"
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationInstance> instances;
    bool all_pass = true;
    int count(const std::string& relation) const;
    int failures() const;
};

// Checks, via equal(): R1 exchange braid relations; R2 distant exchanges
// commute; R3 intervals commute; R4 s_i = iota_i^2; R5 the lantern-shaped
// slide identity s_{i,k} s'_{i,k} = t_{i,k} s_i^-1; R6 generators with
// disjoint row footprints commute.
RelationReport relation_suite(const SurfaceConfigPtr& config);

} // namespace hilden
