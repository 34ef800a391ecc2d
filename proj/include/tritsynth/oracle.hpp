#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tritsynth/synth.hpp"

namespace tritsynth {

/**
 * Brute-force ground truth for the projective Clifford+T group, indexed by
 * canonical key. min_t_count is exact by construction: the enumeration is
 * a 0/1-cost breadth-first search with Clifford generators at cost 0 and
 * T, T^2 at cost 1, so no shorter decomposition into Clifford and T/T^2
 * factors exists.
 */
struct AtlasRecord {
    unsigned min_t_count = 0;
    std::string witness; // gate string reproducing the key projectively
    unsigned h_count = 0;
    unsigned denom_exp = 0;
};

struct GroupAtlas {
    std::map<std::string, AtlasRecord> entries;
    std::vector<std::size_t> layer_sizes;
    bool complete = true;
};

// Enumerates every projective group element of minimal T-count <= max_t.
// Stops early (complete = false) if the element budget is exhausted.
GroupAtlas bfs_enumerate(unsigned max_t, std::size_t max_elements = 2'000'000);

struct CheckReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// normalize(witness) and exact_synthesize(matrix) agree structurally, the
// normal form reconstructs the witness matrix exactly, no two atlas keys
// share a normal form, and t_count equals the BFS-minimal T-count.
CheckReport check_uniqueness(const GroupAtlas& atlas);

// k = h + 2 (h >= 1) / k = 0 (h = 0) and the parity certificate for every
// atlas entry.
CheckReport check_denom_law(const GroupAtlas& atlas);

// Atlas export, one JSON record per line.
std::string atlas_to_jsonl(const GroupAtlas& atlas);

} // namespace tritsynth
