// Deterministic graph corpora: exhaustive enumeration of small connected
// orientable four-valent ribbon graphs up to isomorphism, and a seeded
// random generator for larger line counts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncpoly/graph.hpp"

namespace ncpoly {

// Every isomorphism class with 1..max_lines internal lines, each vertex
// carrying exactly four corners (external legs fill unused slots). Order is
// deterministic: by line count, then by canonical serialization.
std::vector<RibbonGraph> corpus_exhaustive(int max_lines);

// `count` random graphs with 1..max_lines lines (validated, connected),
// reproducible from the seed.
std::vector<RibbonGraph> corpus_random(int count, int max_lines,
                                       std::uint64_t seed);

// Canonical serialization of the isomorphism class (vertex relabeling plus
// even word rotations); equal strings iff isomorphic under those moves.
std::string canonical_key(const RibbonGraph& g);

}  // namespace ncpoly
