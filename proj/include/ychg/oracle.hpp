#ifndef YCHG_ORACLE_HPP
#define YCHG_ORACLE_HPP

#include "ychg/hypergraph.hpp"
#include "ychg/image.hpp"

namespace ychg {

/// Reference decomposition, deliberately naive and independent of
/// decompose(): runs found by per-pixel scans, overlaps by all-pairs interval
/// intersection, components by breadth-first traversal. Same canonical output
/// contract as decompose(); used to cross-check it.
Hypergraph oracle_decompose(const BinaryImage& image);

} // namespace ychg

#endif
