#pragma once

#include "lpa/graph.hpp"

namespace lpa::fixtures {

/// u and w carry one loop each and both feed the middle sink v.
Graph g1();
/// Chain of four double-loop vertices: v2->v1, v3->v2, v4->v3, v4->v1.
Graph g2();
/// Like g1 with double loops at u and w.
Graph g3();
/// g2 with v3->v2 and v4->v1 at multiplicity omega.
Graph g4();
/// v1 with a double loop, v2 -> v1, v2 -> v3, single loop at v3.
Graph g5();

}  // namespace lpa::fixtures
