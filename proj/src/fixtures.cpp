#include "lpa/fixtures.hpp"

namespace lpa::fixtures {

namespace {
EdgeMult one() { return EdgeMult(1); }
EdgeMult two() { return EdgeMult(2); }
}  // namespace

Graph g1() {
    return Graph({"u", "v", "w"},
                 {{"u", "u", one()}, {"u", "v", one()}, {"w", "v", one()}, {"w", "w", one()}});
}

Graph g2() {
    return Graph({"v1", "v2", "v3", "v4"},
                 {{"v1", "v1", two()},
                  {"v2", "v2", two()},
                  {"v3", "v3", two()},
                  {"v4", "v4", two()},
                  {"v2", "v1", one()},
                  {"v3", "v2", one()},
                  {"v4", "v3", one()},
                  {"v4", "v1", one()}});
}

Graph g3() {
    return Graph({"u", "v", "w"},
                 {{"u", "u", two()}, {"u", "v", one()}, {"w", "v", one()}, {"w", "w", two()}});
}

Graph g4() {
    return Graph({"v1", "v2", "v3", "v4"},
                 {{"v1", "v1", two()},
                  {"v2", "v2", two()},
                  {"v3", "v3", two()},
                  {"v4", "v4", two()},
                  {"v2", "v1", one()},
                  {"v3", "v2", EdgeMult::omega()},
                  {"v4", "v3", one()},
                  {"v4", "v1", EdgeMult::omega()}});
}

Graph g5() {
    return Graph({"v1", "v2", "v3"},
                 {{"v1", "v1", two()}, {"v2", "v1", one()}, {"v2", "v3", one()}, {"v3", "v3", one()}});
}

}  // namespace lpa::fixtures
