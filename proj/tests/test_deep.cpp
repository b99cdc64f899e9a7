// Slow cross-validation at the edge of the default budget: rk pi_9 by
// Lie-model homology against the closed formula. The b2 = 4 case runs a
// Witt-certified elimination over ~291k tensor-word columns.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rh4/fourfold.hpp"

using namespace rh4;

TEST_CASE("rk pi_9 from homology degree 8 matches the closed formula") {
  for (int b2 : {2, 3, 4}) {
    Workspace ws(fourfold_model({b2, 0}));
    CHECK(ws.homology_dim(8) == ranks_closed(b2, 8));
  }
}
