#include "doctest.h"
#include "kernel_props.hpp"

using namespace ratlines::testing;

namespace {
constexpr int kInstances = 500;

void require_clean(const PropertyRun& run) {
  INFO(run.first_failure);
  CHECK(run.instances == kInstances);
  CHECK(run.failures == 0);
}
}  // namespace

TEST_CASE("gcd reconstruction on random instances") { require_clean(gcd_reconstruction(kInstances)); }

TEST_CASE("content times primitive reconstructs") { require_clean(content_primitive_reconstruction(kInstances)); }

TEST_CASE("factorization product reconstructs and factors are irreducible") {
  require_clean(factorization_reconstruction(kInstances));
}

TEST_CASE("resultant vanishes exactly when a common w-factor exists") {
  require_clean(resultant_common_factor(kInstances));
}
