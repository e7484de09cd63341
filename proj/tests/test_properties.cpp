#include "doctest.h"
#include "property_suite.hpp"

using namespace testutil;

TEST_SUITE("properties") {

TEST_CASE("randomized suite holds across fields, ranks and sizes") {
    PropertyRunStats stats = run_property_suite(/*seed=*/20240817, /*instances=*/120);
    INFO(summarize(stats));
    for (const std::string& f : stats.failures) {
        CAPTURE(f);
        CHECK(false);
    }
    CHECK(stats.failures.empty());
    CHECK(stats.instances == 120);
    CHECK(stats.transitivityChecks > 0);
    CHECK(stats.pglChecks > 0);
    CHECK(stats.forestChecks > 0);
    CHECK(stats.extensionMultisetChecks > 0);
}

}  // TEST_SUITE
