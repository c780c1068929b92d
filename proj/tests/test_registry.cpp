#include <doctest.h>

#include "eisenzeta/registry.hpp"

using namespace eisenzeta;

TEST_CASE("complex parsing forms") {
    CHECK(parse_complex("1.5,-2") == cplx{1.5, -2.0});
    CHECK(parse_complex("3") == cplx{3.0, 0.0});
    const cplx polar = parse_complex("2@90");
    CHECK(std::abs(polar - cplx{0.0, 2.0}) < 1e-15);
}

TEST_CASE("registry lists targets and rejects unknown ones") {
    const auto names = verify_targets();
    CHECK(names.size() >= 12);
    CHECK(is_verify_target("thm1"));
    CHECK(is_verify_target("euler-2-32"));
    CHECK_FALSE(is_verify_target("nope"));
    CHECK_THROWS_AS(run_verify("nope", {}, Truncation{}, 1), std::domain_error);
}

TEST_CASE("cheap targets run green with default grids") {
    const Truncation tr{};
    for (const char* name : {"euler-2-32", "e2-value", "e-sum-zero", "legendre",
                             "sigma-forms"}) {
        const VerifyReport rep = run_verify(name, {}, tr, 2);
        CHECK(rep.passed);
        CHECK(!rep.rows.empty());
        CHECK(rep.max_residual <= rep.threshold);
    }
}

TEST_CASE("parameter overrides pin a single point") {
    const Truncation tr{};
    const VerifyReport rep = run_verify("euler-2-32", {{"k", "3"}}, tr, 1);
    CHECK(rep.rows.size() == 1);
    CHECK(rep.passed);

    const VerifyReport thm3 = run_verify(
        "thm3", {{"tau", "0.4@60"}}, tr, 1);
    CHECK(thm3.rows.size() == 1);
    CHECK(thm3.passed);
}
