#include "braidlab/specfile.hpp"

#include "braidlab/report.hpp"

#include <doctest.h>

using namespace braidlab;

TEST_CASE("a rack spec file builds the transposition space") {
    std::string text = R"(
# the transposition class of S_3
[group]
name = s3
points = 3
gen = (1 2)
gen = (2 3)

[space]
kind = rack
group = s3
elements = (1 2), (2 3), (1 3)
labels = x, y, z
)";
    SpecFile f = parse_spec_text(text);
    REQUIRE(f.space.has_value());
    CHECK(f.space->dim() == 3);
    CHECK(f.space->label(0) == "x");
    CHECK(f.group->size() == 6);
    // same braiding as the builtin
    CHECK(f.space->braiding_matrix() == builtin_space("s3-rack").braiding_matrix());
}

TEST_CASE("a diagonal spec file with zeta entries") {
    std::string text = R"(
[space]
kind = diagonal
row = zeta(3)^1
)";
    SpecFile f = parse_spec_text(text);
    REQUIRE(f.space.has_value());
    CHECK(f.space->braiding_matrix().at(0, 0) == FieldScalar::zeta(3));
}

TEST_CASE("task sections carry options") {
    std::string text = "[task]\ntask = nichols\nmax-degree = 4\n";
    SpecFile f = parse_spec_text(text);
    REQUIRE(f.task.has_value());
    CHECK(f.task->task == "nichols");
    CHECK(f.task->options.at("max-degree") == "4");
}

TEST_CASE("unknown keys and sections are rejected with a location") {
    CHECK_THROWS_AS(parse_spec_text("[group]\nfoo = 1\n"), InputError);
    CHECK_THROWS_AS(parse_spec_text("[nope]\n"), InputError);
    CHECK_THROWS_AS(parse_spec_text("key = 1\n"), InputError);
    try {
        parse_spec_text("[group]\npoints = 3\ngen = (1 2)\nbad = x\n");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("an empty space section is an error") {
    CHECK_THROWS_AS(parse_spec_text("[space]\n"), InputError);
    CHECK_THROWS_AS(parse_spec_text("[space]\nkind = rack\n"), InputError);
}

TEST_CASE("cycle entries out of range are diagnosed") {
    CHECK_THROWS_AS(parse_spec_text("[group]\npoints = 2\ngen = (1 5)\n"), InputError);
}

TEST_CASE("non-root-of-unity diagonal entries are rejected at parse time") {
    CHECK_THROWS_AS(parse_spec_text("[space]\nkind = diagonal\nrow = 1/2\n"), StructureError);
}

TEST_CASE("monomial generators parse perm and diag parts") {
    std::string text = R"(
[group]
points = 2
gen = (1 2) * diag(1, zeta(4)^1)
)";
    SpecFile f = parse_spec_text(text);
    // closure of an order-8 monomial matrix
    CHECK(f.group->size() == 8);
}

TEST_CASE("builtins: registry names resolve and zeta parses degrees") {
    for (const auto& name : builtin_names()) CHECK(builtin_space(name).dim() >= 1);
    CHECK(builtin_space("zeta5").conductor() == 5);
    CHECK_THROWS_AS(builtin_space("zeta1"), InputError);
    CHECK_THROWS_AS(builtin_space("nonsense"), InputError);
}

TEST_CASE("fixture files parse through the file path API") {
    SpecFile rack = parse_spec("fixtures/s3-rack.space");
    REQUIRE(rack.space.has_value());
    CHECK(rack.space->dim() == 3);
    REQUIRE(rack.task.has_value());
    CHECK(rack.task->options.at("max-degree") == "5");

    SpecFile z3 = parse_spec("fixtures/zeta3.space");
    CHECK(z3.space->conductor() == 3);

    SpecFile pair = parse_spec("fixtures/q4-pair.space");
    CHECK(pair.space->dim() == 2);
    CHECK(pair.space->braiding_matrix().at(2, 1) == FieldScalar::zeta(4, 3));

    CHECK_THROWS_AS(parse_spec("fixtures/no-such-file.space"), InputError);
}

TEST_CASE("json reports serialize deterministically") {
    YDSpace v = builtin_space("s3-rack");
    CounterexampleReport r1 = verify_not_right_ideal(v);
    CounterexampleReport r2 = verify_not_right_ideal(v);
    CHECK(json_counterexample(r1).dump() == json_counterexample(r2).dump());

    std::vector<size_t> dims{1, 3, 4, 3, 1, 0};
    CHECK(json_dims(dims).dump() == "[1,3,4,3,1,0]");

    // round trip: re-parsing a dim report recovers the in-memory values
    Json parsed = Json::parse(json_dims(dims).dump());
    for (size_t i = 0; i < dims.size(); ++i) CHECK(parsed[i].get<size_t>() == dims[i]);
}
