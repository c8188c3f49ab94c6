#include "braidlab/structure.hpp"

#include "braidlab/specfile.hpp"

#include <doctest.h>

using namespace braidlab;

namespace {

std::shared_ptr<const YDSpace> zeta_space(unsigned n) {
    return std::make_shared<const YDSpace>(
        YDSpace::diagonal_space({{FieldScalar::zeta(n)}}));
}

}  // namespace

TEST_CASE("filtration layers: F_1 is the primitives, F_q saturates at A_q") {
    auto v = zeta_space(3);
    GradedHopfQuotient free = GradedHopfQuotient::free_algebra(v, 5);
    FilteredAlgebraView filt(free);
    for (unsigned q = 1; q <= 5; ++q) {
        CHECK(filt.layer(1, q) == free.primitives(q));
        CHECK(filt.layer(q, q).dim() == free.dim(q));  // exhaustive
        for (unsigned p = 1; p <= q; ++p)
            CHECK(filt.layer(p, q).dim() >= filt.layer(p - 1, q).dim());
    }
    // resolved by this run: already F_1(A)_3 = A_3, the cube is itself primitive
    CHECK(filt.layer(1, 3).dim() == 1);
}

TEST_CASE("associated graded of a Nichols algebra is the same presentation") {
    auto v = std::make_shared<const YDSpace>(builtin_space("s3-rack-sign"));
    GradedHopfQuotient nic = GradedHopfQuotient::nichols_quotient(v, 4);
    GradedHopfQuotient gr = associated_graded(nic);
    CHECK(gr.hilbert() == nic.hilbert());
    CHECK(gr.generators().dim() == 3);
    for (size_t b = 0; b < 3; ++b) CHECK(gr.generators().weight(b) == 1);
    for (unsigned q = 2; q <= 4; ++q) CHECK(gr.primitives(q).dim() == 0);
}

TEST_CASE("stage one of the free scalar algebra acquires a weight-3 generator") {
    auto v = zeta_space(3);
    GradedHopfQuotient free = GradedHopfQuotient::free_algebra(v, 5);
    GradedHopfQuotient gr = associated_graded(free);
    const YDSpace& w = gr.generators();
    REQUIRE(w.dim() == 2);
    CHECK(w.weight(0) == 1);
    CHECK(w.weight(1) == 3);
    // dim conservation under the associated graded
    CHECK(gr.hilbert() == free.hilbert());
}

TEST_CASE("primitive tower of a Nichols input is constant from stage zero") {
    auto v = std::make_shared<const YDSpace>(builtin_space("s3-rack-sign"));
    GradedHopfQuotient nic = GradedHopfQuotient::nichols_quotient(v, 4);
    TowerReport t = primitive_tower(nic);
    CHECK(t.stabilized);
    CHECK(t.stable_stage == 1);
    CHECK(t.dim_conservation);
    for (bool ok : t.stabilization_ok) CHECK(ok);
    // bigraded dims match the one-graded Hilbert series on the diagonal
    for (unsigned q = 0; q <= 4; ++q) CHECK(t.a_infinity[q][q] == nic.dim(q));
}

TEST_CASE("tower report: conservation and stabilization for the scalar free algebra") {
    auto v = zeta_space(3);
    GradedHopfQuotient free = GradedHopfQuotient::free_algebra(v, 5);
    TowerReport t = primitive_tower(free);
    CHECK(t.dim_conservation);
    CHECK(t.stabilized);
    for (bool ok : t.stabilization_ok) CHECK(ok);
    // every weight has total dimension 1 spread over the bigrading
    for (unsigned q = 1; q <= 5; ++q) {
        size_t total = 0;
        for (unsigned p = 0; p <= 5; ++p) total += t.a_infinity[p][q];
        CHECK(total == 1);
    }
}

TEST_CASE("verify_pbw: scalar spaces and the swap space pass") {
    for (unsigned n = 2; n <= 4; ++n) {
        auto v = zeta_space(n);
        GradedHopfQuotient free = GradedHopfQuotient::free_algebra(v, n + 1);
        PbwReport r = verify_pbw(free);
        CHECK(r.passed);
    }
    auto swap = std::make_shared<const YDSpace>(builtin_space("symmetric-swap"));
    PbwReport r = verify_pbw(GradedHopfQuotient::free_algebra(swap, 4));
    CHECK(r.passed);
}

TEST_CASE("verify_pbw: Nichols inputs trivially pass") {
    auto v = std::make_shared<const YDSpace>(builtin_space("s3-rack-sign"));
    PbwReport r = verify_pbw(GradedHopfQuotient::nichols_quotient(v, 4));
    CHECK(r.passed);
    CHECK(r.tower.stabilized);
}

TEST_CASE("verify_perfect_structure: Nichols and scalar free algebras") {
    auto v = std::make_shared<const YDSpace>(builtin_space("s3-rack-sign"));
    PerfectStructureReport nic_report =
        verify_perfect_structure(GradedHopfQuotient::nichols_quotient(v, 4));
    CHECK(nic_report.passed);
    CHECK(nic_report.tower_steps == 0);
    CHECK(nic_report.p_dims == std::vector<size_t>{3, 0, 0, 0});

    // free on zeta_4: the degree-4 primitive is a sum of products, hence in ker(a)
    auto z4 = zeta_space(4);
    PerfectStructureReport free_report =
        verify_perfect_structure(GradedHopfQuotient::free_algebra(z4, 5));
    CHECK(free_report.passed);
    CHECK(free_report.p_dims == std::vector<size_t>{1, 0, 0, 1, 0});
    CHECK(free_report.ker_a_dims == std::vector<size_t>{0, 0, 0, 1, 1});
}

TEST_CASE("nichols_bigraded on a weighted primitive space") {
    auto v = zeta_space(3);
    GradedHopfQuotient free = GradedHopfQuotient::free_algebra(v, 5);
    std::shared_ptr<GradedHopfQuotient> final_stage;
    TowerReport t = primitive_tower(free, 0, &final_stage);
    YDSpace pinf = primitive_space(*final_stage);
    BigradedDims direct = nichols_bigraded(pinf, 5);
    for (unsigned p = 0; p <= 5; ++p)
        for (unsigned q = 0; q <= 5; ++q) CHECK(direct[p][q] == t.a_infinity[p][q]);
}
