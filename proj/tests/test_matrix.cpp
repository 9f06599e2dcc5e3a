#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <qdec/complex_matrix.hpp>
#include <qdec/density_matrix.hpp>

using qdec::complex;
using qdec::complex_matrix;
using qdec::density_matrix;
using qdec::hermitian_operator;
using Catch::Matchers::WithinAbs;

TEST_CASE("complex matrix basics", "[matrix]") {
    const complex_matrix id = complex_matrix::identity(3);
    CHECK(id(0, 0) == complex(1.0));
    CHECK(id(0, 1) == complex(0.0));
    CHECK(id.trace() == complex(3.0));

    complex_matrix a(2, {complex(1, 2), complex(3, -1), complex(0, 1), complex(2, 0)});
    CHECK(a.adjoint()(0, 1) == std::conj(a(1, 0)));
    CHECK(qdec::max_abs_diff(a * complex_matrix::identity(2), a) == 0.0);
    CHECK_THROWS_AS(complex_matrix(3, {complex(1.0)}), qdec::invariant_error);
}

TEST_CASE("matrix products and kron", "[matrix]") {
    complex_matrix x(2, {complex(0), complex(1), complex(1), complex(0)});
    complex_matrix z(2, {complex(1), complex(0), complex(0), complex(-1)});
    const complex_matrix xz = x * z;
    // sigma_x sigma_z = -i sigma_y = [[0,-1],[1,0]]
    CHECK(xz(0, 0) == complex(0.0));
    CHECK(xz(0, 1) == complex(-1.0));
    CHECK(xz(1, 0) == complex(1.0));
    CHECK(xz(1, 1) == complex(0.0));

    const complex_matrix k = qdec::kron(x, z);
    REQUIRE(k.dim() == 4);
    CHECK(k(0, 2) == complex(1.0));
    CHECK(k(1, 3) == complex(-1.0));
    CHECK(k(0, 1) == complex(0.0));

    const complex_matrix c = qdec::commutator(x, z);
    CHECK(c(0, 1) == complex(-2.0));
    CHECK(c(1, 0) == complex(2.0));
}

TEST_CASE("hermiticity defect and finiteness", "[matrix]") {
    complex_matrix m(2, {complex(1), complex(0, 1), complex(0, 1), complex(2)});
    // m(1,0) should be -i for Hermiticity; defect is |i - conj(i)| = 2.
    CHECK_THAT(m.hermiticity_defect(), WithinAbs(2.0, 1e-15));
    CHECK(m.all_finite());
    m(1, 1) = complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK(!m.all_finite());
}

TEST_CASE("hermitian operator validation", "[matrix]") {
    CHECK_NOTHROW(hermitian_operator(
        complex_matrix(2, {complex(0), complex(1, 1), complex(1, -1), complex(3)})));
    CHECK_THROWS_AS(hermitian_operator(complex_matrix(
                        2, {complex(0), complex(1, 1), complex(1, 1), complex(3)})),
                    qdec::not_hermitian_error);
    // Lab-scale entries validate with the scale-aware tolerance.
    const double w = 6.2e5;
    CHECK_NOTHROW(hermitian_operator(
        complex_matrix(2, {complex(0), complex(w), complex(w), complex(0)})));
    // Non-finite entries are rejected outright.
    complex_matrix bad(1);
    bad(0, 0) = complex(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_THROWS_AS(hermitian_operator(std::move(bad)), qdec::invariant_error);
}

TEST_CASE("density matrix validation", "[matrix]") {
    CHECK_NOTHROW(density_matrix(
        complex_matrix(2, {complex(0.5), complex(0.2), complex(0.2), complex(0.5)})));
    // Trace 1.5 is rejected.
    CHECK_THROWS_AS(density_matrix(complex_matrix(2, {complex(1.0), complex(0),
                                                      complex(0), complex(0.5)})),
                    qdec::invariant_error);
    // Non-Hermitian coherences are rejected.
    CHECK_THROWS_AS(density_matrix(complex_matrix(2, {complex(0.5), complex(0.2, 0.1),
                                                      complex(0.2, 0.1), complex(0.5)})),
                    qdec::not_hermitian_error);
}

TEST_CASE("density matrix factories", "[matrix]") {
    const auto diag = density_matrix::diagonal({0.2, 0.3, 0.5});
    CHECK(diag(1, 1) == complex(0.3));
    CHECK_THAT(std::abs(diag.mat().trace() - complex(1.0)), WithinAbs(0.0, 1e-15));

    // Weights are normalized, so truncated distributions are accepted.
    const auto renorm = density_matrix::diagonal({1.0, 1.0});
    CHECK(renorm(0, 0) == complex(0.5));
    CHECK_THROWS_AS(density_matrix::diagonal({0.5, -0.1}), qdec::invariant_error);
    CHECK_THROWS_AS(density_matrix::diagonal({0.0, 0.0}), qdec::invariant_error);

    const auto plus = density_matrix::pure({complex(1.0), complex(1.0)});
    CHECK_THAT(plus(0, 1).real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(plus.purity(), WithinAbs(1.0, 1e-14));
    CHECK_THROWS_AS(density_matrix::pure({complex(0.0), complex(0.0)}),
                    qdec::invariant_error);

    const auto mixed = density_matrix::diagonal({0.5, 0.5});
    CHECK_THAT(mixed.purity(), WithinAbs(0.5, 1e-15));
}
