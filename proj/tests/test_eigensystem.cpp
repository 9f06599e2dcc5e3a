#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <qdec/qdec.hpp>

#include "support/random_states.hpp"

using qdec::complex;
using qdec::complex_matrix;
using qdec::density_matrix;
using qdec::diagonalize;
using qdec::hermitian_operator;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double reconstruction_defect(const qdec::energy_decomposition& dec,
                             const hermitian_operator& h) {
    complex_matrix lam(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) lam(i, i) = dec.energies[i];
    return qdec::max_abs_diff(dec.basis * lam * dec.basis.adjoint(), h.mat());
}

double unitarity_defect(const qdec::energy_decomposition& dec) {
    return qdec::max_abs_diff(dec.basis.adjoint() * dec.basis,
                              complex_matrix::identity(dec.basis.dim()));
}

} // namespace

TEST_CASE("diagonalize: already-diagonal input", "[eigensystem]") {
    const double w = 2.7;
    const auto dec = diagonalize(
        hermitian_operator(complex_matrix(2, {complex(0), complex(0), complex(0), complex(w)})));
    REQUIRE(dec.energies.size() == 2);
    CHECK_THAT(dec.energies[0], WithinAbs(0.0, 1e-15));
    CHECK_THAT(dec.energies[1], WithinRel(w, 1e-15));
    // Columns are the computational basis up to phase; check via reconstruction.
    CHECK(unitarity_defect(dec) < 1e-14);
    for (std::size_t c = 0; c < 2; ++c)
        CHECK_THAT(std::abs(dec.basis(c, c)), WithinAbs(1.0, 1e-14));
}

TEST_CASE("diagonalize: sigma_x spectrum", "[eigensystem]") {
    const double w = 1.7;
    const auto dec = diagonalize(
        hermitian_operator(complex_matrix(2, {complex(0), complex(w), complex(w), complex(0)})));
    CHECK_THAT(dec.energies[0], WithinRel(-w, 1e-14));
    CHECK_THAT(dec.energies[1], WithinRel(w, 1e-14));
}

TEST_CASE("diagonalize: random Hermitian reconstruction", "[eigensystem]") {
    std::mt19937 rng(7101);
    for (std::size_t dim : {2u, 3u, 6u, 6u, 6u, 8u}) {
        const auto h = testsupport::random_hermitian(dim, rng);
        const auto dec = diagonalize(h);
        CHECK(reconstruction_defect(dec, h) < 1e-10);
        CHECK(unitarity_defect(dec) < 1e-10);
        for (std::size_t i = 1; i < dim; ++i) CHECK(dec.energies[i] >= dec.energies[i - 1]);
        CHECK(qdec::max_abs_diff(dec.source, h.mat()) == 0.0);
    }
}

TEST_CASE("diagonalize: degenerate spectrum", "[eigensystem]") {
    const auto dec = diagonalize(hermitian_operator(complex_matrix::identity(4)));
    for (double e : dec.energies) CHECK_THAT(e, WithinRel(1.0, 1e-15));
    CHECK(unitarity_defect(dec) < 1e-14);
}

TEST_CASE("diagonalize: lab-scale entries", "[eigensystem]") {
    const double w = 6.2e5;
    const auto h =
        hermitian_operator(complex_matrix(2, {complex(0), complex(w), complex(w), complex(0)}));
    const auto dec = diagonalize(h);
    CHECK_THAT(dec.energies[0], WithinRel(-w, 1e-13));
    CHECK_THAT(dec.energies[1], WithinRel(w, 1e-13));
    CHECK(reconstruction_defect(dec, h) < 1e-10 * w);
}

TEST_CASE("basis round trip", "[eigensystem]") {
    std::mt19937 rng(7102);
    const auto h = testsupport::random_hermitian(5, rng);
    const auto dec = diagonalize(h);
    const auto rho = testsupport::random_density(5, rng);
    const complex_matrix back = qdec::from_eigenbasis(qdec::to_eigenbasis(rho.mat(), dec), dec);
    CHECK(qdec::max_abs_diff(back, rho.mat()) < 1e-13);
}

TEST_CASE("positivity diagnostic", "[eigensystem]") {
    CHECK_THAT(qdec::positivity_defect(density_matrix::pure({complex(1), complex(1)})),
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(qdec::positivity_defect(density_matrix::diagonal({0.5, 0.5})),
               WithinRel(0.5, 1e-14));
    // Unit-trace Hermitian matrix with spectrum {1.2, -0.2}: valid to build,
    // flagged by the diagnostic.
    const density_matrix bad(
        complex_matrix(2, {complex(0.5), complex(0.7), complex(0.7), complex(0.5)}));
    CHECK_THAT(qdec::positivity_defect(bad), WithinRel(-0.2, 1e-13));
}
