#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "spinchain/chain.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/models.hpp"
#include "spinchain/spectral.hpp"

#include "approx.hpp"
#include "oracles.hpp"

using namespace spinchain;

namespace {

double orthonormality_residual(const SpectralData& sd) {
    const Matrix vtv = kernels::serial::matmul(transpose(sd.eigenvectors), sd.eigenvectors);
    return max_abs_diff(vtv, Matrix::identity(sd.size()));
}

double reconstruction_residual(const SpectralData& sd, const Matrix& m) {
    Matrix lambda(sd.size(), sd.size());
    for (std::size_t k = 0; k < sd.size(); ++k) lambda(k, k) = sd.eigenvalues[k];
    const Matrix rebuilt = kernels::serial::matmul(
        kernels::serial::matmul(sd.eigenvectors, lambda), transpose(sd.eigenvectors));
    return max_abs_diff(rebuilt, m);
}

} // namespace

TEST_SUITE("spectral") {
    TEST_CASE("order-1 Krawtchouk has eigenvalues -1/2, 1/2") {
        const SpectralData sd = eigendecompose(krawtchouk(1));
        REQUIRE(sd.size() == 2);
        CHECK(sd.eigenvalues[0] == AbsApprox{-0.5, 1e-12});
        CHECK(sd.eigenvalues[1] == AbsApprox{0.5, 1e-12});
    }

    TEST_CASE("single-site chain is its own spectrum") {
        const SpectralData sd = eigendecompose(new_chain({}, {3.0}));
        REQUIRE(sd.size() == 1);
        CHECK(sd.eigenvalues[0] == 3.0);
        CHECK(sd.eigenvectors(0, 0) == 1.0);
    }

    TEST_CASE("order-4 Krawtchouk has the integer spectrum -2..2") {
        const SpectralData sd = eigendecompose(krawtchouk(4));
        const auto oracle = oracles::jacobi_rotation_eigenvalues(to_matrix(krawtchouk(4)));
        for (int k = 0; k < 5; ++k) {
            CHECK(sd.eigenvalues[k] == AbsApprox{k - 2.0, 1e-12});
            CHECK(sd.eigenvalues[k] == AbsApprox{oracle[k], 1e-11});
        }
    }

    TEST_CASE("random chains agree with the Sturm bisection oracle") {
        std::mt19937 rng(101);
        for (int rep = 0; rep < 40; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, rep % 13);
            const SpectralData sd = eigendecompose(c);
            const auto oracle = oracles::sturm_bisect_eigenvalues(c.fields, c.couplings);
            REQUIRE(sd.size() == oracle.size());
            for (std::size_t k = 0; k < oracle.size(); ++k)
                CHECK(sd.eigenvalues[k] == AbsApprox{oracle[k], 1e-9});
        }
    }

    TEST_CASE("spectral data invariants hold on random chains") {
        std::mt19937 rng(55);
        for (int rep = 0; rep < 25; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, rep % 10);
            const SpectralData sd = eigendecompose(c);
            CHECK(orthonormality_residual(sd) <= 1e-10);
            const Matrix m = to_matrix(c);
            const double scale = std::max(1e-300, max_abs(m));
            CHECK(reconstruction_residual(sd, m) / scale <= 1e-9);
            for (std::size_t k = 0; k + 1 < sd.size(); ++k)
                CHECK(sd.eigenvalues[k] <= sd.eigenvalues[k + 1]);
        }
    }

    TEST_CASE("badly scaled chains still decompose cleanly") {
        // couplings spanning many orders of magnitude stress the QL deflation
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> expo(-6.0, 6.0);
        std::uniform_real_distribution<double> field(-5.0, 5.0);
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t n = 1 + rep % 20;
            std::vector<double> j(n), b(n + 1);
            for (double& x : j) x = std::pow(10.0, expo(rng));
            for (double& x : b) x = field(rng) * std::pow(10.0, expo(rng));
            const ChainSpec c = new_chain(std::move(j), std::move(b));
            const SpectralData sd = eigendecompose(c);
            CHECK(orthonormality_residual(sd) <= 1e-12);
            const Matrix m = to_matrix(c);
            const double scale = std::max(1.0, max_abs(m));
            CHECK(reconstruction_residual(sd, m) / scale <= 1e-12);
        }
    }

    TEST_CASE("eigendecompose is deterministic") {
        std::mt19937 rng(77);
        const ChainSpec c = oracles::random_chain(rng, 9);
        const SpectralData a = eigendecompose(c);
        const SpectralData b = eigendecompose(c);
        CHECK(a.eigenvalues == b.eigenvalues);
        CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
    }

    TEST_CASE("degenerate spectra come out canonically ordered") {
        // zero couplings split the chain into independent sites with equal fields
        const ChainSpec c = new_chain({0.0, 0.0}, {1.0, 1.0, 1.0}, /*allow_signed=*/true);
        const SpectralData sd = eigendecompose(c);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(sd.eigenvalues[k] == AbsApprox{1.0, 1e-14});
            double first = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                if (sd.eigenvectors(i, k) != 0.0) {
                    first = sd.eigenvectors(i, k);
                    break;
                }
            CHECK(first > 0.0);
        }
    }

    TEST_CASE("dense path matches the tridiagonal path on chain matrices") {
        std::mt19937 rng(400);
        for (int rep = 0; rep < 10; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, 2 + rep);
            const SpectralData tri = eigendecompose(c);
            const SpectralData dense = eigendecompose_dense(to_matrix(c));
            for (std::size_t k = 0; k < tri.size(); ++k)
                CHECK(dense.eigenvalues[k] == AbsApprox{tri.eigenvalues[k], 1e-10});
            CHECK(orthonormality_residual(dense) <= 1e-10);
        }
    }

    TEST_CASE("dense path matches the Jacobi rotation oracle") {
        std::mt19937 rng(401);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int rep = 0; rep < 6; ++rep) {
            const std::size_t m = 3 + static_cast<std::size_t>(rep);
            Matrix a(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    a(i, j) = dist(rng);
                    a(j, i) = a(i, j);
                }
            const SpectralData sd = eigendecompose_dense(a);
            const auto oracle = oracles::jacobi_rotation_eigenvalues(a);
            for (std::size_t k = 0; k < m; ++k)
                CHECK(sd.eigenvalues[k] == AbsApprox{oracle[k], 1e-9});
            CHECK(reconstruction_residual(sd, a) <= 1e-10);
        }
    }

    TEST_CASE("propagator at t=0 is the identity") {
        const Propagator u = propagator(eigendecompose(krawtchouk(3)), 0.0);
        CHECK(max_abs_diff(u.entries, CMatrix::identity(4)) <= 1e-14);
    }

    TEST_CASE("order-1 Krawtchouk propagator at pi is -i times the swap") {
        const Propagator u = propagator(eigendecompose(krawtchouk(1)), std::numbers::pi);
        CMatrix expected(2, 2);
        expected(0, 1) = complex(0.0, -1.0);
        expected(1, 0) = complex(0.0, -1.0);
        CHECK(max_abs_diff(u.entries, expected) <= 1e-12);
    }

    TEST_CASE("propagators compose under time addition") {
        const SpectralData sd = eigendecompose(krawtchouk(5));
        const CMatrix u1 = propagator(sd, 0.7).entries;
        const CMatrix u2 = propagator(sd, 1.9).entries;
        const CMatrix u12 = propagator(sd, 2.6).entries;
        CHECK(max_abs_diff(kernels::serial::cmatmul(u1, u2), u12) <= 1e-9);
    }

    TEST_CASE("propagator is unitary") {
        std::mt19937 rng(9);
        for (int rep = 0; rep < 10; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, 1 + rep);
            const Propagator u = propagator(eigendecompose(c), 0.3 + rep);
            const CMatrix uu = kernels::serial::cmatmul(u.entries, adjoint(u.entries));
            CHECK(max_abs_diff(uu, CMatrix::identity(c.sites())) <= 1e-9);
        }
    }

    TEST_CASE("evolve preserves the norm for random states and times") {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> time(0.0, 100.0);
        for (int rep = 0; rep < 30; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, 1 + rep % 9);
            const SpectralData sd = eigendecompose(c);
            const auto psi0 = oracles::random_state(rng, c.sites());
            const auto psi = evolve(sd, psi0, time(rng));
            double norm2 = 0.0;
            for (const complex& a : psi) norm2 += std::norm(a);
            CHECK(std::abs(std::sqrt(norm2) - 1.0) <= 1e-9);
        }
    }

    TEST_CASE("evolution is time reversible") {
        std::mt19937 rng(31337);
        for (int rep = 0; rep < 15; ++rep) {
            const ChainSpec c = oracles::random_chain(rng, 1 + rep % 7);
            const SpectralData sd = eigendecompose(c);
            const auto psi0 = oracles::random_state(rng, c.sites());
            const double t = 0.5 + rep;
            const auto forth = evolve(sd, psi0, t);
            const auto back = evolve(sd, forth, -t);
            double worst = 0.0;
            for (std::size_t i = 0; i < psi0.size(); ++i)
                worst = std::max(worst, std::abs(back[i] - psi0[i]));
            CHECK(worst <= 1e-9);
        }
    }

    TEST_CASE("evolve at t=0 returns the input") {
        std::mt19937 rng(5);
        const ChainSpec c = oracles::random_chain(rng, 6);
        const auto psi0 = oracles::random_state(rng, 7);
        const auto psi = evolve(eigendecompose(c), psi0, 0.0);
        for (std::size_t i = 0; i < psi0.size(); ++i)
            CHECK(std::abs(psi[i] - psi0[i]) <= 1e-12);
    }

    TEST_CASE("eigenvectors are stationary states") {
        const ChainSpec c = krawtchouk(4);
        const SpectralData sd = eigendecompose(c);
        for (std::size_t k = 0; k < sd.size(); ++k) {
            std::vector<complex> vk(sd.size());
            for (std::size_t i = 0; i < sd.size(); ++i) vk[i] = sd.eigenvectors(i, k);
            const double t = 2.1;
            const auto psi = evolve(sd, vk, t);
            const complex phase = std::polar(1.0, -t * sd.eigenvalues[k]);
            double worst = 0.0;
            for (std::size_t i = 0; i < sd.size(); ++i)
                worst = std::max(worst, std::abs(psi[i] - phase * vk[i]));
            CHECK(worst <= 1e-9);
        }
    }

    TEST_CASE("end-site excitation crosses the order-2 Krawtchouk chain at pi") {
        const ChainSpec c = krawtchouk(2);
        std::vector<complex> e0{1.0, 0.0, 0.0};
        const auto psi = evolve(eigendecompose(c), e0, std::numbers::pi);
        CHECK(std::abs(psi[2]) == AbsApprox{1.0, 1e-10});
    }

    TEST_CASE("evolve rejects bad states") {
        const SpectralData sd = eigendecompose(krawtchouk(2));
        CHECK_THROWS_AS(evolve(sd, std::vector<complex>{1.0, 0.0}, 1.0), DimensionMismatch);
        CHECK_THROWS_AS(evolve(sd, std::vector<complex>{0.5, 0.0, 0.0}, 1.0), NotNormalized);
    }
}
