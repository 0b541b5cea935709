#include "doctest.h"

#include <cmath>
#include <numbers>

#include "spinchain/chain.hpp"
#include "spinchain/models.hpp"
#include "spinchain/spectral.hpp"

#include "approx.hpp"

using namespace spinchain;

TEST_SUITE("models") {
    TEST_CASE("krawtchouk couplings follow the square-root profile") {
        CHECK(krawtchouk(1).couplings == std::vector<double>{0.5});
        const ChainSpec k3 = krawtchouk(3);
        CHECK(k3.couplings[0] == AbsApprox{0.5 * std::sqrt(3.0), 1e-15});
        CHECK(k3.couplings[1] == AbsApprox{1.0, 1e-15});
        CHECK(k3.couplings[2] == AbsApprox{0.5 * std::sqrt(3.0), 1e-15});
        for (double b : k3.fields) CHECK(b == 0.0);
    }

    TEST_CASE("krawtchouk chains are mirror-symmetric") {
        for (std::size_t n = 0; n <= 12; ++n) CHECK(is_mirror_symmetric(krawtchouk(n)));
    }

    TEST_CASE("uniform chain is all ones with zero field") {
        const ChainSpec u = uniform(3);
        CHECK(u.couplings == std::vector<double>{1.0, 1.0, 1.0});
        CHECK(u.fields == std::vector<double>{0.0, 0.0, 0.0, 0.0});
        CHECK(is_mirror_symmetric(u));
    }

    TEST_CASE("shift by zero changes nothing") {
        const ChainSpec base = krawtchouk(4);
        const ChainSpec s = shift_fields(base, 0.0);
        CHECK(s.couplings == base.couplings);
        CHECK(s.fields == base.fields);
    }

    TEST_CASE("shifting fields shifts the whole spectrum") {
        const ChainSpec base = krawtchouk(6);
        const double c = -1.75;
        const auto before = eigendecompose(base).eigenvalues;
        const auto after = eigendecompose(shift_fields(base, c)).eigenvalues;
        for (std::size_t k = 0; k < before.size(); ++k)
            CHECK(after[k] == AbsApprox{before[k] + c, 1e-10});
    }

    TEST_CASE("half-shifted order-1 chain inverts exactly at pi") {
        // e^{-i pi (J - I/2)} equals the swap with no leftover phase
        const ChainSpec shifted = shift_fields(krawtchouk(1), -0.5);
        const CMatrix u = propagator(eigendecompose(shifted), std::numbers::pi).entries;
        CMatrix expected(2, 2);
        expected(0, 1) = 1.0;
        expected(1, 0) = 1.0;
        CHECK(max_abs_diff(u, expected) <= 1e-12);
    }
}
