#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ci2/git.hpp"

using namespace ci2;

namespace {

using MF = MultiForm<Rat>;

// random (N+1) x N matrix of full rank N
Mat<Rat> random_full_rank(int n, Rng& rng) {
    for (;;) {
        Mat<Rat> m(n + 1, n, {});
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform(-5, 5), 1);
        if (rank_of(m) == n) return m;
    }
}

// random (N+1) x N matrix of rank < N (last column a combination of others)
Mat<Rat> random_rank_deficient(int n, Rng& rng) {
    for (;;) {
        Mat<Rat> m = random_full_rank(n, rng);
        for (int i = 0; i <= n; ++i) {
            Rat acc;
            for (int j = 0; j < n - 1; ++j) acc += m(i, j) * Rat(j + 1, 1);
            m(i, n - 1) = acc;
        }
        if (rank_of(m) < n) return m;
    }
}

MF random_hypersurface(int n, int d2, Rng& rng) {
    for (;;) {
        auto f = random_multiform<Rat>(n, d2, {}, rng);
        if (!f.is_zero()) return f;
    }
}

} // namespace

TEST_CASE("weighted degree") {
    Rng rng(1);
    // F = X_N^{d2}: deg_lambda = d2 * lambda_N
    for (int n = 2; n <= 4; ++n) {
        int d2 = 3;
        std::vector<int> m(n, 0);
        m[n - 1] = d2;
        auto f = MF::monomial(n, m, Rat(1, 1), {});
        for (const auto& w : weight_grid(n, 2)) {
            OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
            CHECK(deg_lambda(f, lam) == d2 * w[n - 1]);
        }
    }
    // bounds for the certificate weights (-1,..,-1,N-1)
    for (int n = 2; n <= 4; ++n) {
        int d2 = static_cast<int>(rng.uniform(2, 4));
        std::vector<long> w(n, -1);
        w[n - 1] = n - 1;
        OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
        for (int trial = 0; trial < 20; ++trial) {
            auto f = random_hypersurface(n, d2, rng);
            long d = deg_lambda(f, lam);
            CHECK(d >= -d2);
            CHECK(d <= static_cast<long>(d2) * (n - 1));
        }
    }
    // N=2, F = X1 X2^2, lambda = (-1,1): max over the single monomial = 1
    MF f(2, 3, {});
    f.set_coeff({1, 2}, Rat(1, 1));
    OnePS<Rat> lam({-1, 1}, Mat<Rat>::identity(2, {}));
    CHECK(deg_lambda(f, lam) == 1);
}

TEST_CASE("the two paper-pinned mu values") {
    Rng rng(5);
    for (int n = 2; n <= 4; ++n) {
        int d2 = 3;
        // rank-N M, polarization (0,1): mu = lambda_N > 0 for every grid 1-PS
        for (int trial = 0; trial < 10; ++trial) {
            GitPoint<Rat> x(random_hypersurface(n, d2, rng), random_full_rank(n, rng));
            for (const auto& w : weight_grid(n, 3)) {
                OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
                CHECK(mu_weight(x, lam, Rat(), Rat(1, 1)) == Rat(w[n - 1], 1));
                CHECK(w[n - 1] > 0);  // sorted, zero-sum, not all zero
            }
        }
        // last column zero, lambda = (-1,..,-1,N-1), (0,1): mu = -1
        for (int trial = 0; trial < 10; ++trial) {
            Mat<Rat> m(n + 1, n, {});
            bool nz = false;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j < n - 1; ++j) {
                    m(i, j) = Rat(rng.uniform(-5, 5), 1);
                    if (!m(i, j).is_zero()) nz = true;
                }
            if (!nz) continue;
            GitPoint<Rat> x(random_hypersurface(n, d2, rng), m);
            std::vector<long> w(n, -1);
            w[n - 1] = n - 1;
            OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
            CHECK(mu_weight(x, lam, Rat(), Rat(1, 1)) == Rat(-1, 1));
            // (eps, 1): mu = -1 + eps deg_lambda(F)
            Rat eps(1, 100);
            CHECK(mu_weight(x, lam, eps, Rat(1, 1)) ==
                  Rat(-1, 1) + eps * Rat(deg_lambda(x.F, lam), 1));
        }
    }
}

TEST_CASE("mu is invariant under row operations on M") {
    Rng rng(9);
    int n = 3, d2 = 3;
    for (int trial = 0; trial < 10; ++trial) {
        GitPoint<Rat> x(random_hypersurface(n, d2, rng), random_full_rank(n, rng));
        // row operations act on the P^N side and leave the column pattern alone
        Mat<Rat> m2 = x.M;
        for (int j = 0; j < n; ++j) {
            Rat c(rng.uniform(-3, 3), 1);
            m2(0, j) += c * m2(2, j);
        }
        GitPoint<Rat> y(x.F, m2);
        for (const auto& w : weight_grid(n, 2)) {
            OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
            CHECK(mu_matrix(x, lam) == mu_matrix(y, lam));
        }
    }
}

TEST_CASE("stability inequality chain for rank-N points") {
    // mu = lambda_N + eps deg_lambda(F) >= lambda_N + eps d2 lambda_1
    //    = lambda_N - eps d2 (lambda_2+..+lambda_N) >= lambda_N (1 - eps d2 (N-1)) > 0
    Rng rng(13);
    for (int n = 2; n <= 4; ++n) {
        int d2 = 3;
        Rat eps(1, static_cast<long>(d2) * (n - 1) + 1);  // eps < 1/(d2(N-1))
        for (int trial = 0; trial < 5; ++trial) {
            GitPoint<Rat> x(random_hypersurface(n, d2, rng), random_full_rank(n, rng));
            for (const auto& w : weight_grid(n, 6)) {
                OnePS<Rat> lam(w, Mat<Rat>::identity(n, {}));
                Rat mu = mu_weight(x, lam, eps, Rat(1, 1));
                long tail = 0;
                for (int i = 1; i < n; ++i) tail += w[i];
                Rat step1 = Rat(w[n - 1], 1) + eps * Rat(static_cast<long>(d2) * w[0], 1);
                Rat step2 = Rat(w[n - 1], 1) - eps * Rat(static_cast<long>(d2) * tail, 1);
                Rat step3 = Rat(w[n - 1], 1) * (Rat(1, 1) - eps * Rat(static_cast<long>(d2) * (n - 1), 1));
                CHECK(mu.value() >= step1.value());
                CHECK(step1 == step2);  // sum of weights is zero
                CHECK(step2.value() >= step3.value());
                CHECK(step3.value() > 0);
            }
        }
    }
}

TEST_CASE("destabilize finds the certificate for rank-deficient matrices") {
    Rng rng(17);
    for (int n = 2; n <= 4; ++n) {
        int d2 = 3;
        Rat eps(1, static_cast<long>(d2) * (n - 1) + 1);
        for (int trial = 0; trial < 8; ++trial) {
            GitPoint<Rat> x(random_hypersurface(n, d2, rng), random_rank_deficient(n, rng));
            auto lam = destabilize(x, eps, Rat(1, 1), 6);
            REQUIRE(lam.has_value());
            Rat mu = mu_weight(x, *lam, eps, Rat(1, 1));
            CHECK(mu.value() < 0);
            // the certificate route: mu = -1 + eps deg <= -1 + eps d2 (N-1) < 0
            auto cert = kernel_certificate(x);
            REQUIRE(cert.has_value());
            Rat mu_cert = mu_weight(x, *cert, eps, Rat(1, 1));
            CHECK(mu_cert == Rat(-1, 1) + eps * Rat(deg_lambda(x.F, *cert), 1));
            CHECK(mu_cert.value() < 0);
        }
        // rank-N points: no destabilizer in the grid for (0,1)
        for (int trial = 0; trial < 3; ++trial) {
            GitPoint<Rat> x(random_hypersurface(n, d2, rng), random_full_rank(n, rng));
            CHECK(!destabilize(x, Rat(), Rat(1, 1), 4).has_value());
        }
    }
}
