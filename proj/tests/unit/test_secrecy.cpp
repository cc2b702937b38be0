#include <doctest.h>

#include <cmath>
#include <numbers>

#include "risim/link.hpp"
#include "risim/secrecy.hpp"

using namespace risim;
using namespace risim::secrecy;

namespace {

SchemeConfig make(Scheme s, std::size_t n_r, std::size_t n, std::size_t m = 2) {
    SchemeConfig cfg;
    cfg.scheme = s;
    cfg.n_r = n_r;
    cfg.n = n;
    cfg.m = m;
    return cfg;
}

/// I(X;Y) = h(Y) - h(Y|X) from absolute Gaussian-mixture densities, with its own draws.
double mixture_entropy_rate(const SchemeConfig& cfg, double snr_db, std::size_t samples) {
    const link::LinkSetup setup(cfg);
    const auto& space = setup.space();
    const double n0 = noise_variance(cfg, snr_db);
    const std::size_t h_count = space.n_hyp();
    RandomStream rng(4242);
    double h_y = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto streams = link::TrialStreams::derive(999, 5, s);
        const auto inst = setup.realize(streams, false);
        const std::size_t h = rng.uniform_index(h_count);
        auto y = inst.received(h, space);
        for (auto& v : y) v += rng.complex_gaussian(n0);
        double p = 0.0;
        for (std::size_t j = 0; j < h_count; ++j) {
            const auto g = inst.received(j, space);
            double d = 0.0;
            for (std::size_t m = 0; m < y.size(); ++m) d += std::norm(y[m] - g[m]);
            p += std::exp(-d / n0) / std::pow(std::numbers::pi * n0, static_cast<double>(y.size()));
        }
        h_y -= std::log2(p / static_cast<double>(h_count));
    }
    h_y /= static_cast<double>(samples);
    const double h_y_given_x = static_cast<double>(cfg.n_r) * std::log2(std::numbers::e * std::numbers::pi * n0);
    return h_y - h_y_given_x;
}

}  // namespace

TEST_CASE("secrecy rate clamp") {
    CHECK(secrecy_rate(3.0, 0.5) == 2.5);
    CHECK(secrecy_rate(0.2, 0.5) == 0.0);
    CHECK(secrecy_rate(1.7, 0.0) == 1.7);
}

TEST_CASE("Bob's rate hits its limits") {
    const auto cfg = make(Scheme::rasm, 4, 8);
    CHECK(estimate_rate_bob_rasm(cfg, 60.0, 2000, 1).rate == doctest::Approx(4.0).scale(0.0).epsilon(0.05 / 4.0));
    CHECK(estimate_rate_bob_rasm(cfg, -40.0, 2000, 1).rate < 0.05);
    const auto ssk = make(Scheme::rassk, 4, 8);
    CHECK(std::abs(estimate_rate_bob_rassk(ssk, 60.0, 2000, 1).rate - 3.0) < 0.05);
    CHECK(estimate_rate_bob_rassk(ssk, -40.0, 2000, 1).rate < 0.05);
    CHECK_THROWS_AS(estimate_rate_bob_rassk(cfg, 0.0, 2000, 1), Error);
    CHECK_THROWS_AS(estimate_rate_bob_rasm(cfg, 0.0, 10, 1), Error);
}

TEST_CASE("Eve's rate under the AC guess penalty") {
    const auto m2 = make(Scheme::rasm, 4, 8, 2);
    const auto m4 = make(Scheme::rasm, 4, 8, 4);
    const double e2 = estimate_rate_eve_rasm(m2, 30.0, 2000, 2).rate;
    const double e4 = estimate_rate_eve_rasm(m4, 30.0, 2000, 2).rate;
    CHECK(e2 <= 0.5);
    CHECK(e4 <= 0.5);
    CHECK(std::abs(e2 - 0.5) < 0.05);
    CHECK(std::abs(e4 - 0.5) < 0.05);
    CHECK(estimate_rate_eve_rasm(m2, 60.0, 2000, 2).rate == doctest::Approx(0.5).scale(0.0).epsilon(0.05));
    for (double snr : {-20.0, 0.0, 10.0}) CHECK(estimate_rate_eve_rasm(m2, snr, 1000, 3).rate <= 0.5);
    CHECK(estimate_rate_eve(make(Scheme::rassk, 4, 8), 20.0, 1000, 3).rate == 0.0);
}

TEST_CASE("DCMC against a mixture-entropy oracle") {
    SUBCASE("RASM with two ACs") {
        const auto cfg = make(Scheme::rasm, 2, 8, 2);
        const double oracle = mixture_entropy_rate(cfg, -12.0, 40'000);
        const double rate = estimate_rate_bob(cfg, -12.0, 40'000, 11).rate;
        CHECK(rate > 0.3);
        CHECK(rate < 1.9);
        CHECK(std::abs(rate - oracle) < 0.05);
    }
    SUBCASE("RASSK with two ACs") {
        const auto cfg = make(Scheme::rassk, 2, 8);
        const double oracle = mixture_entropy_rate(cfg, -8.0, 40'000);
        const double rate = estimate_rate_bob(cfg, -8.0, 40'000, 12).rate;
        CHECK(rate > 0.1);
        CHECK(rate < 0.95);
        CHECK(std::abs(rate - oracle) < 0.05);
    }
}

TEST_CASE("secrecy estimates") {
    const auto cfg = make(Scheme::rasm, 4, 8);
    const auto a = estimate_secrecy(cfg, 0.0, 2000, 5);
    const auto b = estimate_secrecy(cfg, 0.0, 2000, 5);
    CHECK(a.r_b == b.r_b);
    CHECK(a.r_e == b.r_e);
    CHECK(a.sr == secrecy_rate(a.r_b, a.r_e));
    CHECK(a.samples == 2000);
    CHECK(a.r_b >= 0.0);
    CHECK(a.r_b <= 4.0);
    CHECK(a.std_err > 0.0);

    // Standard error shrinks as samples^-1/2.
    const auto c = estimate_secrecy(cfg, 0.0, 8000, 6);
    CHECK(c.std_err < a.std_err);
    CHECK(c.std_err == doctest::Approx(a.std_err / 2.0).scale(0.0).epsilon(0.25));

    const auto ssk = estimate_secrecy(make(Scheme::rassk, 4, 8), 0.0, 2000, 5);
    CHECK(ssk.r_e == 0.0);
    CHECK(ssk.sr == ssk.r_b);

    // SR grows with SNR and with the element count until Bob's rate saturates;
    // past that point Eve's rising rate shaves a few thousandths off the SR.
    double prev = 0.0, prev_se = 0.0;
    for (double snr = -30.0; snr <= 0.0; snr += 10.0) {
        const auto e = estimate_secrecy(cfg, snr, 2000, 7);
        CHECK(e.sr >= prev - 2.0 * std::hypot(e.std_err, prev_se));
        const auto e16 = estimate_secrecy(make(Scheme::rasm, 4, 16), snr, 2000, 7);
        CHECK(e16.sr >= e.sr - 2.0 * std::hypot(e.std_err, e16.std_err));
        prev = e.sr;
        prev_se = e.std_err;
    }
}

TEST_CASE("baseline rate estimators") {
    SchemeConfig simo = make(Scheme::simo_mrc, 3, 8, 8);
    const auto s = estimate_secrecy(simo, 60.0, 1000, 1);
    CHECK(s.r_b == doctest::Approx(3.0).scale(0.0).epsilon(0.02));
    CHECK(s.sr >= 0.0);
    SchemeConfig tssk = make(Scheme::tssk, 3, 8);
    tssk.n_t = 8;
    const auto t = estimate_secrecy(tssk, 60.0, 1000, 1);
    CHECK(t.r_b == doctest::Approx(3.0).scale(0.0).epsilon(0.02));
    CHECK(t.r_e <= 3.0);
}
