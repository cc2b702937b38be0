#include <doctest.h>

#include <bit>
#include <cmath>

#include "risim/detectors.hpp"
#include "risim/link.hpp"

using namespace risim;
using namespace risim::detect;

namespace {

channel::ChannelRealization draw(std::size_t n_r, std::size_t n, std::uint64_t b, double d2 = 0.0) {
    auto streams = channel::ChannelStreams::derive(23, 1, b);
    channel::FadingSpec spec;
    spec.csi_error_var = d2;
    return channel::draw_realization(n_r, n, spec, streams, true);
}

double sq_dist(std::span<const cdouble> a, const std::vector<cdouble>& b) {
    double d = 0.0;
    for (std::size_t m = 0; m < b.size(); ++m) d += std::norm(a[m] - b[m]);
    return d;
}

}  // namespace

TEST_CASE("RASM ML detection matches an exhaustive scan") {
    const auto table = mapping::select_predefined_acs(4);
    const auto c = mapping::build_constellation(mapping::ConstellationKind::psk, 4);
    RandomStream rng(5);
    std::size_t mismatches = 0;
    for (std::uint64_t t = 0; t < 10'000; ++t) {
        const auto ch = draw(4, 16, t, t % 2 ? 0.1 : 0.0);
        const std::size_t r = rng.uniform_index(table.size());
        const std::size_t k = rng.uniform_index(c.m);
        const auto part = ris::partition_res(16, table.entries[r]);
        const auto pm = ris::compute_phase_config(part, ch.h1, ch.h2_est);
        const auto y = ris::synthesize_received_rasm(ch, pm, c.points[k], 0.5, rng);

        Hypothesis best{};
        double best_d = INFINITY;
        for (std::size_t rr = 0; rr < table.size(); ++rr) {
            for (std::size_t kk = 0; kk < c.m; ++kk) {
                const double d = sq_dist(y, candidate_signal_rasm(ch, table, rr, kk, c));
                if (d < best_d) {
                    best_d = d;
                    best = {rr, kk};
                }
            }
        }
        mismatches += !(ml_detect_rasm(y, ch, table, c) == best);
    }
    CHECK(mismatches == 0);
}

TEST_CASE("RASSK ML detection matches an exhaustive scan") {
    const auto table = mapping::select_predefined_acs(5);
    RandomStream rng(6);
    std::size_t mismatches = 0;
    for (std::uint64_t t = 0; t < 10'000; ++t) {
        const auto ch = draw(5, 8, t);
        const std::size_t r = rng.uniform_index(table.size());
        const auto part = ris::partition_res(8, table.entries[r]);
        const auto pm = ris::compute_phase_config(part, ch.h1, ch.h2_est);
        const auto y = ris::synthesize_received_rassk(ch, pm, 2.0, 1.0, rng);
        std::size_t best = 0;
        double best_d = INFINITY;
        for (std::size_t rr = 0; rr < table.size(); ++rr) {
            const double d = sq_dist(y, candidate_signal_rassk(ch, table, rr, 2.0));
            if (d < best_d) {
                best_d = d;
                best = rr;
            }
        }
        mismatches += ml_detect_rassk(y, ch, table, 2.0) != best;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("noise-free signals are detected exactly") {
    const auto table = mapping::select_predefined_acs(4);
    const auto c = mapping::build_constellation(mapping::ConstellationKind::qam, 16);
    const auto ch = draw(4, 64, 1);
    for (std::size_t r = 0; r < table.size(); ++r) {
        for (std::size_t k = 0; k < c.m; ++k) {
            const auto y = candidate_signal_rasm(ch, table, r, k, c);
            CHECK(ml_detect_rasm(y, ch, table, c) == Hypothesis{r, k});
        }
    }
}

TEST_CASE("candidate bank distances") {
    CandidateBank bank(2, 3);
    bank.set(0, std::vector<cdouble>{{1, 0}, {0, 1}});
    bank.set(1, std::vector<cdouble>{{0, 0}, {0, 0}});
    bank.set(2, std::vector<cdouble>{{-1, 0}, {2, 0}});
    const std::vector<cdouble> y{{1, 0}, {0, 0}};
    std::vector<double> d(3);
    bank.distances(y, d);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(1.0));
    CHECK(d[2] == doctest::Approx(8.0));
    CHECK(bank.detect(y) == 0);
    CHECK(bank.candidate(2) == std::vector<cdouble>{{-1, 0}, {2, 0}});
    CHECK_THROWS_AS(bank.set(0, std::vector<cdouble>{{1, 0}}), Error);
}

TEST_CASE("maximum ratio combining") {
    const std::vector<cdouble> h{{1, 1}, {0, -2}, {0.5, 0}};
    const cdouble x{0.6, -0.8};
    std::vector<cdouble> y;
    for (auto v : h) y.push_back(v * x);
    CHECK(std::abs(mrc_combine(y, h) - x) < 1e-14);
    CHECK_THROWS_AS(mrc_combine(y, std::vector<cdouble>(3)), Error);
    CHECK_THROWS_AS(mrc_combine(y, std::vector<cdouble>(2, {1, 0})), Error);

    const auto c = mapping::build_constellation(mapping::ConstellationKind::psk, 8);
    for (std::size_t k = 0; k < 8; ++k) CHECK(nearest_symbol(c, c.points[k] * 0.9) == k);
}

TEST_CASE("eavesdropper symbol decision") {
    const auto c = mapping::build_constellation(mapping::ConstellationKind::psk, 4);
    const auto ch = draw(4, 16, 2);
    const auto part = ris::partition_res(16, mapping::AntennaCombination(4, {0}));
    const auto pm = ris::compute_phase_config(part, ch.h1, ch.h2_est);
    const cdouble e = ris::eve_response(ch.g2, ris::reflect_weights(pm, ch.h1));
    for (std::size_t k = 0; k < 4; ++k) CHECK(ml_detect_eve(e * c.points[k], ch.h1, ch.g2, pm, c) == k);
}

TEST_CASE("hypothesis words and zero-noise links for every scheme") {
    struct Case {
        Scheme s;
        std::size_t n_r, n_t, n_s, m;
    };
    const Case cases[] = {
        {Scheme::rasm, 4, 1, 0, 4},  {Scheme::rassk, 4, 1, 0, 2}, {Scheme::rsm, 4, 1, 0, 2},
        {Scheme::rssk, 8, 1, 0, 2},  {Scheme::rgsm, 6, 1, 3, 2},  {Scheme::rgssk, 6, 1, 3, 2},
        {Scheme::tsm, 2, 4, 0, 4},   {Scheme::tssk, 3, 8, 0, 2},  {Scheme::tasm, 2, 4, 0, 2},
        {Scheme::simo_mrc, 3, 1, 0, 8},
    };
    for (const auto& cs : cases) {
        CAPTURE(to_string(cs.s));
        SchemeConfig cfg;
        cfg.scheme = cs.s;
        cfg.n_r = cs.n_r;
        cfg.n_t = cs.n_t;
        cfg.n_s = cs.n_s;
        cfg.m = cs.m;
        cfg.n = 32;
        const link::LinkSetup setup(cfg);
        const auto& space = setup.space();
        std::vector<std::uint64_t> words;
        for (std::size_t h = 0; h < space.n_hyp(); ++h) words.push_back(space.word(h));
        std::sort(words.begin(), words.end());
        CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
        CHECK(words.back() < (std::uint64_t{1} << space.bits()));

        auto streams = link::TrialStreams::derive(3, 0, 0);
        const auto inst = setup.realize(streams, true);
        for (std::size_t h = 0; h < space.n_hyp(); ++h) {
            const auto y = inst.received(h, space);
            CHECK(setup.detect(inst, y) == h);
        }
        auto trial_streams = link::TrialStreams::derive(3, 0, 1);
        const auto counts = link::run_trial(setup, 0.0, trial_streams);
        CHECK(counts.bits == space.bits());
        CHECK(counts.errors == 0);
    }
}
