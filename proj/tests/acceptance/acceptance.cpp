// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "risim/analysis.hpp"
#include "risim/baselines.hpp"
#include "risim/detectors.hpp"
#include "risim/harness.hpp"
#include "risim/secrecy.hpp"

using namespace risim;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SchemeConfig base(Scheme s, std::size_t n_r, std::size_t n, std::size_t m = 2) {
    SchemeConfig cfg;
    cfg.scheme = s;
    cfg.n_r = n_r;
    cfg.n = n;
    cfg.m = m;
    return cfg;
}

harness::SweepRow ber_at(SchemeConfig cfg, double snr_db) {
    cfg.snr_start_db = snr_db;
    cfg.snr_stop_db = snr_db;
    return harness::run_ber_sweep(cfg).rows.front();
}

bool separated(const harness::SweepRow& lo, const harness::SweepRow& hi) {
    return lo.ci95.high < hi.ci95.low;
}

Outcome ber_target() {
    auto cfg = base(Scheme::rasm, 4, 16);
    cfg.max_trials = 3'000'000;
    const auto row = ber_at(cfg, 10.0);
    return {row.ber < 1e-5 && row.trials <= 3'000'000,
            fmt("RASM Nr=4 N=16 M=2 at 10 dB: BER %.3g (%llu errors / %llu trials)", row.ber,
                static_cast<unsigned long long>(row.bit_errors), static_cast<unsigned long long>(row.trials))};
}

Outcome bound_dominance() {
    std::string detail;
    bool dominant = true;
    double ratio[2] = {NAN, NAN};
    const std::size_t sizes[2] = {8, 16};
    for (int j = 0; j < 2; ++j) {
        auto cfg = base(Scheme::rasm, 4, sizes[j]);
        cfg.snr_start_db = -6.0;
        cfg.snr_stop_db = 10.0;
        cfg.snr_step_db = 2.0;
        cfg.max_trials = 1'000'000;
        cfg.with_bound = true;
        const auto sweep = harness::run_ber_sweep(cfg);
        for (const auto& row : sweep.rows) {
            if (row.bit_errors < 100 || row.ber > 1e-2 || !row.aber_bound) continue;
            ratio[j] = *row.aber_bound / row.ber;
            if (*row.aber_bound < row.ci95.low) {
                dominant = false;
                detail += fmt(" N=%zu %g dB bound %.3g < BER %.3g;", sizes[j], row.snr_db, *row.aber_bound, row.ber);
            }
        }
    }
    const bool converging = ratio[1] < ratio[0];
    detail += fmt(" bound/BER at highest counted SNR: N=8 %.3g, N=16 %.3g", ratio[0], ratio[1]);
    return {dominant && converging, "union bound vs simulated BER:" + detail};
}

Outcome spectral_efficiency_table() {
    using analysis::spectral_efficiency;
    struct Row {
        const char* name;
        std::size_t got, want;
    };
    const std::size_t rgssk_want = static_cast<std::size_t>(std::bit_width(baselines::binomial(7, 3)) - 1);
    const Row rows[] = {
        {"RASM(Nd=5,M=2)", spectral_efficiency(Scheme::rasm, 5, 2), 5},
        {"RASSK(Nd=6)", spectral_efficiency(Scheme::rassk, 6, 2), 5},
        {"RSM(Nd=16,M=2)", spectral_efficiency(Scheme::rsm, 16, 2), 5},
        {"RGSM(Nd=6,Ns=3,M=2)", spectral_efficiency(Scheme::rgsm, 6, 2, 3), 5},
        {"RGSSK(Nd=7,Ns=3)", spectral_efficiency(Scheme::rgssk, 7, 2, 3), rgssk_want},
    };
    bool ok = rgssk_want == 5;
    std::string detail;
    for (const auto& r : rows) {
        ok = ok && r.got == r.want;
        detail += fmt(" %s=%zu", r.name, r.got);
    }
    return {ok, "SE:" + detail};
}

Outcome complexity() {
    using analysis::detection_complexity;
    bool ok = detection_complexity(Scheme::rassk, 4, 8, 8) == 1656 &&
              detection_complexity(Scheme::rasm, 4, 8, 8, 2) == 3312;
    std::size_t checked = 0;
    for (std::size_t n_r = 1; n_r <= 8; ++n_r) {
        for (std::size_t n : {4u, 8u, 16u, 32u, 64u}) {
            for (std::size_t d : {1u, 2u, 8u, 128u}) {
                for (std::size_t m : {2u, 4u, 8u, 64u}) {
                    const std::uint64_t base_ops = 2 * n_r * (2 * n + 1 + 2 * n_r) + n - 1;
                    ok = ok && detection_complexity(Scheme::rassk, n_r, n, d) == base_ops * d &&
                         detection_complexity(Scheme::rasm, n_r, n, d, m) ==
                             m * detection_complexity(Scheme::rassk, n_r, n, d);
                    ++checked;
                }
            }
        }
    }
    return {ok, fmt("C_RASSK(4,8,8)=%llu, C_RASM=M*C_RASSK over %zu configs",
                    static_cast<unsigned long long>(detection_complexity(Scheme::rassk, 4, 8, 8)), checked)};
}

Outcome matched_rate_ordering() {
    auto common = [](Scheme s, std::size_t n_d, std::size_t n_s) {
        auto cfg = base(s, 16, 8);
        cfg.n_d = n_d;
        cfg.n_s = n_s;
        cfg.min_errors = 2000;
        cfg.max_trials = 3'000'000;
        return cfg;
    };
    const auto rasm = ber_at(common(Scheme::rasm, 5, 0), 0.0);
    const auto rgsm = ber_at(common(Scheme::rgsm, 6, 3), 0.0);
    const auto rassk = ber_at(common(Scheme::rassk, 6, 0), 0.0);
    const auto rgssk = ber_at(common(Scheme::rgssk, 7, 3), 0.0);
    return {separated(rasm, rgsm) && separated(rassk, rgssk),
            fmt("0 dB, 5 bpcu: RASM %.3g < RGSM %.3g; RASSK %.3g < RGSSK %.3g", rasm.ber, rgsm.ber, rassk.ber,
                rgssk.ber)};
}

Outcome rician_degradation() {
    auto cfg = base(Scheme::rassk, 8, 32);
    cfg.n_d = 5;
    cfg.min_errors = 2000;
    auto k5 = cfg;
    k5.fading.rician_k = 5.0;
    auto k15 = cfg;
    k15.fading.rician_k = 15.0;
    const auto a = ber_at(k5, -5.0);
    const auto b = ber_at(k15, -5.0);
    return {separated(a, b), fmt("RASSK Nr=8 at -5 dB: K=5 %.3g < K=15 %.3g", a.ber, b.ber)};
}

Outcome imperfect_csi() {
    auto rasm = base(Scheme::rasm, 4, 16);
    auto rassk = base(Scheme::rassk, 5, 16);
    for (auto* c : {&rasm, &rassk}) {
        c->min_errors = 2000;
        c->snr_start_db = 0.0;
        c->snr_stop_db = 0.0;
    }
    auto csv = [](const SchemeConfig& c) {
        std::ostringstream os;
        harness::write_ber_csv(os, harness::run_ber_sweep(c));
        return os.str();
    };
    bool identical = true;
    for (const auto& c : {rasm, rassk}) {
        SchemeConfig zero;
        auto text = harness::describe_config(c);
        text["csi_error_var"] = "0";
        harness::apply_config(zero, text);
        identical = identical && csv(zero) == csv(c);
    }
    bool increases = true;
    bool robust = true;
    std::string detail;
    const auto p_rasm = ber_at(rasm, 0.0);
    const auto p_rassk = ber_at(rassk, 0.0);
    for (double d2 : {0.05, 0.2}) {
        auto a = rasm;
        a.fading.csi_error_var = d2;
        auto b = rassk;
        b.fading.csi_error_var = d2;
        const auto ea = ber_at(a, 0.0);
        const auto eb = ber_at(b, 0.0);
        increases = increases && separated(p_rasm, ea) && separated(p_rassk, eb);
        const double fa = ea.ber / p_rasm.ber;
        const double fb = eb.ber / p_rassk.ber;
        robust = robust && fb <= fa;
        detail += fmt(" d2=%g inflation RASM %.3g RASSK %.3g;", d2, fa, fb);
    }
    return {identical && increases && robust,
            fmt("zero-error run identical: %s; BER rises: %s;", identical ? "yes" : "no", increases ? "yes" : "no") +
                detail};
}

Outcome secrecy_ordering() {
    auto grid = [](SchemeConfig cfg) {
        cfg.snr_start_db = -30.0;
        cfg.snr_stop_db = 30.0;
        cfg.snr_step_db = 10.0;
        cfg.sr_samples = 4000;
        return harness::run_sr_sweep(cfg).rows;
    };
    const auto rasm = grid(base(Scheme::rasm, 4, 8, 2));
    const auto rassk = grid(base(Scheme::rassk, 4, 8));
    const auto simo = grid(base(Scheme::simo_mrc, 3, 8, 8));
    auto tsm_cfg = base(Scheme::tsm, 3, 8, 2);
    tsm_cfg.n_t = 4;
    const auto tsm = grid(tsm_cfg);
    auto tssk_cfg = base(Scheme::tssk, 3, 8);
    tssk_cfg.n_t = 8;
    const auto tssk = grid(tssk_cfg);

    auto at_least = [](const harness::SweepRow& a, const harness::SweepRow& b) {
        return *a.sr >= *b.sr - 2.0 * std::hypot(*a.std_err, *b.std_err);
    };
    bool ssk_over_sm = true;
    bool over_baselines = true;
    bool non_negative = true;
    std::string misses;
    for (std::size_t i = 0; i < rasm.size(); ++i) {
        const double snr = rasm[i].snr_db;
        if (!at_least(rassk[i], rasm[i])) {
            ssk_over_sm = false;
            misses += fmt(" %g dB RASSK %.3g < RASM %.3g;", snr, *rassk[i].sr, *rasm[i].sr);
        }
        const std::pair<const char*, const harness::SweepRow*> proposed[] = {{"RASM", &rasm[i]}, {"RASSK", &rassk[i]}};
        const std::pair<const char*, const harness::SweepRow*> others[] = {
            {"SIMO-MRC", &simo[i]}, {"TSM", &tsm[i]}, {"TSSK", &tssk[i]}};
        for (const auto& [pn, p] : proposed) {
            for (const auto& [on, o] : others) {
                if (!at_least(*p, *o)) {
                    over_baselines = false;
                    misses += fmt(" %g dB %s %.3g < %s %.3g;", snr, pn, *p->sr, on, *o->sr);
                }
            }
        }
        for (const auto* rows : {&rasm, &rassk, &simo, &tsm, &tssk}) non_negative = non_negative && *(*rows)[i].sr >= 0.0;
    }
    return {ssk_over_sm && over_baselines && non_negative,
            fmt("RASSK>=RASM: %s; proposed>=baselines: %s; SR>=0: %s;", ssk_over_sm ? "yes" : "no",
                over_baselines ? "yes" : "no", non_negative ? "yes" : "no") +
                misses};
}

Outcome oracle_suite() {
    std::vector<std::string> failed;

    {  // ML against exhaustive scan
        const auto table = mapping::select_predefined_acs(4);
        const auto c = mapping::build_constellation(mapping::ConstellationKind::psk, 4);
        RandomStream rng(1);
        std::size_t bad = 0;
        for (std::uint64_t t = 0; t < 10'000; ++t) {
            auto streams = channel::ChannelStreams::derive(2, 0, t);
            const auto ch = channel::draw_realization(4, 16, channel::FadingSpec{}, streams, false);
            const std::size_t r = rng.uniform_index(table.size());
            const std::size_t k = rng.uniform_index(4);
            auto y = detect::candidate_signal_rasm(ch, table, r, k, c);
            ris::add_noise(y, 0.3, rng);
            detect::Hypothesis best{};
            double best_d = INFINITY;
            for (std::size_t rr = 0; rr < table.size(); ++rr) {
                for (std::size_t kk = 0; kk < 4; ++kk) {
                    const auto g = detect::candidate_signal_rasm(ch, table, rr, kk, c);
                    double d = 0.0;
                    for (std::size_t m = 0; m < 4; ++m) d += std::norm(y[m] - g[m]);
                    if (d < best_d) {
                        best_d = d;
                        best = {rr, kk};
                    }
                }
            }
            bad += !(detect::ml_detect_rasm(y, ch, table, c) == best);
        }
        if (bad != 0) failed.push_back("ML");
    }
    {  // mapping bijections
        bool ok = true;
        for (std::size_t n_r = 2; n_r <= 6; ++n_r) {
            const auto t = mapping::select_predefined_acs(n_r);
            std::set<std::vector<std::size_t>> seen;
            for (std::uint64_t w = 0; w < t.size(); ++w) {
                const auto bits = mapping::index_to_bits(w, t.bits_per_ac);
                const auto ac = mapping::bits_to_ac(t, bits);
                seen.insert(ac.antennas());
                ok = ok && mapping::ac_to_bits(t, ac) == bits;
            }
            ok = ok && seen.size() == (std::size_t{1} << (n_r - 1));
        }
        if (!ok) failed.push_back("bijection");
    }
    {  // phase alignment maximality
        bool ok = true;
        const mapping::AntennaCombination ac(4, {0, 2});
        for (std::uint64_t b = 0; b < 1000; ++b) {
            auto streams = channel::ChannelStreams::derive(3, 0, b);
            const auto ch = channel::draw_realization(4, 16, channel::FadingSpec{}, streams, false);
            const auto part = ris::partition_res(16, ac);
            const auto pm = ris::compute_phase_config(part, ch.h1, ch.h2_est);
            for (auto q : ac.antennas()) {
                cdouble s{};
                double bound = 0.0;
                for (std::size_t i = 0; i < 16; ++i) {
                    if (part.target[i] != q) continue;
                    s += ch.h2_true(q, i) * pm.phasors[i] * ch.h1[i];
                    bound += std::abs(ch.h2_true(q, i)) * std::abs(ch.h1[i]);
                }
                ok = ok && std::abs(s.imag()) < 1e-12 && std::abs(s.real() - bound) <= 1e-12 * bound;
            }
        }
        if (!ok) failed.push_back("alignment");
    }
    double mgf_dev = 0.0;
    {  // MGF normalization and sampling oracle
        const auto ctx = analysis::AberContext::from_config(base(Scheme::rasm, 3, 8));
        bool ok = true;
        for (std::size_t h = 0; h < ctx.n_hyp(); ++h) {
            for (std::size_t g = 0; g < ctx.n_hyp(); ++g) {
                if (g != h) ok = ok && std::abs(analysis::build_pair_mgf(ctx, h / 2, g / 2, h % 2, g % 2)(0.0) - 1.0) < 1e-10;
            }
        }
        const double t = -0.05;
        const std::size_t pairs[][4] = {{0, 1, 0, 0}, {0, 3, 0, 1}, {2, 2, 0, 1}};
        for (const auto& p : pairs) {
            double acc = 0.0;
            for (std::uint64_t d = 0; d < 1'000'000; ++d) {
                auto streams = channel::ChannelStreams::derive(4, p[1], d);
                const auto ch = channel::draw_realization(3, 8, channel::FadingSpec{}, streams, false);
                const auto plan = detect::ReceiveImPlan::build(ch.h1, ch.h2_est, ctx.table);
                double z = 0.0;
                for (std::size_t m = 0; m < 3; ++m) {
                    z += std::norm(plan.responses[p[0]][m] * ctx.symbols[p[2]] -
                                   plan.responses[p[1]][m] * ctx.symbols[p[3]]);
                }
                acc += std::exp(t * z);
            }
            const double sampled = acc / 1e6;
            const double model = analysis::build_pair_mgf(ctx, p[0], p[1], p[2], p[3])(t);
            mgf_dev = std::max(mgf_dev, std::abs(model - sampled) / sampled);
        }
        if (!ok || mgf_dev > 0.10) failed.push_back("MGF");
    }
    double rate_dev = 0.0;
    {  // DCMC limits
        const auto rasm = base(Scheme::rasm, 4, 8);
        const auto rassk = base(Scheme::rassk, 4, 8);
        rate_dev = std::max({std::abs(secrecy::estimate_rate_bob(rasm, 60.0, 2000, 1).rate - 4.0),
                             std::abs(secrecy::estimate_rate_bob(rasm, -40.0, 2000, 1).rate),
                             std::abs(secrecy::estimate_rate_bob(rassk, 60.0, 2000, 1).rate - 3.0),
                             std::abs(secrecy::estimate_rate_bob(rassk, -40.0, 2000, 1).rate),
                             std::abs(secrecy::estimate_rate_eve(rasm, 60.0, 2000, 1).rate - 0.5)});
        if (rate_dev > 0.05) failed.push_back("DCMC");
    }
    std::string detail = fmt("ML, bijections, alignment, MGF (max dev %.3f), DCMC limits (max dev %.4f)", mgf_dev, rate_dev);
    for (const auto& f : failed) detail += "; failed " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"BER target", ber_target},
        {"bound dominance", bound_dominance},
        {"spectral efficiency", spectral_efficiency_table},
        {"detector complexity", complexity},
        {"matched-rate ordering", matched_rate_ordering},
        {"Rician degradation", rician_degradation},
        {"imperfect CSI", imperfect_csi},
        {"secrecy ordering", secrecy_ordering},
        {"oracle suite", oracle_suite},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!wanted.empty() && !wanted.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("%s %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
