#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "risim/analysis.hpp"
#include "risim/ris.hpp"

namespace risim::analysis {

AberContext AberContext::from_config(const SchemeConfig& cfg) {
    cfg.validate();
    if (!is_receive_im(cfg.scheme)) {
        fail(ErrorKind::unsupported_configuration, "the ABER bound covers the received-side schemes");
    }
    AberContext ctx;
    ctx.n_r = cfg.n_r;
    ctx.n = cfg.n;
    ctx.table = index_table(cfg);
    ctx.quadrature_points = cfg.quadrature_points;
    ctx.mean_scaling = cfg.mean_scaling;
    ctx.covariance_model = cfg.covariance_model;
    if (carries_symbol(cfg.scheme)) {
        const auto c = mapping::build_constellation(cfg.constellation, cfg.m);
        ctx.symbols = c.points;
        ctx.labels = c.label;
        ctx.bits_symbol = c.bits_per_symbol();
    } else {
        ctx.symbols = {cdouble{std::sqrt(cfg.e_s), 0.0}};
        ctx.labels = {0};
    }
    ctx.validate();
    return ctx;
}

std::uint64_t AberContext::word(std::size_t h) const {
    const std::size_t s = symbols.size();
    return (static_cast<std::uint64_t>(h / s) << bits_symbol) | labels[h % s];
}

void AberContext::validate() const {
    if (quadrature_points < 16) fail(ErrorKind::config, "quadrature_points must be at least 16");
    if (table.size() == 0 || symbols.empty() || labels.size() != symbols.size()) {
        fail(ErrorKind::invalid_dimension, "empty hypothesis set");
    }
    if (table.n_r > n_r || n == 0) fail(ErrorKind::invalid_dimension, "table does not fit the array");
}

namespace {

constexpr double rayleigh_moment = std::numbers::pi / 4.0;  // E[alpha] E[beta]

struct Term {
    cdouble coef;
    std::size_t phase;  // antenna whose phase the element is aligned to
};

bool same_pair(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return (a == c && b == d) || (a == d && b == c);
}

PairwiseMgf published_mgf(const AberContext& ctx, std::size_t r, std::size_t r_hat, std::size_t k,
                          std::size_t k_hat) {
    const cdouble xa = ctx.symbols[k];
    const cdouble xb = ctx.symbols[k_hat];
    const auto& ac = ctx.table.entries[r];
    const double n = static_cast<double>(ctx.n);
    const double n_a = static_cast<double>(ac.n_a());
    const double n_e = static_cast<double>(ctx.n / ac.n_a());
    constexpr double pi = std::numbers::pi;
    PairwiseMgf out;
    if (r != r_hat) {
        const double spread = n_a - pi * pi / 16.0;
        out.coherent.mean = (n * pi / 4.0) * Eigen::Vector4d(xa.real(), xa.imag(), -xb.real(), -xb.imag());
        out.coherent.covariance = Eigen::Vector4d(
            n_a * (spread * n_e * xa.real() * xa.real() + n * std::norm(xb) / 2.0),
            n_a * (spread * n_e * xa.imag() * xa.imag() + n * std::norm(xb) / 2.0),
            n_a * (spread * n_e * xb.real() * xb.real() + n * std::norm(xa) / 2.0),
            n_a * (spread * n_e * xb.imag() * xb.imag() + n * std::norm(xa) / 2.0)).asDiagonal();
        std::vector<std::size_t> aimed = ac.antennas();
        for (auto a : ctx.table.entries[r_hat].antennas()) aimed.push_back(a);
        std::sort(aimed.begin(), aimed.end());
        aimed.erase(std::unique(aimed.begin(), aimed.end()), aimed.end());
        out.residual_order = static_cast<double>(ctx.n_r - aimed.size());
        out.residual_variance = n * (std::norm(xa) + std::norm(xb));
    } else {
        const double d = std::abs(xa - xb);
        out.coherent.mean = Eigen::VectorXd::Constant(1, n_a * n_e * pi * d / 4.0);
        out.coherent.covariance = Eigen::MatrixXd::Constant(1, 1, d * d * n_a * n_e * (32.0 - pi * pi) / 16.0);
        out.residual_order = (static_cast<double>(ctx.n_r) - n_a) / 2.0;
        out.residual_variance = n_a * n * d * d;
    }
    return out;
}

}  // namespace

PairwiseMgf build_pair_mgf(const AberContext& ctx, std::size_t r, std::size_t r_hat,
                           std::size_t k, std::size_t k_hat) {
    ctx.validate();
    if (r >= ctx.table.size() || r_hat >= ctx.table.size() || k >= ctx.symbols.size() ||
        k_hat >= ctx.symbols.size()) {
        fail(ErrorKind::invalid_dimension, "hypothesis index out of range");
    }
    if (ctx.covariance_model == CovarianceModel::published) return published_mgf(ctx, r, r_hat, k, k_hat);
    const cdouble xa = ctx.symbols[k];
    const cdouble xb = ctx.symbols[k_hat];
    const auto part_a = ris::partition_res(ctx.n, ctx.table.entries[r]);
    const auto part_b = ris::partition_res(ctx.n, ctx.table.entries[r_hat]);

    std::vector<std::size_t> aimed = ctx.table.entries[r].antennas();
    for (auto a : ctx.table.entries[r_hat].antennas()) aimed.push_back(a);
    std::sort(aimed.begin(), aimed.end());
    aimed.erase(std::unique(aimed.begin(), aimed.end()), aimed.end());
    const std::size_t s = aimed.size();

    Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
    Eigen::MatrixXcd pcov = cov;
    double residual = 0.0;
    std::vector<Term> terms;
    std::vector<cdouble> mean_re(s);

    // Per element, each antenna sees sum_T coef_T * alpha * beta_n * exp(j(w_T - w_n)).
    // Elements are independent, so first and second moments add up over elements.
    for (std::size_t i = 0; i < ctx.n; ++i) {
        terms.clear();
        if (part_a.target[i] != ris::idle_re) terms.push_back({xa, part_a.target[i]});
        if (part_b.target[i] != ris::idle_re) terms.push_back({-xb, part_b.target[i]});
        if (terms.empty()) continue;

        for (std::size_t a = 0; a < s; ++a) {
            cdouble m{};
            for (const auto& t : terms) {
                if (t.phase == aimed[a]) m += t.coef * rayleigh_moment;
            }
            mean_re[a] = m;
        }
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b) {
                const std::size_t n_a = aimed[a];
                const std::size_t n_b = aimed[b];
                const double beta2 = n_a == n_b ? 1.0 : rayleigh_moment;
                cdouble c{};
                cdouble p{};
                for (const auto& ta : terms) {
                    for (const auto& tb : terms) {
                        if (same_pair(ta.phase, n_b, n_a, tb.phase)) c += ta.coef * std::conj(tb.coef) * beta2;
                        if (same_pair(ta.phase, tb.phase, n_a, n_b)) p += ta.coef * tb.coef * beta2;
                    }
                }
                const auto ia = static_cast<Eigen::Index>(a);
                const auto ib = static_cast<Eigen::Index>(b);
                cov(ia, ib) += c - mean_re[a] * std::conj(mean_re[b]);
                pcov(ia, ib) += p - mean_re[a] * mean_re[b];
            }
        }
        for (const auto& ta : terms) {
            for (const auto& tb : terms) {
                if (ta.phase == tb.phase) residual += (ta.coef * std::conj(tb.coef)).real();
            }
        }
    }

    PairwiseMgf out;
    out.coherent.mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * s));
    out.coherent.covariance = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * s), static_cast<Eigen::Index>(2 * s));
    for (std::size_t a = 0; a < s; ++a) {
        std::size_t cnt_a = 0;
        std::size_t cnt_b = 0;
        for (std::size_t i = 0; i < ctx.n; ++i) {
            cnt_a += part_a.target[i] == aimed[a];
            cnt_b += part_b.target[i] == aimed[a];
        }
        if (ctx.mean_scaling == MeanScaling::total) {
            if (cnt_a > 0) cnt_a = ctx.n;
            if (cnt_b > 0) cnt_b = ctx.n;
        }
        const cdouble mu = rayleigh_moment * (xa * static_cast<double>(cnt_a) - xb * static_cast<double>(cnt_b));
        const auto ia = static_cast<Eigen::Index>(2 * a);
        out.coherent.mean(ia) = mu.real();
        out.coherent.mean(ia + 1) = mu.imag();
        for (std::size_t b = 0; b < s; ++b) {
            const auto ib = static_cast<Eigen::Index>(2 * b);
            const cdouble c = cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            const cdouble p = pcov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            out.coherent.covariance(ia, ib) = 0.5 * (c + p).real();
            out.coherent.covariance(ia + 1, ib + 1) = 0.5 * (c - p).real();
            out.coherent.covariance(ia + 1, ib) = 0.5 * (c + p).imag();
            out.coherent.covariance(ia, ib + 1) = 0.5 * (p - c).imag();
        }
    }
    const Eigen::MatrixXd sym = 0.5 * (out.coherent.covariance + out.coherent.covariance.transpose());
    out.coherent.covariance = sym;
    out.residual_order = static_cast<double>(ctx.n_r - s);
    out.residual_variance = residual;
    return out;
}

PairwiseMgf build_z1_mgf(const AberContext& ctx, std::size_t r, std::size_t r_hat, std::size_t k,
                         std::size_t k_hat) {
    if (r == r_hat) fail(ErrorKind::domain, "the AC-error term needs r != r_hat");
    return build_pair_mgf(ctx, r, r_hat, k, k_hat);
}

PairwiseMgf build_z2_mgf(const AberContext& ctx, std::size_t r, std::size_t k, std::size_t k_hat) {
    if (k == k_hat) fail(ErrorKind::domain, "the symbol-error term needs k != k_hat");
    return build_pair_mgf(ctx, r, r, k, k_hat);
}

double pep_unconditional(const std::function<double(double)>& mgf, double n0, PepMethod method,
                         std::size_t quadrature_points) {
    if (!(n0 > 0.0)) fail(ErrorKind::domain, "PEP needs a positive noise variance");
    try {
        if (method == PepMethod::q_bound) {
            return mgf(-1.0 / n0) / 6.0 + mgf(-1.0 / (2.0 * n0)) / 12.0 + mgf(-1.0 / (4.0 * n0)) / 4.0;
        }
        const GaussLegendre rule(quadrature_points);
        return rule.integrate(
                   [&](double tau) {
                       const double s = std::sin(tau);
                       return mgf(-1.0 / (4.0 * s * s * n0));
                   },
                   0.0, std::numbers::pi / 2.0) /
               std::numbers::pi;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::domain) throw;
        fail(ErrorKind::bound_invalid, std::string("MGF pole inside the integration range: ") + e.what());
    }
}

std::vector<double> aber_union_bound(const AberContext& ctx, const std::vector<double>& n0s,
                                     PepMethod method) {
    ctx.validate();
    const std::size_t h_count = ctx.n_hyp();
    if (h_count < 2) fail(ErrorKind::unsupported_configuration, "the union bound needs two hypotheses");
    const std::size_t m = ctx.symbols.size();
    const double divisor = static_cast<double>(h_count) * std::log2(static_cast<double>(h_count));
    std::vector<double> acc(n0s.size(), 0.0);
    for (std::size_t h = 0; h < h_count; ++h) {
        for (std::size_t g = 0; g < h_count; ++g) {
            if (g == h) continue;
            const int e = std::popcount(ctx.word(h) ^ ctx.word(g));
            if (e == 0) continue;
            const PairwiseMgf form = build_pair_mgf(ctx, h / m, g / m, h % m, g % m);
            for (std::size_t j = 0; j < n0s.size(); ++j) {
                acc[j] += pep_unconditional(form, n0s[j], method, ctx.quadrature_points) * e;
            }
        }
    }
    for (auto& v : acc) v /= divisor;
    return acc;
}

double aber_union_bound(const AberContext& ctx, double n0, PepMethod method) {
    return aber_union_bound(ctx, std::vector<double>{n0}, method).front();
}

}  // namespace risim::analysis
