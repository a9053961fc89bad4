// SPDX-License-Identifier: Apache-2.0
//
// onebit-mcrb: performance bounds for estimation from one-bit quantized data
// Copyright (C) 2026 The onebit-mcrb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "onebit/orthant.hpp"

#include "onebit/errors.hpp"
#include "onebit/parallel.hpp"
#include "onebit/quantize.hpp"
#include "onebit/special.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace onebit
{

namespace
{

// Subtrees below this mass are dropped; also keeps quantile arguments well above the subnormal range.
constexpr double tiny_mass = 1e-280;

void check_pair(const PairwiseGaussian &pg)
{
    if (!pg.mean.allFinite() || !pg.cov.allFinite())
        throw NumericalError("pair law has non-finite entries");
}

// 2x2 table of two +-1 variables, t[a][b] = P(first = 2a-1, second = 2b-1).
using Table = std::array<std::array<double, 2>, 2>;

Table marginal_table(const PairProbs &p, int bit_first, int bit_second)
{
    // bits of the 4-bit code 8 b_iR + 4 b_iI + 2 b_lR + b_lI, counted from the most significant.
    Table t{};
    for (int code = 0; code < 16; ++code)
    {
        const int a = (code >> (3 - bit_first)) & 1;
        const int b = (code >> (3 - bit_second)) & 1;
        t[a][b] += p[code];
    }
    return t;
}

double table_covariance(const Table &t)
{
    return 4.0 * (t[1][1] * t[0][0] - t[1][0] * t[0][1]);
}

} // namespace

PairwiseGaussian pair_gaussian(Complex s_i, Complex s_l, double var_i, double var_l, Complex rho)
{
    if (rho.imag() != 0.0)
        throw InvalidInput("complex noise cross-covariance is not supported");
    if (!(var_i > 0.0) || !(var_l > 0.0))
        throw DegenerateNoise("pair variances must be positive");
    if (!(std::abs(rho.real()) < std::sqrt(var_i * var_l)))
        throw NumericalError("pair covariance is not positive definite");

    PairwiseGaussian pg;
    pg.mean << s_i.real(), s_i.imag(), s_l.real(), s_l.imag();
    pg.cov.setZero();
    pg.cov(0, 0) = pg.cov(1, 1) = 0.5 * var_i;
    pg.cov(2, 2) = pg.cov(3, 3) = 0.5 * var_l;
    pg.cov(0, 2) = pg.cov(2, 0) = 0.5 * rho.real();
    pg.cov(1, 3) = pg.cov(3, 1) = 0.5 * rho.real();
    return pg;
}

OrthantEstimate pair_orthant_probs(const PairwiseGaussian &pg, const SobolPoints &points, std::uint64_t seed,
                                   std::uint64_t stream)
{
    check_pair(pg);
    if (points.dims() < 3 || points.size() == 0)
        throw InvalidInput("orthant integration needs a non-empty 3-D point set");

    Eigen::LLT<Eigen::Matrix4d> llt(pg.cov);
    if (llt.info() != Eigen::Success)
        throw NumericalError("pair covariance is not positive definite");
    const Eigen::Matrix4d l = llt.matrixL();
    const Eigen::Vector4d m = pg.mean;

    const std::vector<std::uint64_t> shift = digital_shift(3, seed, stream, 0x5eed);

    // Genz separation of variables: y_j ~ N(0,1) truncated to the orthant side of
    // t_j = -(m_j + sum_{k<j} L_jk y_k) / L_jj, one uniform per truncated draw. All 16 sign
    // patterns share the uniforms, so the four levels form a binary tree of 2+4+8+16 cdf calls.
    std::array<double, 16> acc{};
    std::array<double, 3> w{};
    std::array<double, 4> y{};

    auto descend = [&](auto &&self, int level, int code, double mass) -> void {
        double shifted = m[level];
        for (int k = 0; k < level; ++k)
            shifted += l(level, k) * y[k];
        const double t = -shifted / l(level, level);
        const double p_low = normal_cdf(t);
        const double p_up = normal_cdf(-t);

        for (int b = 0; b < 2; ++b)
        {
            const double p = b ? p_up : p_low;
            const double branch = mass * p;
            if (branch < tiny_mass)
                continue;
            const int child = (code << 1) | b;
            if (level == 3)
            {
                acc[child] += branch;
                continue;
            }
            y[level] = b ? -normal_quantile(w[level] * p_up) : normal_quantile(w[level] * p_low);
            self(self, level + 1, child, branch);
        }
    };

    for (std::size_t i = 0; i < points.size(); ++i)
    {
        for (unsigned d = 0; d < 3; ++d)
            w[d] = to_unit(points.raw(i, d) ^ shift[d]);
        descend(descend, 0, 0, 1.0);
    }

    OrthantEstimate out;
    double total = 0.0;
    for (int c = 0; c < 16; ++c)
    {
        out.probs[c] = acc[c] / static_cast<double>(points.size());
        total += out.probs[c];
    }
    out.raw_sum = total;
    if (!(total > 0.0) || !std::isfinite(total))
        throw NumericalError("orthant integration produced no mass");
    for (auto &p : out.probs)
        p /= total;
    return out;
}

OrthantEstimate pair_orthant_probs(const PairwiseGaussian &pg, std::size_t qmc_points, std::uint64_t seed)
{
    return pair_orthant_probs(pg, SobolPoints(3, qmc_points), seed, 0);
}

PairProbs pair_orthant_probs_bivariate(const PairwiseGaussian &pg)
{
    check_pair(pg);
    const Eigen::Matrix4d &c = pg.cov;
    if (c(0, 1) != 0.0 || c(0, 3) != 0.0 || c(1, 2) != 0.0 || c(2, 3) != 0.0)
        throw MisuseError("bivariate factorization needs uncorrelated real and imaginary parts");
    for (int d = 0; d < 4; ++d)
        if (!(c(d, d) > 0.0))
            throw NumericalError("pair covariance is not positive definite");

    // quadrant table of (x_a, x_b): t[a][b] with 1 meaning >= 0
    auto quadrants = [&](int ia, int ib) {
        const double sa = std::sqrt(c(ia, ia));
        const double sb = std::sqrt(c(ib, ib));
        const double r = c(ia, ib) / (sa * sb);
        if (!(std::abs(r) < 1.0))
            throw NumericalError("pair covariance is not positive definite");
        const double ha = pg.mean[ia] / sa;
        const double hb = pg.mean[ib] / sb;
        Table t{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
            {
                const double ga = a ? 1.0 : -1.0;
                const double gb = b ? 1.0 : -1.0;
                t[a][b] = bivariate_normal_upper(-ga * ha, -gb * hb, ga * gb * r);
            }
        return t;
    };

    const Table re = quadrants(0, 2);
    const Table im = quadrants(1, 3);
    PairProbs out{};
    double total = 0.0;
    for (int code = 0; code < 16; ++code)
    {
        const int b_ir = (code >> 3) & 1, b_ii = (code >> 2) & 1, b_lr = (code >> 1) & 1, b_li = code & 1;
        out[code] = re[b_ir][b_lr] * im[b_ii][b_li];
        total += out[code];
    }
    for (auto &p : out)
        p /= total;
    return out;
}

MomentSet moment_matrices_awgn(const SteeringModel &model, const Theta &theta, const NoiseModel &noise)
{
    if (!noise.is_white())
        throw MisuseError("closed-form moments require white noise");

    const int n = model.size();
    const CVector q = q_vector(model, theta, noise);
    MomentSet ms;
    ms.theta = theta;
    ms.mu.resize(n);
    for (int i = 0; i < n; ++i)
        ms.mu[i] = Complex(part_mean(q[i].real()), part_mean(q[i].imag()));

    ms.cov_M = CMatrix::Zero(n, n);
    ms.cov_P = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
    {
        const double vr = part_variance(q[i].real());
        const double vi = part_variance(q[i].imag());
        ms.cov_M(i, i) = vr + vi;
        ms.cov_P(i, i) = vr - vi;
    }

    ms.M = ms.mu * ms.mu.adjoint();
    ms.P = ms.mu * ms.mu.transpose();
    for (int i = 0; i < n; ++i)
    {
        const auto [m2, p2] = single_sample_second_moments(ms.mu[i]);
        ms.M(i, i) = m2;
        ms.P(i, i) = p2;
    }
    return ms;
}

MomentSet moment_matrices_colored(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                                  const OrthantOptions &options)
{
    const int n = model.size();
    const CVector s = model.signal(theta);
    const Eigen::MatrixXd r = noise.covariance(n);

    MomentSet ms;
    ms.theta = theta;
    ms.mu = mean_vector(model, theta, noise);
    const CVector q = q_vector(model, theta, noise);

    ms.M = CMatrix::Zero(n, n);
    ms.P = CMatrix::Zero(n, n);
    ms.cov_M = CMatrix::Zero(n, n);
    ms.cov_P = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
    {
        const auto [m2, p2] = single_sample_second_moments(ms.mu[i]);
        ms.M(i, i) = m2;
        ms.P(i, i) = p2;
        const double vr = part_variance(q[i].real());
        const double vi = part_variance(q[i].imag());
        ms.cov_M(i, i) = vr + vi;
        ms.cov_P(i, i) = vr - vi;
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int l = i + 1; l < n; ++l)
            pairs.emplace_back(i, l);

    std::vector<PairProbs> tables(pairs.size());
    std::unique_ptr<SobolPoints> points;
    if (!options.fast)
        points = std::make_unique<SobolPoints>(3, options.qmc_points);

    parallel_for(pairs.size(), options.threads, [&](std::size_t idx) {
        const auto [i, l] = pairs[idx];
        const PairwiseGaussian pg = pair_gaussian(s[i], s[l], r(i, i), r(l, l), Complex(r(i, l), 0.0));
        if (options.fast)
            tables[idx] = pair_orthant_probs_bivariate(pg);
        else
            tables[idx] = pair_orthant_probs(pg, *points, options.seed, static_cast<std::uint64_t>(i) * n + l).probs;
    });

    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
    {
        const auto [i, l] = pairs[idx];
        const PairProbs &p = tables[idx];

        Complex m_il = 0.0, p_il = 0.0;
        for (int ki = 0; ki < 4; ++ki)
            for (int kl = 0; kl < 4; ++kl)
            {
                const double prob = p[4 * ki + kl];
                const Complex zi = outcome_value(ki), zl = outcome_value(kl);
                m_il += prob * zi * std::conj(zl);
                p_il += prob * zi * zl;
            }
        ms.M(i, l) = m_il;
        ms.M(l, i) = std::conj(m_il);
        ms.P(i, l) = ms.P(l, i) = p_il;

        // code bits: 0 = iR, 1 = iI, 2 = lR, 3 = lI
        const double c_rr = table_covariance(marginal_table(p, 0, 2));
        const double c_ii = table_covariance(marginal_table(p, 1, 3));
        const double c_ir = table_covariance(marginal_table(p, 1, 2));
        const double c_ri = table_covariance(marginal_table(p, 0, 3));
        const Complex cm(c_rr + c_ii, c_ir - c_ri);
        const Complex cp(c_rr - c_ii, c_ri + c_ir);
        ms.cov_M(i, l) = cm;
        ms.cov_M(l, i) = std::conj(cm);
        ms.cov_P(i, l) = ms.cov_P(l, i) = cp;
    }
    return ms;
}

MomentSet moment_matrices(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                          const OrthantOptions &options)
{
    if (noise.is_white())
        return moment_matrices_awgn(model, theta, noise);
    return moment_matrices_colored(model, theta, noise, options);
}

} // namespace onebit
