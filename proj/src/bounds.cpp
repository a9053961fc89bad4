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

#include "onebit/bounds.hpp"

#include "onebit/errors.hpp"
#include "onebit/quantize.hpp"
#include "onebit/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace onebit
{

namespace
{

Complex dot(const CVector &u, const CVector &v)
{
    return u.dot(v); // Eigen conjugates the left operand
}

// u^H X v split as (u^H mu)(mu^H v) + u^H C v. `mag` collects the magnitudes of both parts.
struct Split
{
    Complex value;
    double mag;
};

Split form_m(const CVector &u, const CVector &v, const MomentSet &ms)
{
    const Complex mean = dot(u, ms.mu) * std::conj(dot(v, ms.mu));
    const Complex centred = dot(u, ms.cov_M * v);
    return {mean + centred, std::abs(mean) + std::abs(centred)};
}

// u^H P v^* split as (u^H mu)(v^H mu) + u^H C_P v^*.
Split form_p(const CVector &u, const CVector &v, const MomentSet &ms)
{
    const Complex mean = dot(u, ms.mu) * dot(v, ms.mu);
    const Complex centred = dot(u, ms.cov_P * v.conjugate());
    return {mean + centred, std::abs(mean) + std::abs(centred)};
}

} // namespace

CVector ambiguity(const SteeringModel &model, double phi, const std::vector<double> &grid)
{
    const CVector a = model.steering(phi);
    const double na = a.norm();
    CVector out(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        const CVector b = model.steering(grid[k]);
        out[k] = dot(b, a) / (b.norm() * na);
    }
    return out;
}

CVector maf(const SteeringModel &model, const Theta &theta, const NoiseModel &noise, const std::vector<double> &grid)
{
    if (grid.empty())
        throw InvalidInput("MAF grid is empty");
    const CVector mu = mean_vector(model, theta, noise);
    CVector out(grid.size());
    double peak = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        out[k] = dot(model.steering(grid[k]), mu);
        peak = std::max(peak, std::abs(out[k]));
    }
    if (!(peak > 0.0))
        throw DegenerateMaf("quantized-data mean is orthogonal to every grid steering vector");
    return out / peak;
}

Theta pseudo_true(const SteeringModel &model, const Theta &theta, const NoiseModel &noise, const SearchConfig &search)
{
    search.validate();
    const CVector mu = mean_vector(model, theta, noise);
    if (mu.cwiseAbs().maxCoeff() == 0.0)
        throw DegenerateMaf("quantized-data mean vanishes");

    auto objective = [&](double p) { return std::abs(dot(model.steering(p), mu)); };
    const std::vector<double> grid = phi_grid(model, search.grid_size);
    std::vector<double> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        values[k] = objective(grid[k]);
    const std::size_t best = grid_argmax(values);
    if (!(values[best] > 0.0))
        throw DegenerateMaf("MAF vanishes on the whole grid");

    Theta t0;
    auto slope = [&](double p) { return correlation_slope(model, mu, p); };
    t0.phi = refine_peak(model, grid, best, values[best], objective, search.refine_tolerance, slope);
    t0.beta = dot(model.steering(t0.phi), mu);
    return t0;
}

double bias_phi(const SteeringModel &model, const Theta &theta, const NoiseModel &noise, const SearchConfig &search)
{
    return pseudo_true(model, theta, noise, search).phi - theta.phi;
}

McrbResult mcrb(const SteeringModel &model, const MomentSet &ms, const Theta &theta0, double assumed_variance)
{
    if (!(assumed_variance > 0.0))
        throw DegenerateNoise("assumed noise variance must be positive");

    const CVector a = model.steering(theta0.phi);
    const CVector ad = model.steering_d1(theta0.phi);
    const CVector add = model.steering_d2(theta0.phi);
    const Complex b0 = theta0.beta;
    const double b0r = b0.real(), b0i = b0.imag();
    const double b0sq = std::norm(b0);

    McrbIntermediates t;
    t.J1 = (std::conj(dot(add, ms.mu)) * b0).real();
    t.J2 = dot(ad, ms.mu);
    const double j2r = t.J2.real(), j2i = t.J2.imag();

    const Split p_dd = form_p(ad, ad, ms);
    const Split m_dd = form_m(ad, ad, ms);
    const Split p_da = form_p(ad, a, ms);
    const Split m_ad = form_m(a, ad, ms);
    const Split p_aa = form_p(a, a, ms);
    const Split m_aa = form_m(a, a, ms);
    const double re_j2b = (t.J2 * std::conj(b0)).real();

    t.L1 = (b0 * b0 * std::conj(p_dd.value)).real() + b0sq * m_dd.value.real();
    t.L2 = std::conj(b0) * p_da.value + b0 * (m_ad.value - 2.0 * re_j2b);
    t.L3 = p_aa.value;
    t.L4 = t.L3.imag() - 2.0 * b0r * b0i;
    t.L5 = t.L3.real() + m_aa.value.real() - 2.0 * b0r * b0r;
    t.L6 = -t.L3.real() + m_aa.value.real() - 2.0 * b0i * b0i;

    // magnitudes of everything that cancels inside each term
    const double mag_l1 = b0sq * (p_dd.mag + m_dd.mag);
    const double mag_l2 = std::sqrt(b0sq) * (p_da.mag + m_ad.mag + 2.0 * std::abs(re_j2b));
    const double mag_l3 = p_aa.mag;
    const double mag_l4 = mag_l3 + 2.0 * std::abs(b0r * b0i);
    const double mag_l56 = mag_l3 + m_aa.mag + 2.0 * b0sq;

    const double s2 = assumed_variance;
    const double s4 = s2 * s2;
    t.A << t.J1, j2r, j2i, j2r, -1.0, 0.0, j2i, 0.0, -1.0;
    t.A *= 2.0 / s2;
    t.B << t.L1, t.L2.real(), t.L2.imag(), t.L2.real(), t.L5, t.L4, t.L2.imag(), t.L4, t.L6;
    t.B *= 2.0 / s4;

    const double denom = std::norm(t.J2) + t.J1;
    const double numer = t.L1 + 2.0 * (t.J2 * std::conj(t.L2)).real() + t.L6 * j2i * j2i + t.L5 * j2r * j2r +
                         2.0 * t.L4 * j2i * j2r;
    const double numer_mag = mag_l1 + 2.0 * std::abs(t.J2) * mag_l2 + mag_l56 * (j2i * j2i + j2r * j2r) +
                             2.0 * mag_l4 * std::abs(j2i * j2r);

    McrbResult out;
    out.terms = t;

    if (denom == 0.0 || !std::isfinite(denom))
        throw SingularityError("expected Hessian of the assumed log-likelihood is singular");

    out.mcrb11 = numer / (2.0 * denom * denom);
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = 64.0 * eps * numer_mag / (2.0 * denom * denom);
    if (!std::isfinite(out.mcrb11))
        throw NumericalError("MCRB closed form is not finite");
    if (out.mcrb11 < 0.0)
    {
        std::ostringstream msg;
        msg << "MCRB closed form is negative (" << out.mcrb11 << ", rounding allowance " << rounding << ")";
        throw NumericalError(msg.str());
    }

    // Sandwich route: d_k = Re(g_k^H z) - c_k, E[d_k d_l] = Cov + E[d_k] E[d_l],
    // Cov = Re(g_k^H C_M g_l + g_k^H C_P g_l^*) / 2, and B = (4 / s^4) E[d d^T].
    const std::array<CVector, 3> g{b0 * ad, a, Complex(0.0, 1.0) * a};
    const std::array<double, 3> c{0.0, b0r, b0i};
    std::array<double, 3> mean{};
    for (int k = 0; k < 3; ++k)
        mean[k] = dot(g[k], ms.mu).real() - c[k];
    Eigen::Matrix3d b_sand;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
        {
            const double cov =
                0.5 * (dot(g[k], ms.cov_M * g[l]) + dot(g[k], ms.cov_P * g[l].conjugate())).real();
            b_sand(k, l) = 4.0 / s4 * (cov + mean[k] * mean[l]);
        }
    Eigen::FullPivLU<Eigen::Matrix3d> lu(t.A);
    if (!lu.isInvertible())
        throw SingularityError("expected Hessian of the assumed log-likelihood is singular");
    const Eigen::Matrix3d a_inv = lu.inverse();
    out.sandwich11 = (a_inv * b_sand * a_inv)(0, 0);

    out.tolerance = 1e-8 * std::abs(out.sandwich11) + rounding;
    if (!(std::abs(out.mcrb11 - out.sandwich11) <= out.tolerance))
    {
        std::ostringstream msg;
        msg.precision(17);
        msg << "MCRB closed form " << out.mcrb11 << " disagrees with sandwich product " << out.sandwich11;
        throw NumericalError(msg.str());
    }
    return out;
}

McrbResult mcrb(const SteeringModel &model, const NoiseModel &noise, const MomentSet &moments, const Theta &theta0)
{
    return mcrb(model, moments, theta0, noise.variance());
}

double psi(double q, double variance)
{
    const double aq = std::abs(q);
    if (aq < 5.0)
        return std::exp(-q * q) / (variance * std::numbers::pi * q_function(q) * q_function(-q));
    // Q(|q|) is tiny, Q(-|q|) = 1 - Q(|q|)
    const double log_tail = log_q_function(aq);
    const double log_body = std::log1p(-q_function(aq));
    return std::exp(-q * q - log_tail - log_body) / (variance * std::numbers::pi);
}

double quantized_crb(const SteeringModel &model, const Theta &theta, const NoiseModel &noise)
{
    if (!noise.is_white())
        throw MisuseError("quantized CRB is only available for white noise");

    const CVector a = model.steering(theta.phi);
    const CVector ds_phi = theta.beta * model.steering_d1(theta.phi);
    const CVector q = q_vector(model, theta, noise);
    const Eigen::VectorXd var = noise.sample_variances(model.size());

    Eigen::Matrix3d fim = Eigen::Matrix3d::Zero();
    for (int n = 0; n < model.size(); ++n)
    {
        const Eigen::Vector3d gr(ds_phi[n].real(), a[n].real(), -a[n].imag());
        const Eigen::Vector3d gi(ds_phi[n].imag(), a[n].imag(), a[n].real());
        fim += psi(q[n].real(), var[n]) * gr * gr.transpose() + psi(q[n].imag(), var[n]) * gi * gi.transpose();
    }

    // A nuisance direction whose information underflows (e.g. a saturated real part) does not make
    // the bound on phi infinite as long as e_1 stays in the range of J; invert on that range.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(fim);
    if (eig.info() != Eigen::Success)
        throw NumericalError("eigendecomposition of the Fisher information failed");
    const Eigen::Vector3d lambda = eig.eigenvalues();
    const Eigen::Matrix3d v = eig.eigenvectors();
    const double cutoff = 1e-12 * lambda.cwiseAbs().maxCoeff();
    double crb = 0.0;
    double captured = 0.0;
    for (int k = 0; k < 3; ++k)
    {
        if (!(lambda[k] > cutoff))
            continue;
        crb += v(0, k) * v(0, k) / lambda[k];
        captured += v(0, k) * v(0, k);
    }
    if (!(captured > 1.0 - 1e-9) || !(crb > 0.0) || !std::isfinite(crb))
        throw SingularityError("Fisher information of the quantized model is singular in the phi direction");
    return crb;
}

BoundReport evaluate_bounds(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                            const SearchConfig &search, const OrthantOptions &orthant, bool with_crb)
{
    BoundReport r;
    r.theta0 = pseudo_true(model, theta, noise, search);
    r.bias_phi = r.theta0.phi - theta.phi;
    const MomentSet ms = moment_matrices(model, theta, noise, orthant);
    r.mcrb11 = mcrb(model, noise, ms, r.theta0).mcrb11;
    r.mse_bound = mse_bound(r.mcrb11, r.bias_phi);
    if (with_crb)
        r.crb = quantized_crb(model, theta, noise);
    return r;
}

} // namespace onebit
