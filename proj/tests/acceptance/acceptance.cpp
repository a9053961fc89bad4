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
// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed below.

#include "onebit/bounds.hpp"
#include "onebit/complexity.hpp"
#include "onebit/errors.hpp"
#include "onebit/estimators.hpp"
#include "onebit/noise.hpp"
#include "onebit/orthant.hpp"
#include "onebit/quantize.hpp"
#include "onebit/scenario.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using onebit::Complex;
using onebit::CMatrix;
using onebit::CVector;
using onebit::NoiseModel;
using onebit::SteeringModel;
using onebit::Theta;

namespace
{

// criterion 1
constexpr int moment_configs = 10;
constexpr int moment_draws = 1000000;
constexpr double moment_z = 4.0;
// criterion 2
constexpr double path_tol = 1e-3;
// criterion 3
constexpr int mcrb_configs = 50;
constexpr double mcrb_rel_tol = 1e-8;
constexpr double variance_rel_tol = 1e-12;
// criterion 4
constexpr double attain_tol = 0.10;
constexpr double plateau_tol = 0.05;
// criterion 5
constexpr double bias_peak_high = 9.0;
constexpr double bias_peak_low = 1.8;
constexpr double bias_peak_tol = 1.5;
constexpr double low_snr_bias_max = 1.0;
constexpr double low_snr_u_max = 0.9;
// criterion 6
constexpr double ordering_fraction = 0.5;
constexpr double symmetry_rel_tol = 1e-10;
// criterion 7
constexpr double log_gap_max = 0.1;
constexpr double coincide_snr_min = 10.0;
constexpr double quantized_snr = 30.0;
// criterion 8
constexpr double order_fraction = 0.8;
constexpr double dip_window_deg = 5.0;
// criterion 9
constexpr double ratio_tol = 1e-3;
// criterion 10
constexpr int det_trials = 50;
constexpr int det_grid = 1024;
constexpr std::size_t det_qmc = 1024;
constexpr unsigned det_threads = 4;

constexpr double deg = std::numbers::pi / 180.0;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double rel(double a, double b)
{
    if (a == b)
        return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

Theta at_snr(double phi, double snr_db, double angle_deg, double variance)
{
    return Theta{phi, std::polar(std::sqrt(variance * std::pow(10.0, snr_db / 10.0)), angle_deg * deg)};
}

std::vector<double> column(const onebit::CsvTable &t, const std::string &name)
{
    std::size_t idx = t.header.size();
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == name)
            idx = i;
    if (idx == t.header.size())
        throw std::runtime_error("missing column " + name + " in " + t.file);
    std::vector<double> out;
    for (const auto &row : t.rows)
        out.push_back(std::stod(row[idx]));
    return out;
}

std::vector<std::string> statuses(const onebit::CsvTable &t)
{
    std::vector<std::string> out;
    for (const auto &row : t.rows)
        out.push_back(row.back());
    return out;
}

// ---------------------------------------------------------------------------

Outcome moment_correctness()
{
    const int n = 8;
    const auto ula = SteeringModel::ula(n);
    std::mt19937_64 gen(1001);
    std::uniform_real_distribution<double> doa(-80.0, 80.0), snr(-5.0, 25.0), ang(0.0, 360.0), lvar(-1.0, 1.0);
    std::normal_distribution<double> nd;
    int checked = 0, failed = 0;
    double worst = 0.0;

    // z-test with the variance implied by the model under test
    auto test = [&](double sum, double expected, double model_var) {
        const double dev = std::abs(sum / moment_draws - expected);
        ++checked;
        if (model_var <= 0.0)
        {
            failed += dev != 0.0;
            return;
        }
        const double z = dev / std::sqrt(model_var / moment_draws);
        worst = std::max(worst, z);
        failed += z > moment_z;
    };

    for (int c = 0; c < moment_configs; ++c)
    {
        const double v = std::pow(10.0, lvar(gen));
        const Theta theta = at_snr(doa(gen) * deg, snr(gen), ang(gen), v);
        const auto noise = NoiseModel::white(v);
        const auto ms = onebit::moment_matrices_awgn(ula, theta, noise);
        const CVector s = ula.signal(theta);
        const double sd = std::sqrt(v / 2.0);

        CVector mu_sum = CVector::Zero(n);
        CMatrix m_sum = CMatrix::Zero(n, n), p_sum = CMatrix::Zero(n, n);
        CVector z(n);
        for (int t = 0; t < moment_draws; ++t)
        {
            for (int i = 0; i < n; ++i)
            {
                const double xr = s[i].real() + sd * nd(gen);
                const double xi = s[i].imag() + sd * nd(gen);
                z[i] = Complex(xr >= 0.0 ? 1.0 : -1.0, xi >= 0.0 ? 1.0 : -1.0);
            }
            mu_sum += z;
            for (int i = 0; i < n; ++i)
                for (int l = i; l < n; ++l)
                {
                    m_sum(i, l) += z[i] * std::conj(z[l]);
                    p_sum(i, l) += z[i] * z[l];
                }
        }
        for (int i = 0; i < n; ++i)
        {
            const double ar = ms.mu[i].real(), ai = ms.mu[i].imag();
            test(mu_sum[i].real(), ar, 1.0 - ar * ar);
            test(mu_sum[i].imag(), ai, 1.0 - ai * ai);
            for (int l = i; l < n; ++l)
            {
                const Complex em = ms.M(i, l), ep = ms.P(i, l);
                if (l == i)
                {
                    // |z|^2 = 2 and z^2 = 2j zR zI
                    test(m_sum(i, i).real(), em.real(), 0.0);
                    test(m_sum(i, i).imag(), em.imag(), 0.0);
                    test(p_sum(i, i).real(), ep.real(), 0.0);
                    test(p_sum(i, i).imag(), ep.imag(), 4.0 - ep.imag() * ep.imag());
                    continue;
                }
                // second moments of the products follow from independence of the four signs
                const double prod = ar * ai * ms.mu[l].real() * ms.mu[l].imag();
                test(m_sum(i, l).real(), em.real(), 2.0 + 2.0 * prod - em.real() * em.real());
                test(m_sum(i, l).imag(), em.imag(), 2.0 - 2.0 * prod - em.imag() * em.imag());
                test(p_sum(i, l).real(), ep.real(), 2.0 - 2.0 * prod - ep.real() * ep.real());
                test(p_sum(i, l).imag(), ep.imag(), 2.0 + 2.0 * prod - ep.imag() * ep.imag());
            }
        }
    }
    return {failed == 0, std::to_string(checked) + " components over " + std::to_string(moment_configs) +
                             " configs, " + std::to_string(failed) + " outside " + fmt("%.0f", moment_z) +
                             " SE, largest deviation " + fmt("%.2f", worst) + " SE"};
}

Outcome path_equivalence()
{
    double worst_moment = 0.0;
    const auto ula = SteeringModel::ula(8);
    std::mt19937_64 gen(2002);
    std::uniform_real_distribution<double> doa(-70.0, 70.0), snr(-5.0, 20.0), ang(0.0, 360.0);
    onebit::OrthantOptions opt; // 2^16 points, QMC
    for (int c = 0; c < 3; ++c)
    {
        const Theta theta = at_snr(doa(gen) * deg, snr(gen), ang(gen), 1.0);
        const auto noise = NoiseModel::white(1.0);
        const auto awgn = onebit::moment_matrices_awgn(ula, theta, noise);
        const auto col = onebit::moment_matrices_colored(ula, theta, noise, opt);
        worst_moment = std::max({worst_moment, (awgn.M - col.M).cwiseAbs().maxCoeff(),
                                 (awgn.P - col.P).cwiseAbs().maxCoeff()});
    }

    // QMC against the bivariate factorization on correlated sinc-noise pairs.
    const auto tone = SteeringModel::tone(1.6e-3, 10000.0, 1250.0);
    const auto sinc = NoiseModel::sinc(1.0, 1250.0, 10000.0);
    const Eigen::MatrixXd r = sinc.covariance(tone.size());
    const CVector s = tone.signal(at_snr(1000.0, 5.0, 60.0, 1.0));
    double worst_prob = 0.0;
    int pairs = 0;
    for (int i = 0; i < tone.size(); ++i)
        for (int l = i + 1; l < tone.size(); ++l)
        {
            const auto pg = onebit::pair_gaussian(s[i], s[l], r(i, i), r(l, l), r(i, l));
            const auto q = onebit::pair_orthant_probs(pg, opt.qmc_points, opt.seed);
            const auto b = onebit::pair_orthant_probs_bivariate(pg);
            for (int k = 0; k < 16; ++k)
                worst_prob = std::max(worst_prob, std::abs(q.probs[k] - b[k]));
            ++pairs;
        }
    const bool pass = worst_moment < path_tol && worst_prob < path_tol;
    return {pass, "white-noise orthant vs closed form max |dM|,|dP| = " + fmt("%.3g", worst_moment) +
                      "; QMC vs bivariate over " + std::to_string(pairs) + " sinc pairs max |dp| = " +
                      fmt("%.3g", worst_prob) + " (tol " + fmt("%g", path_tol) + ")"};
}

Outcome mcrb_consistency()
{
    std::mt19937_64 gen(3003);
    std::uniform_real_distribution<double> doa(-85.0, 85.0), freq(10.0, 1240.0), snr(-10.0, 35.0), ang(0.0, 360.0),
        lvar(-1.0, 1.0);
    std::uniform_int_distribution<int> sensors(2, 32), upick(0, 2);
    double worst = 0.0, worst_var = 0.0;
    onebit::OrthantOptions fast;
    fast.fast = true;
    for (int c = 0; c < mcrb_configs; ++c)
    {
        const double v = std::pow(10.0, lvar(gen));
        SteeringModel model = SteeringModel::ula(2);
        NoiseModel noise = NoiseModel::white(v);
        Theta theta;
        if (c % 3 == 2)
        {
            const double u = std::array{1.0, 2.0, 4.0}[upick(gen)];
            model = SteeringModel::tone(4e-3, 2500.0 * u, 1250.0);
            noise = NoiseModel::sinc(v, 1250.0, 2500.0 * u);
            theta = at_snr(freq(gen), snr(gen), ang(gen), v);
        }
        else
        {
            model = SteeringModel::ula(sensors(gen));
            theta = at_snr(doa(gen) * deg, snr(gen), ang(gen), v);
        }
        const Theta t0 = onebit::pseudo_true(model, theta, noise);
        const auto ms = onebit::moment_matrices(model, theta, noise, fast);
        const auto res = onebit::mcrb(model, noise, ms, t0);
        const Eigen::Matrix3d ai = res.terms.A.inverse();
        worst = std::max(worst, rel(res.mcrb11, (ai * res.terms.B * ai)(0, 0)));
        const auto scaled = onebit::mcrb(model, ms, t0, 10.0 * noise.variance());
        worst_var = std::max(worst_var, rel(scaled.mcrb11, res.mcrb11));
    }
    return {worst < mcrb_rel_tol && worst_var < variance_rel_tol,
            std::to_string(mcrb_configs) + " configs: closed form vs (A^-1 B A^-1)_11 max rel " + fmt("%.3g", worst) +
                " (tol " + fmt("%g", mcrb_rel_tol) + "); assumed-variance x10 max rel " + fmt("%.3g", worst_var) +
                " (tol " + fmt("%g", variance_rel_tol) + ")"};
}

Outcome bound_attainment()
{
    auto s = onebit::preset("fig4");
    s.snr_db = {25, 30, 40};
    s.trials = 1000;
    s.outputs = {{"mc_rmse", "rmse_mml"}, {"mse_bound", "sqrt_mse_bound"}, {"mcrb", "sqrt_mcrb"}};
    const auto t = onebit::run_scenario(s).at(0);
    const auto snr = column(t, "snr_db"), ang = column(t, "angle_beta_deg"), rmse = column(t, "rmse_mml"),
               bound = column(t, "sqrt_mse_bound"), mcrb = column(t, "sqrt_mcrb");
    bool pass = true;
    std::ostringstream d;
    std::map<double, double> plateau_bound, plateau_mcrb;
    for (std::size_t i = 0; i < snr.size(); ++i)
    {
        if (ang[i] == 45.0 && (snr[i] == 25.0 || snr[i] == 30.0))
        {
            const double ratio = rmse[i] / bound[i];
            pass = pass && std::abs(ratio - 1.0) <= attain_tol;
            d << "45deg " << snr[i] << " dB: rmse " << fmt("%.3g", rmse[i]) << " vs sqrt bound " << fmt("%.3g", bound[i])
              << " (ratio " << fmt("%.3g", ratio) << "); ";
        }
        if (ang[i] == 0.0)
        {
            plateau_bound[snr[i]] = bound[i] * bound[i];
            plateau_mcrb[snr[i]] = mcrb[i] * mcrb[i];
        }
    }
    const double db = rel(plateau_bound.at(30), plateau_bound.at(40));
    const double dm = rel(plateau_mcrb.at(30), plateau_mcrb.at(40));
    pass = pass && db < plateau_tol && dm < plateau_tol;
    d << "0deg 30 vs 40 dB: mse bound differs " << fmt("%.3g", db) << ", mcrb " << fmt("%.3g", dm);
    return {pass, d.str()};
}

std::vector<std::size_t> local_maxima(const std::vector<double> &y)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] >= y[i + 1])
            out.push_back(i);
    return out;
}

Outcome bias_reproduction()
{
    auto s = onebit::preset("fig3");
    s.snr_db = {30};
    auto t = onebit::run_scenario(s).at(0);
    const auto doa = column(t, "doa_deg");
    const auto bias = column(t, "abs_bias_deg");

    auto has_peak = [&](double target) {
        double best = std::numeric_limits<double>::infinity();
        for (auto i : local_maxima(bias))
            if (std::abs(bias[i] - target) < std::abs(best - target))
                best = bias[i];
        return best;
    };
    const double p9 = has_peak(bias_peak_high), p18 = has_peak(bias_peak_low);

    s.snr_db = {10};
    t = onebit::run_scenario(s).at(0);
    const auto doa10 = column(t, "doa_deg");
    const auto bias10 = column(t, "abs_bias_deg");
    double max10 = 0.0;
    for (std::size_t i = 0; i < doa10.size(); ++i)
        if (std::abs(std::sin(doa10[i] * deg)) <= low_snr_u_max)
            max10 = std::max(max10, bias10[i]);

    const bool pass = std::abs(p9 - bias_peak_high) <= bias_peak_tol && std::abs(p18 - bias_peak_low) <= bias_peak_tol &&
                      max10 < low_snr_bias_max;
    return {pass, "30 dB local maxima nearest 9 and 1.8 deg: " + fmt("%.3g", p9) + ", " + fmt("%.3g", p18) +
                      " deg (tol " + fmt("%g", bias_peak_tol) + "); 10 dB max |bias| for |u|<=0.9: " +
                      fmt("%.3g", max10) + " deg; " + std::to_string(doa.size()) + " DOAs"};
}

Outcome crb_ordering()
{
    auto s = onebit::preset("fig5");
    s.phi = {-30, 0, 30};
    s.snr_db = {20};
    s.outputs = {{"crb", "sqrt_crb"}, {"mse_bound", "sqrt_mse_bound"}};
    const auto t = onebit::run_scenario(s).at(0);
    const auto doa = column(t, "doa_deg"), ang = column(t, "angle_beta_deg"), crb = column(t, "sqrt_crb"),
               bound = column(t, "sqrt_mse_bound");
    const auto st = statuses(t);

    std::map<std::pair<double, double>, std::pair<double, double>> grid;
    std::map<double, std::pair<int, int>> count;
    for (std::size_t i = 0; i < doa.size(); ++i)
    {
        const double c = st[i] == "ok" ? crb[i] : std::numeric_limits<double>::infinity();
        grid[{doa[i], ang[i]}] = {c, bound[i]};
        auto &[above, total] = count[doa[i]];
        above += c > bound[i];
        ++total;
    }
    double worst_sym = 0.0;
    bool sym_ok = true;
    for (const auto &[key, val] : grid)
    {
        const auto [d, a] = key;
        for (double other : {a + 90.0, 90.0 - a})
        {
            auto it = grid.find({d, other});
            if (it == grid.end())
                continue;
            for (auto [x, y] : {std::pair{val.first, it->second.first}, std::pair{val.second, it->second.second}})
            {
                const double r = std::isinf(x) || std::isinf(y) ? (x == y ? 0.0 : 1.0) : rel(x * x, y * y);
                worst_sym = std::max(worst_sym, r);
            }
        }
    }
    sym_ok = worst_sym < symmetry_rel_tol;
    bool pass = sym_ok;
    std::ostringstream d;
    d << "fraction CRB > MCRB+bias^2:";
    for (const auto &[phi, c] : count)
    {
        const double f = double(c.first) / c.second;
        pass = pass && f > ordering_fraction;
        d << " " << phi << "deg " << fmt("%.3g", f);
    }
    d << "; period-90/mirror-45 max rel " << fmt("%.3g", worst_sym);
    return {pass, d.str()};
}

Outcome oversampling()
{
    auto fine = onebit::preset("fig6");
    std::vector<double> snrs;
    for (double x : fine.snr_db)
        if (x >= coincide_snr_min)
            snrs.push_back(x);
    fine.snr_db = snrs;
    const auto tf = onebit::run_scenario(fine).at(0);
    const auto fs = column(tf, "snr_db"), fu = column(tf, "U"), frmse = column(tf, "rmse_fine");
    std::map<double, std::vector<double>> by_snr;
    std::map<double, double> fine_at_30;
    for (std::size_t i = 0; i < fs.size(); ++i)
    {
        by_snr[fs[i]].push_back(std::log10(frmse[i]));
        if (fs[i] == quantized_snr)
            fine_at_30[fu[i]] = frmse[i];
    }
    double gap = 0.0;
    for (const auto &[snr, v] : by_snr)
        gap = std::max(gap, *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end()));

    auto q = onebit::preset("fig7");
    q.snr_db = {quantized_snr};
    q.outputs = {{"mc_rmse", "rmse"}};
    const auto tq = onebit::run_scenario(q).at(0);
    const auto qu = column(tq, "U"), qrmse = column(tq, "rmse");
    std::map<double, double> quant;
    for (std::size_t i = 0; i < qu.size(); ++i)
        quant[qu[i]] = qrmse[i];

    const bool coincide = gap < log_gap_max;
    const bool decreasing = quant.at(1) > quant.at(2) && quant.at(2) > quant.at(4);
    const bool beats_fine = quant.at(4) < fine_at_30.at(1);
    std::ostringstream d;
    d << "fine max log10 gap " << fmt("%.3g", gap) << " (tol " << log_gap_max << "); quantized 30 dB rmse U=1,2,4: "
      << fmt("%.4g", quant.at(1)) << ", " << fmt("%.4g", quant.at(2)) << ", " << fmt("%.4g", quant.at(4))
      << " Hz; fine U=1: " << fmt("%.4g", fine_at_30.at(1)) << " Hz";
    return {coincide && decreasing && beats_fine, d.str()};
}

Outcome oversampled_bound()
{
    const auto s = onebit::preset("fig8");
    const auto t = onebit::run_scenario(s).at(0);
    const auto ang = column(t, "angle_beta_deg"), u = column(t, "U"), b = column(t, "sqrt_mse_bound");
    std::map<double, std::map<double, double>> curve; // U -> angle -> bound
    for (std::size_t i = 0; i < ang.size(); ++i)
        curve[u[i]][ang[i]] = b[i];
    int ordered = 0, total = 0;
    for (const auto &[a, v1] : curve.at(1))
    {
        const double v2 = curve.at(2).at(a), v4 = curve.at(4).at(a);
        ordered += v4 <= v2 && v2 <= v1;
        ++total;
    }
    const double frac = double(ordered) / total;

    // U = 1 curve on its circular angle grid
    std::vector<double> angles, vals;
    for (const auto &[a, v] : curve.at(1))
    {
        angles.push_back(a);
        vals.push_back(v);
    }
    const std::size_t n = vals.size();
    std::ostringstream dips;
    bool dips_ok = true;
    for (double target : {45.0, 135.0, 225.0, 315.0})
    {
        bool found = false;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (std::abs(angles[i] - target) > dip_window_deg)
                continue;
            const double prev = vals[(i + n - 1) % n], next = vals[(i + 1) % n];
            if (vals[i] < prev && vals[i] < next)
            {
                found = true;
                dips << " " << angles[i] << "deg(" << fmt("%.4g", vals[i]) << " vs " << fmt("%.4g", prev) << "/"
                     << fmt("%.4g", next) << ")";
            }
        }
        if (!found)
            dips << " none near " << target;
        dips_ok = dips_ok && found;
    }
    return {frac >= order_fraction && dips_ok,
            "U4<=U2<=U1 at " + fmt("%.3g", frac) + " of " + std::to_string(total) + " angles (need " +
                fmt("%g", order_fraction) + "); U=1 local minima:" + dips.str()};
}

Outcome complexity_counts()
{
    bool exact = true;
    std::ostringstream d;
    const int k = onebit::SearchConfig{}.grid_size;
    for (int n : {4, 16, 64})
    {
        const auto ula = SteeringModel::ula(n);
        auto rng = onebit::trial_stream(9, n);
        const CVector x = ula.signal({0.2, {1.0, 0.0}}) + onebit::sample_noise(NoiseModel::white(1.0), n, rng);
        const auto mq = onebit::measure_cost_quantized(ula, onebit::one_bit_quantize(x), k);
        const auto mf = onebit::measure_cost_fine(ula, x, k);
        exact = exact && mq.real_ops == onebit::cost_quantized(n, k).real_ops &&
                mf.real_ops == onebit::cost_fine(n, k).real_ops;
        d << "N=" << n << " C_z " << mq.real_ops << " C_x " << mf.real_ops << "; ";
    }
    const double ratio = onebit::complexity_ratio(1024);
    d << "K=" << k << "; ratio(1024) = " << fmt("%.6f", ratio);
    return {exact && std::abs(ratio - 0.25) < ratio_tol, d.str()};
}

Outcome determinism()
{
    std::vector<std::string> bad;
    for (const auto &name : onebit::preset_names())
    {
        auto s = onebit::preset(name);
        onebit::RunOverrides o;
        o.trials = det_trials;
        o.grid = det_grid;
        o.qmc_points = det_qmc;
        o.threads = 1;
        onebit::apply_overrides(s, o);
        auto dump = [](const std::vector<onebit::CsvTable> &ts) {
            std::string all;
            for (const auto &t : ts)
                all += t.file + "\n" + t.str();
            return all;
        };
        const std::string a = dump(onebit::run_scenario(s));
        const std::string b = dump(onebit::run_scenario(s));
        s.threads = det_threads;
        const std::string c = dump(onebit::run_scenario(s));
        if (a != b || a != c)
            bad.push_back(name);
    }
    std::string d = std::to_string(onebit::preset_names().size()) + " presets (trials " + std::to_string(det_trials) +
                    ", grid " + std::to_string(det_grid) + ", qmc " + std::to_string(det_qmc) +
                    "), serial twice and " + std::to_string(det_threads) + " threads";
    for (const auto &n : bad)
        d += "; differs: " + n;
    return {bad.empty(), d};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"moment correctness", moment_correctness},
        {"orthant path equivalence", path_equivalence},
        {"MCRB closed form consistency", mcrb_consistency},
        {"bound attainment and plateau", bound_attainment},
        {"bias curve", bias_reproduction},
        {"CRB vs MCRB ordering and symmetry", crb_ordering},
        {"oversampling behaviour", oversampling},
        {"MSE bound ordering in U", oversampled_bound},
        {"operation counts", complexity_counts},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome r;
        try
        {
            r = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !r.pass;
        std::printf("[%s] %zu %s: %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    r.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
