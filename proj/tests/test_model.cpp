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
#include "oracles.hpp"

#include "onebit/errors.hpp"
#include "onebit/model.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using onebit::Complex;
using onebit::SteeringModel;
using onebit::Theta;

namespace
{

std::vector<double> interior_grid(const SteeringModel &m, int points)
{
    std::vector<double> g(points);
    const double lo = m.lower(), hi = m.upper();
    for (int i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * (i + 0.5) / points;
    return g;
}

} // namespace

TEST_CASE("ULA steering at broadside", "[model]")
{
    const auto m = SteeringModel::ula(16);
    const auto a = m.steering(0.0);
    REQUIRE(a.size() == 16);
    for (int n = 0; n < 16; ++n)
    {
        CHECK(a[n].real() == 0.25);
        CHECK(a[n].imag() == 0.0);
    }
}

TEST_CASE("ULA last element phase at 30 degrees", "[model]")
{
    const auto m = SteeringModel::ula(16);
    const auto a = m.steering(std::numbers::pi / 6);
    const Complex expected = std::polar(0.25, std::numbers::pi * 7.5 * std::sin(std::numbers::pi / 6));
    CHECK(std::abs(a[15] - expected) < 1e-15);
    const auto ref = oracle::ula_steering(16, 0.3);
    const auto b = m.steering(0.3);
    for (int n = 0; n < 16; ++n)
        CHECK(std::abs(b[n] - ref[n]) < 1e-15);
}

TEST_CASE("tone steering and time grid", "[model]")
{
    const auto m = SteeringModel::tone(4e-3, 2500.0, 1250.0);
    REQUIRE(m.size() == 11);
    CHECK(m.positions().front() == Catch::Approx(-2e-3).margin(1e-18));
    CHECK(m.positions().back() == Catch::Approx(2e-3).margin(1e-18));
    for (std::size_t i = 1; i < m.positions().size(); ++i)
        CHECK(m.positions()[i] - m.positions()[i - 1] == Catch::Approx(1.0 / 2500.0).epsilon(1e-12));

    const auto a0 = m.steering(0.0);
    for (int n = 0; n < m.size(); ++n)
        CHECK(std::abs(a0[n] - Complex(1.0 / std::sqrt(11.0), 0.0)) < 1e-15);

    const auto ref = oracle::tone_steering(4e-3, 2500.0, 1000.0);
    const auto a = m.steering(1000.0);
    for (int n = 0; n < m.size(); ++n)
        CHECK(std::abs(a[n] - ref[n]) < 1e-14);

    const auto d = m.steering_d1(317.0);
    CHECK(std::abs(d.dot(m.steering(317.0))) < 1e-10);
}

TEST_CASE("signal is amplitude times steering", "[model]")
{
    const auto ula = SteeringModel::ula(16);
    const auto zero = ula.signal(Theta{0.4, Complex(0.0, 0.0)});
    CHECK(zero.norm() == 0.0);
    const auto ones = ula.signal(Theta{0.0, Complex(1.0, 0.0)});
    for (int n = 0; n < 16; ++n)
        CHECK(ones[n] == Complex(0.25, 0.0));

    const auto tone = SteeringModel::tone(4e-3, 10000.0, 1250.0);
    const Complex beta = std::polar(2.0, std::numbers::pi / 4);
    const auto s = tone.signal(Theta{1000.0, beta});
    const auto ref = oracle::tone_steering(4e-3, 10000.0, 1000.0);
    REQUIRE(s.size() == static_cast<long>(ref.size()));
    for (std::size_t n = 0; n < ref.size(); ++n)
        CHECK(std::abs(s[n] - beta * ref[n]) < 1e-14);
}

TEST_CASE("derivatives against finite differences", "[model]")
{
    const auto ula = SteeringModel::ula(16);
    auto a = [&](double p) { return ula.steering(p); };
    const auto fd = oracle::diff1(a, 0.0, 1e-6);
    CHECK((ula.steering_d1(0.0) - fd).cwiseAbs().maxCoeff() < 1e-6);
    const auto fd2 = oracle::diff2(a, 0.0, 1e-4);
    CHECK((ula.steering_d2(0.0) - fd2).cwiseAbs().maxCoeff() < 1e-4);

    const auto tone = SteeringModel::tone(8e-3, 5000.0, 1250.0);
    for (const SteeringModel *m : {&ula, &tone})
    {
        auto f = [&](double p) { return m->steering(p); };
        const double scale = m->upper() - m->lower();
        for (double phi : interior_grid(*m, 13))
        {
            const auto d1 = m->steering_d1(phi);
            const auto d2 = m->steering_d2(phi);
            const auto n1 = oracle::diff1(f, phi, 1e-6 * scale);
            const auto n2 = oracle::diff2(f, phi, 1e-4 * scale);
            INFO("phi=" << phi);
            CHECK((d1 - n1).norm() <= 1e-5 * d1.norm());
            CHECK((d2 - n2).norm() <= 1e-3 * d2.norm());
        }
    }
}

TEST_CASE("unit norm and orthogonal derivative on a dense grid", "[model]")
{
    const auto ula = SteeringModel::ula(16);
    const auto tone = SteeringModel::tone(4e-3, 10000.0, 1250.0);
    for (const SteeringModel *m : {&ula, &tone})
        for (double phi : interior_grid(*m, 201))
        {
            const auto a = m->steering(phi);
            CHECK(std::abs(a.squaredNorm() - 1.0) < 1e-12);
            CHECK(std::abs(m->steering_d1(phi).dot(a)) < 1e-10);
        }
}

TEST_CASE("domain violations are rejected", "[model]")
{
    const auto ula = SteeringModel::ula(4);
    CHECK_THROWS_AS(ula.steering(std::numbers::pi / 2), onebit::ParameterOutOfRange);
    CHECK_THROWS_AS(ula.steering_d1(-2.0), onebit::ParameterOutOfRange);
    CHECK_THROWS_AS(ula.steering(std::nan("")), onebit::ParameterOutOfRange);
    const auto tone = SteeringModel::tone(4e-3, 2500.0, 1250.0);
    CHECK_NOTHROW(tone.steering(0.0));
    CHECK_THROWS_AS(tone.steering(1250.0), onebit::ParameterOutOfRange);
    CHECK_THROWS_AS(tone.signal(Theta{-1.0, Complex(1.0, 0.0)}), onebit::ParameterOutOfRange);
    CHECK_THROWS_AS(SteeringModel::ula(0), onebit::ParameterOutOfRange);
    CHECK_THROWS_AS(SteeringModel::tone(4.1e-3, 1000.0, 500.0), onebit::ParameterOutOfRange);
}
