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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace onebit
{

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Parameter of interest phi (radians for DOA, Hz for frequency) and complex amplitude beta.
struct Theta
{
    double phi = 0.0;
    Complex beta{1.0, 0.0};
};

enum class Family
{
    Ula,
    Tone
};

/// Unit-norm steering family a(phi) = N^{-1/2} exp(j * w_n * f(phi)) with analytic derivatives.
///
/// ULA: w_n = pi * (n - (N+1)/2), f = sin, domain (-pi/2, pi/2), half-wavelength spacing.
/// Tone: w_n = 2 pi t_n, f = identity, domain [0, B), t_n on a uniform grid from -T/2 to T/2.
class SteeringModel
{
  public:
    static SteeringModel ula(int sensors);

    /// `interval` T in seconds, `sample_rate` f_s in Hz (T * f_s must be an integer), `max_frequency` B in Hz.
    static SteeringModel tone(double interval, double sample_rate, double max_frequency);

    Family family() const { return family_; }
    int size() const { return static_cast<int>(weights_.size()); }

    /// Domain bounds; ULA excludes both ends, tone includes the lower end only.
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    bool contains(double phi) const;

    /// Sensor offsets n - (N+1)/2 (ULA) or time samples t_n in seconds (tone).
    const std::vector<double> &positions() const { return positions_; }

    CVector steering(double phi) const;
    CVector steering_d1(double phi) const;
    CVector steering_d2(double phi) const;
    CVector signal(const Theta &theta) const;

  private:
    SteeringModel(Family family, std::vector<double> positions, std::vector<double> weights, double lower,
                  double upper);

    void check(double phi) const;

    Family family_;
    std::vector<double> positions_;
    std::vector<double> weights_;
    double lower_;
    double upper_;
};

} // namespace onebit
