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

namespace onebit
{

/// Standard normal tail probability Q(x) = P(Z > x), computed as erfc(x / sqrt(2)) / 2.
/// glibc's erfc is accurate to a few ulp over the whole range, well inside 1e-12 relative.
double q_function(double x);

/// log Q(x), finite for arbitrarily large x (asymptotic series once erfc underflows).
double log_q_function(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse of the standard normal CDF. Requires 0 < p < 1.
double normal_quantile(double p);

/// Upper orthant probability P(X > h, Y > k) of a standard bivariate normal pair with correlation r.
///
/// Drezner-Wesolowsky type Gauss-Legendre evaluation as refined by Genz (absolute error ~1e-15).
/// Accepts h, k = +/-infinity and |r| <= 1.
double bivariate_normal_upper(double h, double k, double r);

} // namespace onebit
