// SPDX-License-Identifier: Apache-2.0
//
// nfsample - planar near-field sampling and reconstruction
// Copyright (C) 2026 The nfsample authors
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

#include "nfsample/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace nfsample
{

/// sin(t)/t with sinc(0) = 1.
template <typename Scalar>
Scalar sinc(Scalar t)
{
    using std::abs;
    using std::sin;
    if (abs(t) < Scalar(1e-8))
        return Scalar(1) - t * t / Scalar(6);
    return sin(t) / t;
}

namespace detail
{
// Safeguarded Newton on a bracket [lo, hi] with f(lo) <= 0 <= f(hi).
template <typename Scalar, typename F, typename DF>
Scalar bracketed_newton(F &&f, DF &&df, Scalar lo, Scalar hi, Scalar guess)
{
    using std::abs;
    Scalar x = (guess > lo && guess < hi) ? guess : (lo + hi) / Scalar(2);
    for (int iter = 0; iter < 200; ++iter)
    {
        const Scalar fx = f(x);
        if (fx == Scalar(0))
            return x;
        if (fx < Scalar(0))
            lo = x;
        else
            hi = x;

        const Scalar slope = df(x);
        Scalar next = (slope > Scalar(0)) ? x - fx / slope : (lo + hi) / Scalar(2);
        if (!(next > lo && next < hi))
            next = (lo + hi) / Scalar(2);

        const Scalar tol = Scalar(4) * std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), abs(next));
        if (abs(next - x) <= tol || (hi - lo) <= tol)
            return next;
        x = next;
    }
    return x;
}
} // namespace detail

/// Warping transformation along one axis of the measurement plane.
///
/// For the x axis the half extent is the source half-width a; the y axis uses b.
/// Lengths are in wavelengths unless a different wavenumber is supplied.
template <typename Scalar = double>
class AxisWarp
{
public:
    AxisWarp(Scalar half_extent, Scalar distance, Scalar wavenumber = Scalar(2) * std::numbers::pi_v<Scalar>)
        : half_extent_(half_extent), distance_(distance), k_(wavenumber) {}

    Scalar half_extent() const { return half_extent_; }
    Scalar distance() const { return distance_; }
    Scalar wavenumber() const { return k_; }

    /// Distances from (x, 0, d) to the source edges at -a and +a.
    Scalar edge_distance_plus(Scalar x) const { return std::hypot(x + half_extent_, distance_); }
    Scalar edge_distance_minus(Scalar x) const { return std::hypot(x - half_extent_, distance_); }

    /// Warped coordinate, odd and strictly increasing with |eta| < 1.
    /// Evaluated as 2x / (R+ + R-), which equals (R+ - R-) / 2a without the cancellation.
    Scalar eta(Scalar x) const
    {
        return Scalar(2) * x / (edge_distance_plus(x) + edge_distance_minus(x));
    }

    Scalar eta_derivative(Scalar x) const
    {
        const Scalar rp = edge_distance_plus(x);
        const Scalar rm = edge_distance_minus(x);
        return ((x + half_extent_) / rp - (x - half_extent_) / rm) / (Scalar(2) * half_extent_);
    }

    /// Phase function (R+ + R-) / 2a; even, minimum sqrt(a^2+d^2)/a at x = 0.
    Scalar gamma(Scalar x) const
    {
        return (edge_distance_plus(x) + edge_distance_minus(x)) / (Scalar(2) * half_extent_);
    }

    /// sqrt(a^2 + d^2)
    Scalar center_distance() const { return std::hypot(half_extent_, distance_); }

    /// First-order (linear) warped coordinate x / sqrt(a^2 + d^2).
    Scalar eta_hat_uniform(Scalar x) const { return x / center_distance(); }

    /// Oversampling factor eta_hat_uniform(x) / eta(x).
    ///
    /// The ratio simplifies to gamma(x) / gamma(0), so the removable singularity at
    /// x = 0 never has to be evaluated as 0/0.
    Scalar chi_uniform(Scalar x) const
    {
        return (edge_distance_plus(x) + edge_distance_minus(x)) / (Scalar(2) * center_distance());
    }

    /// Uniform sampling step pi / (k * eta'(0)), i.e. (lambda/2) sqrt(a^2+d^2)/a.
    Scalar uniform_step() const { return std::numbers::pi_v<Scalar> * center_distance() / (k_ * half_extent_); }

    /// Nyquist step of the warped coordinate, pi / (k a).
    Scalar warped_step() const { return std::numbers::pi_v<Scalar> / (k_ * half_extent_); }

    /// Solves eta(x) = value. Throws OutOfRange when |value| >= 1.
    Scalar invert_eta(Scalar value) const
    {
        using std::abs;
        if (!(abs(value) < Scalar(1)))
            throw Error(ErrorCode::OutOfRange, "warped coordinate must satisfy |eta| < 1, got " + std::to_string(double(value)));
        if (value == Scalar(0))
            return Scalar(0);

        const Scalar target = abs(value);
        Scalar hi = std::max(center_distance(), half_extent_);
        while (eta(hi) < target)
            hi *= Scalar(2);

        const Scalar root = detail::bracketed_newton<Scalar>(
            [&](Scalar x) { return eta(x) - target; },
            [&](Scalar x) { return eta_derivative(x); },
            Scalar(0), hi, target * center_distance());
        return value < Scalar(0) ? -root : root;
    }

private:
    Scalar half_extent_;
    Scalar distance_;
    Scalar k_;
};

/// Spatially varying oversampling factor 1 - (1 - alpha) |sin(pi x / (2 X))|^p.
///
/// The absolute value keeps the factor even for odd p. alpha > 1 raises the
/// sampling rate towards the edges of the observation span; alpha < 1 lowers it.
template <typename Scalar>
Scalar chi_sinusoidal(Scalar x, Scalar alpha, int p, Scalar half_span)
{
    using std::abs;
    using std::pow;
    using std::sin;
    const Scalar s = abs(sin(std::numbers::pi_v<Scalar> * x / (Scalar(2) * half_span)));
    return Scalar(1) - (Scalar(1) - alpha) * pow(s, p);
}

template <typename Scalar>
Scalar chi_sinusoidal_derivative(Scalar x, Scalar alpha, int p, Scalar half_span)
{
    using std::cos;
    using std::pow;
    using std::sin;
    const Scalar w = std::numbers::pi_v<Scalar> / (Scalar(2) * half_span);
    const Scalar s = sin(w * x);
    const Scalar sign = s < Scalar(0) ? Scalar(-1) : Scalar(1);
    return -(Scalar(1) - alpha) * Scalar(p) * pow(sign * s, p - 1) * sign * cos(w * x) * w;
}

/// Warped coordinate chi(x) * eta(x) with the sinusoidal oversampling factor.
template <typename Scalar = double>
class SinusoidalWarp
{
public:
    SinusoidalWarp(AxisWarp<Scalar> base, Scalar alpha, int p, Scalar half_span)
        : base_(base), alpha_(alpha), p_(p), half_span_(half_span)
    {
        if (p < 1)
            throw Error(ErrorCode::Config, "oversampling exponent p must be >= 1");
        if (!(alpha > Scalar(0)))
            throw Error(ErrorCode::Config, "oversampling constant alpha must be positive");
        if (!(half_span > Scalar(0)))
            throw Error(ErrorCode::NonPositiveDimension, "observation half span must be positive");
    }

    const AxisWarp<Scalar> &base() const { return base_; }
    Scalar alpha() const { return alpha_; }
    int exponent() const { return p_; }
    Scalar half_span() const { return half_span_; }

    Scalar chi(Scalar x) const { return chi_sinusoidal(x, alpha_, p_, half_span_); }

    /// eta_hat(x) = chi(x) eta(x)
    Scalar value(Scalar x) const { return chi(x) * base_.eta(x); }

    Scalar derivative(Scalar x) const
    {
        return chi_sinusoidal_derivative(x, alpha_, p_, half_span_) * base_.eta(x) + chi(x) * base_.eta_derivative(x);
    }

    /// Solves chi(x) eta(x) = target on [-half_span, half_span].
    /// Throws NoRoot when the target lies outside the values reached on that bracket.
    Scalar invert(Scalar target) const
    {
        using std::abs;
        if (target == Scalar(0))
            return Scalar(0);
        const Scalar t = abs(target);
        const Scalar edge = value(half_span_);
        if (!(t <= edge * (Scalar(1) + Scalar(1e-12))))
            throw Error(ErrorCode::NoRoot, "target " + std::to_string(double(target)) +
                                               " outside the warped range [0, " + std::to_string(double(edge)) + "]");
        if (t >= edge)
            return target < Scalar(0) ? -half_span_ : half_span_;

        const Scalar root = detail::bracketed_newton<Scalar>(
            [&](Scalar x) { return value(x) - t; }, [&](Scalar x) { return derivative(x); },
            Scalar(0), half_span_, base_.invert_eta(std::min(t, Scalar(0.999999))));
        if (abs(value(root) - t) > Scalar(1e-10))
            throw Error(ErrorCode::NoRoot, "root polish did not converge for target " + std::to_string(double(target)));
        return target < Scalar(0) ? -root : root;
    }

private:
    AxisWarp<Scalar> base_;
    Scalar alpha_;
    int p_;
    Scalar half_span_;
};

} // namespace nfsample
