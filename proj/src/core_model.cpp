// SPDX-License-Identifier: Apache-2.0
//
// irs-squint: wideband THz intelligent reflecting surface beam squint toolkit
// Copyright (C) 2026 The irs-squint Authors
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

#include "irs_squint/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace irs_squint
{
    namespace
    {
        void require(bool condition, const std::string &message)
        {
            if (!condition)
                throw std::invalid_argument(message);
        }

        bool finite(double x) { return std::isfinite(x); }
    }

    double wrap_phase(double phase)
    {
        if (!finite(phase))
            throw std::invalid_argument("Phase must be finite.");
        double w = std::fmod(phase, two_pi);
        if (w < 0.0)
            w += two_pi;
        if (w >= two_pi) // -tiny + 2*pi rounds up to 2*pi
            w = 0.0;
        return w;
    }

    // ------------------------------------------------------------------------
    WidebandConfig::WidebandConfig(double carrier_hz, double bandwidth_hz, std::size_t subcarriers)
        : carrier_hz_(carrier_hz), bandwidth_hz_(bandwidth_hz), subcarriers_(subcarriers)
    {
        require(finite(carrier_hz) && carrier_hz > 0.0, "Carrier frequency f_c must be finite and > 0.");
        require(finite(bandwidth_hz) && bandwidth_hz > 0.0, "Bandwidth B must be finite and > 0.");
        require(subcarriers >= 1, "Subcarrier count M must be >= 1.");
        require(bandwidth_hz < 2.0 * carrier_hz, "Bandwidth B must be < 2 f_c so that all subcarriers stay positive.");
    }

    double WidebandConfig::subcarrier_hz(std::size_t m0) const
    {
        if (m0 >= subcarriers_)
            throw std::out_of_range("Subcarrier index out of range.");
        // f_m = f_c + (B / M)(m - 1 - (M - 1) / 2) with m - 1 = m0
        const double offset = double(m0) - 0.5 * double(subcarriers_ - 1);
        return carrier_hz_ + subcarrier_spacing_hz() * offset;
    }

    std::vector<double> subcarrier_frequencies(const WidebandConfig &cfg)
    {
        std::vector<double> f(cfg.subcarriers());
        for (std::size_t m0 = 0; m0 < f.size(); ++m0)
            f[m0] = cfg.subcarrier_hz(m0);
        return f;
    }

    // ------------------------------------------------------------------------
    IrsArray::IrsArray(std::size_t elements, double spacing_m)
        : elements(elements), spacing_m(spacing_m)
    {
        require(elements >= 1, "IRS element count R must be >= 1.");
        require(finite(spacing_m) && spacing_m > 0.0, "IRS element spacing d must be finite and > 0.");
    }

    IrsArray IrsArray::half_wavelength(std::size_t elements, const WidebandConfig &cfg)
    {
        return IrsArray(elements, 0.5 * cfg.wavelength_m());
    }

    // ------------------------------------------------------------------------
    void check_direction(double nu, const char *name)
    {
        if (!finite(nu) || nu < -2.0 || nu > 2.0)
            throw std::invalid_argument(std::string("Direction ") + name + " must be finite and inside [-2, 2].");
    }

    FarFieldTarget::FarFieldTarget(double nu, std::optional<double> chi, std::optional<double> psi)
        : nu_(nu), chi_(chi), psi_(psi)
    {
        check_direction(nu_);
        if (chi_ && psi_)
            require(std::abs(nu_ - (std::sin(*chi_) - std::sin(*psi_))) <= 1e-12,
                    "Direction nu is inconsistent with sin(chi) - sin(psi).");
    }

    FarFieldTarget FarFieldTarget::from_angles(double chi, double psi)
    {
        require(finite(chi) && finite(psi), "Angles chi and psi must be finite.");
        return FarFieldTarget(std::sin(chi) - std::sin(psi), chi, psi);
    }

    FarFieldTarget FarFieldTarget::from_direction(double nu)
    {
        return FarFieldTarget(nu, std::nullopt, std::nullopt);
    }

    // ------------------------------------------------------------------------
    double distance(const Point2 &a, const Point2 &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    NearFieldGeometry::NearFieldGeometry(Point2 bs, Point2 user, Point2 irs_origin, IrsArray array)
        : bs_(bs), user_(user), irs_origin_(irs_origin), array_(array)
    {
        for (const auto *p : {&bs_, &user_, &irs_origin_})
            require(finite(p->x) && finite(p->y), "Near-field coordinates must be finite.");

        bs_distances_ = distances_to(bs_);
        user_distances_ = distances_to(user_);
    }

    Point2 NearFieldGeometry::element_position(std::size_t r0) const
    {
        return {irs_origin_.x + double(r0) * array_.spacing_m, irs_origin_.y};
    }

    std::vector<double> NearFieldGeometry::path_lengths() const
    {
        std::vector<double> out(array_.elements);
        for (std::size_t r0 = 0; r0 < out.size(); ++r0)
            out[r0] = bs_distances_[r0] + user_distances_[r0];
        return out;
    }

    std::vector<double> NearFieldGeometry::distances_to(const Point2 &point) const
    {
        if (!finite(point.x) || !finite(point.y))
            throw std::invalid_argument("Point coordinates must be finite.");

        std::vector<double> out(array_.elements);
        for (std::size_t r0 = 0; r0 < out.size(); ++r0)
        {
            out[r0] = distance(element_position(r0), point);
            if (!(out[r0] > 0.0))
                throw CoincidentPointError("Point (" + std::to_string(point.x) + ", " + std::to_string(point.y) +
                                           ") coincides with IRS element " + std::to_string(r0 + 1) + ".");
        }
        return out;
    }

    // ------------------------------------------------------------------------
    PhaseProfile::PhaseProfile(std::vector<double> phases) : phases_(std::move(phases))
    {
        for (auto &p : phases_)
            p = wrap_phase(p);
    }

    DelayProfile::DelayProfile(std::vector<double> delays) : delays_(std::move(delays))
    {
        for (double t : delays_)
            require(finite(t) && t >= 0.0, "DAM delays must be finite and >= 0.");
    }

    DelayProfile DelayProfile::shifted(double delta_s) const
    {
        std::vector<double> out(delays_);
        for (auto &t : out)
            t += delta_s;
        return DelayProfile(std::move(out));
    }

    // ------------------------------------------------------------------------
    CascadedPath::CascadedPath(cplx alpha, double phi_c, double tau_c)
        : alpha(alpha), phi_c(phi_c), tau_c(tau_c)
    {
        require(finite(alpha.real()) && finite(alpha.imag()), "Cascaded gain must be finite.");
        require(finite(phi_c) && phi_c > -1.0 && phi_c < 1.0, "Cascaded angle phi_c must lie in (-1, 1).");
        require(finite(tau_c) && tau_c >= 0.0, "Cascaded delay tau_c must be >= 0.");
    }

    std::vector<CascadedPath> combine_paths(std::span<const PropagationPath> bs_to_irs,
                                            std::span<const PropagationPath> irs_to_user,
                                            const WidebandConfig &cfg)
    {
        const auto check = [](const PropagationPath &p)
        {
            require(p.normalized_angle >= -0.5 && p.normalized_angle <= 0.5,
                    "Normalized path angle must lie in [-1/2, 1/2].");
            require(finite(p.delay_s) && p.delay_s >= 0.0, "Path delay must be >= 0.");
        };

        // alpha_l = alpha_bar_l * exp(-j 2 pi f_c tau_l)
        const auto rotated = [&](const PropagationPath &p)
        { return p.gain * std::polar(1.0, -two_pi * cfg.carrier_hz() * p.delay_s); };

        std::vector<CascadedPath> out;
        out.reserve(bs_to_irs.size() * irs_to_user.size());
        for (const auto &p1 : bs_to_irs)
        {
            check(p1);
            for (const auto &p2 : irs_to_user)
            {
                check(p2);
                out.emplace_back(rotated(p1) * rotated(p2), p1.normalized_angle - p2.normalized_angle,
                                 p1.delay_s + p2.delay_s);
            }
        }
        return out;
    }

    // ------------------------------------------------------------------------
    std::vector<cplx> far_steering_vector(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu)
    {
        require(finite(f_hz) && f_hz > 0.0, "Frequency must be finite and > 0.");
        check_direction(nu);

        const double step = two_pi * array.spacing_in_wavelengths(cfg) * (1.0 + f_hz / cfg.carrier_hz()) * nu;
        std::vector<cplx> a(array.elements);
        for (std::size_t r0 = 0; r0 < a.size(); ++r0)
            a[r0] = std::polar(1.0, -double(r0) * step);
        return a;
    }

    std::vector<cplx> near_steering_vector(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                                           const Point2 &target)
    {
        require(finite(f_hz) && f_hz > 0.0, "Frequency must be finite and > 0.");

        const auto &d_br = geom.bs_distances();
        const auto d_ru = geom.distances_to(target);
        const double k = two_pi / cfg.wavelength_m() * (1.0 + f_hz / cfg.carrier_hz());

        std::vector<cplx> b(d_ru.size());
        for (std::size_t r0 = 0; r0 < b.size(); ++r0)
            b[r0] = std::polar(1.0, -k * (d_br[r0] + d_ru[r0]));
        return b;
    }

    std::vector<cplx> cascaded_far_response(std::span<const CascadedPath> paths, const IrsArray &array,
                                            const WidebandConfig &cfg, double f_hz)
    {
        require(!paths.empty(), "Cascaded response needs at least one path.");
        require(finite(f_hz) && f_hz > 0.0, "Frequency must be finite and > 0.");

        const double scale = 1.0 + f_hz / cfg.carrier_hz();
        std::vector<cplx> h(array.elements, cplx(0.0, 0.0));
        for (const auto &p : paths)
        {
            const cplx common = p.alpha * std::polar(1.0, -two_pi * f_hz * p.tau_c);
            for (std::size_t r0 = 0; r0 < h.size(); ++r0)
                h[r0] += common * std::polar(1.0, -two_pi * double(r0) * p.phi_c * scale);
        }
        return h;
    }

    // ------------------------------------------------------------------------
    std::size_t argmax_first(std::span<const double> values)
    {
        if (values.empty())
            throw std::invalid_argument("argmax of an empty range");
        std::size_t best = 0;
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] > values[best])
                best = i;
        return best;
    }

    std::size_t GainMap::argmax() const
    {
        return argmax_first(values);
    }

    void GainMap::validate() const
    {
        require(axes.size() == 1 || axes.size() == 2, "GainMap must have one or two axes.");
        std::size_t n = 1;
        for (const auto &ax : axes)
        {
            require(!ax.values.empty(), "GainMap axis '" + ax.name + "' is empty.");
            n *= ax.values.size();
        }
        require(values.size() == n, "GainMap value count does not match its axes.");
        for (double v : values)
        {
            require(finite(v) && v >= 0.0, "GainMap values must be finite and >= 0.");
            if (normalized)
                require(v <= 1.0 + 1e-9, "Normalized GainMap value exceeds 1.");
        }
    }
}
