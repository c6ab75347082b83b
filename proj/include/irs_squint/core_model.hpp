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

#ifndef IRS_SQUINT_CORE_MODEL_HPP
#define IRS_SQUINT_CORE_MODEL_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace irs_squint
{
    using cplx = std::complex<double>;

    /// Speed of light in vacuum, m/s (exact SI value)
    inline constexpr double speed_of_light = 299792458.0;

    inline constexpr double pi = 3.141592653589793238462643383279502884;
    inline constexpr double two_pi = 2.0 * pi;

    /// Wraps an angle into [0, 2*pi)
    double wrap_phase(double phase);

    // ------------------------------------------------------------------------
    // Wideband configuration: carrier, bandwidth and number of subcarriers.
    // The carrier wavelength is always derived from the carrier frequency.
    class WidebandConfig
    {
    public:
        WidebandConfig(double carrier_hz, double bandwidth_hz, std::size_t subcarriers);

        double carrier_hz() const { return carrier_hz_; }
        double bandwidth_hz() const { return bandwidth_hz_; }
        std::size_t subcarriers() const { return subcarriers_; }

        double wavelength_m() const { return speed_of_light / carrier_hz_; }
        double subcarrier_spacing_hz() const { return bandwidth_hz_ / double(subcarriers_); }

        /// Frequency of subcarrier with 0-based index m0 (formula index m = m0 + 1)
        double subcarrier_hz(std::size_t m0) const;

        bool operator==(const WidebandConfig &) const = default;

    private:
        double carrier_hz_;
        double bandwidth_hz_;
        std::size_t subcarriers_;
    };

    /// All M subcarrier frequencies in ascending order, Hz
    std::vector<double> subcarrier_frequencies(const WidebandConfig &cfg);

    // ------------------------------------------------------------------------
    // Uniform linear array of IRS elements along +x
    struct IrsArray
    {
        std::size_t elements = 1;
        double spacing_m = 0.0;

        IrsArray(std::size_t elements, double spacing_m);

        /// Half-wavelength spacing at the carrier of cfg
        static IrsArray half_wavelength(std::size_t elements, const WidebandConfig &cfg);

        /// Spacing in units of the carrier wavelength (0.5 for a half-wavelength array)
        double spacing_in_wavelengths(const WidebandConfig &cfg) const { return spacing_m / cfg.wavelength_m(); }

        /// Physical aperture (R - 1) * d, meters
        double aperture_m() const { return double(elements - 1) * spacing_m; }

        bool operator==(const IrsArray &) const = default;
    };

    // ------------------------------------------------------------------------
    // Far-field target: normalized direction nu = sin(chi) - sin(psi)
    class FarFieldTarget
    {
    public:
        /// From angle of arrival chi (BS->IRS) and angle of departure psi (IRS->user), radians
        static FarFieldTarget from_angles(double chi, double psi);

        /// From the normalized direction directly; the angles stay unset
        static FarFieldTarget from_direction(double nu);

        double nu() const { return nu_; }
        std::optional<double> chi() const { return chi_; }
        std::optional<double> psi() const { return psi_; }

    private:
        FarFieldTarget(double nu, std::optional<double> chi, std::optional<double> psi);

        double nu_;
        std::optional<double> chi_;
        std::optional<double> psi_;
    };

    /// Throws std::invalid_argument unless nu is finite and inside [-2, 2]
    void check_direction(double nu, const char *name = "nu");

    // ------------------------------------------------------------------------
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
        bool operator==(const Point2 &) const = default;
    };

    double distance(const Point2 &a, const Point2 &b);

    /// Thrown when a point coincides with an IRS element
    class CoincidentPointError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // ------------------------------------------------------------------------
    // Near-field layout: BS, user and a ULA whose first element sits at irs_origin.
    // Element r (1-based) is at (x_R + (r - 1) d, y_R).
    class NearFieldGeometry
    {
    public:
        NearFieldGeometry(Point2 bs, Point2 user, Point2 irs_origin, IrsArray array);

        const Point2 &bs() const { return bs_; }
        const Point2 &user() const { return user_; }
        const Point2 &irs_origin() const { return irs_origin_; }
        const IrsArray &array() const { return array_; }

        /// Position of element with 0-based index r0
        Point2 element_position(std::size_t r0) const;

        /// Per-element BS->element distances d_r^BR
        const std::vector<double> &bs_distances() const { return bs_distances_; }

        /// Per-element element->user distances d_r^RU
        const std::vector<double> &user_distances() const { return user_distances_; }

        /// Per-element cascade path length d_r^BR + d_r^RU
        std::vector<double> path_lengths() const;

        /// Distances from every element to point; throws CoincidentPointError on a zero distance
        std::vector<double> distances_to(const Point2 &point) const;

    private:
        Point2 bs_, user_, irs_origin_;
        IrsArray array_;
        std::vector<double> bs_distances_;
        std::vector<double> user_distances_;
    };

    // ------------------------------------------------------------------------
    // Per-element reflection phases, canonicalized into [0, 2*pi)
    class PhaseProfile
    {
    public:
        PhaseProfile() = default;
        explicit PhaseProfile(std::vector<double> phases);

        static PhaseProfile zeros(std::size_t elements) { return PhaseProfile(std::vector<double>(elements, 0.0)); }

        std::size_t size() const { return phases_.size(); }
        double operator[](std::size_t r0) const { return phases_[r0]; }
        std::span<const double> values() const { return phases_; }

    private:
        std::vector<double> phases_;
    };

    // Per-element true-time delays (DAM), seconds, all non-negative
    class DelayProfile
    {
    public:
        DelayProfile() = default;
        explicit DelayProfile(std::vector<double> delays);

        static DelayProfile zeros(std::size_t elements) { return DelayProfile(std::vector<double>(elements, 0.0)); }

        std::size_t size() const { return delays_.size(); }
        double operator[](std::size_t r0) const { return delays_[r0]; }
        std::span<const double> values() const { return delays_; }

        /// Same profile with delta added to every entry
        DelayProfile shifted(double delta_s) const;

    private:
        std::vector<double> delays_;
    };

    // ------------------------------------------------------------------------
    // One BS->IRS or IRS->user propagation path of the far-field multipath model
    struct PropagationPath
    {
        cplx gain = 1.0;              // equivalent baseband gain (before carrier rotation)
        double normalized_angle = 0.0; // (d / lambda_c) sin(angle), in [-1/2, 1/2]
        double delay_s = 0.0;          // delay to/from the first element
    };

    // Equivalent BS-IRS-user path: alpha^C, phi^C = phi^BR - phi^RU, tau^C
    struct CascadedPath
    {
        cplx alpha = 1.0;
        double phi_c = 0.0;
        double tau_c = 0.0;

        CascadedPath(cplx alpha, double phi_c, double tau_c);
    };

    /// Combines L1 incident and L2 departing paths into the L1*L2 cascaded paths
    std::vector<CascadedPath> combine_paths(std::span<const PropagationPath> bs_to_irs,
                                            std::span<const PropagationPath> irs_to_user,
                                            const WidebandConfig &cfg);

    // ------------------------------------------------------------------------
    // Steering vectors and channel responses. Entry index is 0-based (r0 = r - 1).

    /// a_r = exp(-j 2 pi r0 (d / lambda_c)(1 + f / f_c) nu)
    std::vector<cplx> far_steering_vector(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu);

    /// b_r = exp(-j (2 pi / lambda_c)(1 + f / f_c)(d_r^BR + |element_r - target|))
    std::vector<cplx> near_steering_vector(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                                           const Point2 &target);

    /// Multipath cascaded frequency response h_r(f), one entry per element
    std::vector<cplx> cascaded_far_response(std::span<const CascadedPath> paths, const IrsArray &array,
                                            const WidebandConfig &cfg, double f_hz);

    // ------------------------------------------------------------------------
    // Sampled beam-gain surface. Values are stored row-major over the axes.
    struct GainAxis
    {
        std::string name;
        std::string unit;
        std::vector<double> values;
    };

    struct GainMap
    {
        std::vector<GainAxis> axes; // 1 or 2 axes
        std::vector<double> values;
        bool normalized = true; // true: divided by R

        std::size_t rows() const { return axes.size() == 2 ? axes[0].values.size() : 1; }
        std::size_t cols() const { return axes.empty() ? 0 : axes.back().values.size(); }
        double at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
        std::span<const double> row(std::size_t i) const { return std::span<const double>(values).subspan(i * cols(), cols()); }

        /// Flat index of the maximum; ties go to the smallest (row-major) index
        std::size_t argmax() const;

        /// Throws std::invalid_argument when shape or value invariants are violated
        void validate() const;
    };

    /// Index of the first maximum of a non-empty range
    std::size_t argmax_first(std::span<const double> values);
}

#endif
