// SPDX-License-Identifier: Apache-2.0
//
// cris: cylindrical RIS phase-shift design library
// Copyright (C) 2026 The cris authors
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

#ifndef CRIS_TYPES_HPP
#define CRIS_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cris
{
    using Complex = std::complex<double>;
    using CVector = Eigen::VectorXcd;
    using RVector = Eigen::VectorXd;
    using CMatrix = Eigen::MatrixXcd;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;
    inline constexpr Complex j{0.0, 1.0};

    // Error categories double as process exit codes for the CLI.
    enum class ErrorCategory : int
    {
        invalid_input = 2,
        degenerate_channel = 3,
        config = 4,
        validation_failed = 5,
        io = 6,
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCategory category, const std::string &what)
            : std::runtime_error(what), category_(category) {}

        ErrorCategory category() const noexcept { return category_; }

    private:
        ErrorCategory category_;
    };

    class InvalidInput : public Error
    {
    public:
        explicit InvalidInput(const std::string &what) : Error(ErrorCategory::invalid_input, what) {}
    };

    class DegenerateChannel : public Error
    {
    public:
        explicit DegenerateChannel(const std::string &what) : Error(ErrorCategory::degenerate_channel, what) {}
    };

    class ConfigError : public Error
    {
    public:
        explicit ConfigError(const std::string &what) : Error(ErrorCategory::config, what) {}
    };

    // Wrap an angle into [0, 2*pi).
    inline double wrap_angle(double angle)
    {
        double w = std::fmod(angle, two_pi);
        if (w < 0.0)
            w += two_pi;
        if (w >= two_pi) // fmod of tiny negatives can round up to 2*pi
            w = 0.0;
        return w;
    }

    inline double deg2rad(double deg) { return deg * pi / 180.0; }
    inline double rad2deg(double rad) { return rad * 180.0 / pi; }
    inline double db2lin(double db) { return std::pow(10.0, db / 10.0); }
    inline double lin2db(double lin) { return 10.0 * std::log10(lin); }

} // namespace cris

#endif
