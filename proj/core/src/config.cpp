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

#include <cris/config.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace cris
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        // Thrown by value parsers; the caller adds line and key context.
        struct BadValue
        {
            std::string reason;
        };

        double parse_double(std::string_view s)
        {
            s = trim(s);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
                throw BadValue{"expected a number, got '" + std::string(s) + "'"};
            if (!std::isfinite(v))
                throw BadValue{"value must be finite"};
            return v;
        }

        std::uint64_t parse_unsigned(std::string_view s)
        {
            s = trim(s);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
                throw BadValue{"expected a non-negative integer, got '" + std::string(s) + "'"};
            return v;
        }

        bool parse_bool(std::string_view s)
        {
            s = trim(s);
            if (s == "true" || s == "1")
                return true;
            if (s == "false" || s == "0")
                return false;
            throw BadValue{"expected true or false, got '" + std::string(s) + "'"};
        }

        template <typename T, typename Parse>
        std::vector<T> parse_list(std::string_view s, Parse parse)
        {
            std::vector<T> out;
            while (true)
            {
                const auto comma = s.find(',');
                out.push_back(static_cast<T>(parse(s.substr(0, comma))));
                if (comma == std::string_view::npos)
                    break;
                s.remove_prefix(comma + 1);
            }
            return out;
        }

        std::string format_double(double v)
        {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v); // shortest round-trip form
            (void)ec;
            return std::string(buf, ptr);
        }

        template <typename T>
        std::string format_list(const std::vector<T> &values)
        {
            std::string out;
            for (std::size_t i = 0; i < values.size(); ++i)
            {
                if (i)
                    out += ", ";
                if constexpr (std::is_floating_point_v<T>)
                    out += format_double(values[i]);
                else
                    out += std::to_string(values[i]);
            }
            return out;
        }

        struct Field
        {
            std::string key;
            std::function<void(ScenarioConfig &, std::string_view)> parse;
            std::function<std::string(const ScenarioConfig &)> print;
        };

        Field real(std::string key, double ScenarioConfig::*member)
        {
            return {std::move(key), [member](ScenarioConfig &c, std::string_view v) { c.*member = parse_double(v); },
                    [member](const ScenarioConfig &c) { return format_double(c.*member); }};
        }

        template <typename U>
        Field count(std::string key, U ScenarioConfig::*member)
        {
            return {std::move(key),
                    [member](ScenarioConfig &c, std::string_view v) { c.*member = static_cast<U>(parse_unsigned(v)); },
                    [member](const ScenarioConfig &c) { return std::to_string(c.*member); }};
        }

        Field flag(std::string key, bool ScenarioConfig::*member)
        {
            return {std::move(key), [member](ScenarioConfig &c, std::string_view v) { c.*member = parse_bool(v); },
                    [member](const ScenarioConfig &c) { return std::string(c.*member ? "true" : "false"); }};
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = {
                count("bs_antennas", &ScenarioConfig::bs_antennas),
                count("ris_layers", &ScenarioConfig::ris_layers),
                count("ris_ring", &ScenarioConfig::ris_ring),
                count("upa_rows", &ScenarioConfig::upa_rows),
                count("upa_cols", &ScenarioConfig::upa_cols),
                real("spacing_m", &ScenarioConfig::spacing_m),
                real("wavelength_m", &ScenarioConfig::wavelength_m),
                real("bs_azimuth_deg", &ScenarioConfig::bs_azimuth_deg),
                real("bs_elevation_deg", &ScenarioConfig::bs_elevation_deg),
                real("bs_aod_deg", &ScenarioConfig::bs_aod_deg),
                real("uav_azimuth_deg", &ScenarioConfig::uav_azimuth_deg),
                real("uav_elevation_deg", &ScenarioConfig::uav_elevation_deg),
                real("itv_azimuth_deg", &ScenarioConfig::itv_azimuth_deg),
                real("itv_elevation_deg", &ScenarioConfig::itv_elevation_deg),
                real("rician_k_bs_db", &ScenarioConfig::rician_k_bs_db),
                real("rician_k_uav_db", &ScenarioConfig::rician_k_uav_db),
                real("rician_k_itv_db", &ScenarioConfig::rician_k_itv_db),
                real("tx_power_uav_dbm", &ScenarioConfig::tx_power_uav_dbm),
                real("tx_power_itv_dbm", &ScenarioConfig::tx_power_itv_dbm),
                real("noise_uav_dbm", &ScenarioConfig::noise_uav_dbm),
                real("noise_itv_dbm", &ScenarioConfig::noise_itv_dbm),
                real("direct_var_uav_db", &ScenarioConfig::direct_var_uav_db),
                real("direct_var_itv_db", &ScenarioConfig::direct_var_itv_db),
                real("k0", &ScenarioConfig::k0),
                real("alpha_bs", &ScenarioConfig::alpha_bs),
                real("alpha_uav", &ScenarioConfig::alpha_uav),
                real("alpha_itv", &ScenarioConfig::alpha_itv),
                real("dist_bs_m", &ScenarioConfig::dist_bs_m),
                real("dist_uav_m", &ScenarioConfig::dist_uav_m),
                real("dist_itv_m", &ScenarioConfig::dist_itv_m),
                flag("los_only", &ScenarioConfig::los_only),
                real("step_k", &ScenarioConfig::step_k),
                real("step_t", &ScenarioConfig::step_t),
                count("max_iterations", &ScenarioConfig::max_iterations),
                real("tolerance", &ScenarioConfig::tolerance),
                count("mc_trials", &ScenarioConfig::mc_trials),
                count("opt_trials", &ScenarioConfig::opt_trials),
                count("seed", &ScenarioConfig::seed),
                {"azimuth_list_deg",
                 [](ScenarioConfig &c, std::string_view v) { c.azimuth_list_deg = parse_list<double>(v, parse_double); },
                 [](const ScenarioConfig &c) { return format_list(c.azimuth_list_deg); }},
                {"nr_list",
                 [](ScenarioConfig &c, std::string_view v) { c.nr_list = parse_list<std::size_t>(v, parse_unsigned); },
                 [](const ScenarioConfig &c) { return format_list(c.nr_list); }},
            };
            return table;
        }

        LinkStats user_link(double k_db, double beta, double direct_db, double p_dbm, double noise_dbm)
        {
            LinkStats s;
            s.rician_k = db2lin(k_db);
            s.pathloss_beta = beta;
            s.direct_var = db2lin(direct_db);
            s.tx_power = db2lin(p_dbm);
            s.noise_var = db2lin(noise_dbm);
            return s;
        }

        Scenario base_scenario(const ScenarioConfig &c)
        {
            Scenario s;
            s.bs_antennas = c.bs_antennas;
            s.angles.azimuth_aoa_br = deg2rad(c.bs_azimuth_deg);
            s.angles.elevation_aoa_br = deg2rad(c.bs_elevation_deg);
            s.angles.aod_bs = deg2rad(c.bs_aod_deg);
            s.angles.azimuth_aod_ru = deg2rad(c.uav_azimuth_deg);
            s.angles.elevation_aod_ru = deg2rad(c.uav_elevation_deg);
            s.angles.azimuth_aod_rv = deg2rad(c.itv_azimuth_deg);
            s.angles.elevation_aod_rv = deg2rad(c.itv_elevation_deg);
            s.angles = s.angles.normalized();

            s.bs_link.rician_k = c.los_only ? pure_los : db2lin(c.rician_k_bs_db);
            s.bs_link.pathloss_beta = pathloss(c.k0, c.dist_bs_m, c.alpha_bs);
            s.uav_link = user_link(c.rician_k_uav_db, pathloss(c.k0, c.dist_uav_m, c.alpha_uav), c.direct_var_uav_db,
                                   c.tx_power_uav_dbm, c.noise_uav_dbm);
            s.itv_link = user_link(c.rician_k_itv_db, pathloss(c.k0, c.dist_itv_m, c.alpha_itv), c.direct_var_itv_db,
                                   c.tx_power_itv_dbm, c.noise_itv_dbm);
            if (c.los_only)
            {
                s.uav_link.rician_k = pure_los;
                s.itv_link.rician_k = pure_los;
            }
            return s;
        }
    } // namespace

    double pathloss(double k0, double distance_m, double alpha)
    {
        if (!(k0 > 0.0) || !(distance_m > 0.0))
            throw InvalidInput("path loss needs k0 > 0 and a positive distance");
        return k0 * std::pow(distance_m, -alpha);
    }

    std::vector<double> ScenarioConfig::default_azimuths()
    {
        std::vector<double> out;
        for (int a = 0; a <= 90; a += 5)
            out.push_back(static_cast<double>(a));
        return out;
    }

    Scenario ScenarioConfig::uca_scenario() const
    {
        Scenario s = base_scenario(*this);
        s.ris = ArrayDescriptor::uca(ris_layers, ris_ring, spacing_m, wavelength_m);
        s.validate();
        return s;
    }

    Scenario ScenarioConfig::upa_scenario() const
    {
        Scenario s = base_scenario(*this);
        const std::size_t rows = upa_rows ? upa_rows : ris_layers;
        const std::size_t cols = upa_cols ? upa_cols : ris_ring / 2;
        if (rows * cols * 2 != ris_layers * ris_ring)
            throw InvalidInput("the UPA baseline must hold half as many elements as the UCA (rows * cols = N / 2)");
        s.ris = ArrayDescriptor::upa(rows, cols, spacing_m, wavelength_m);
        s.validate();
        return s;
    }

    OptimizerOptions ScenarioConfig::optimizer_options() const
    {
        OptimizerOptions o;
        o.step_k = step_k;
        o.step_t = step_t;
        o.max_iterations = max_iterations;
        o.tolerance = tolerance;
        return o;
    }

    void ScenarioConfig::validate() const
    {
        (void)uca_scenario();
        (void)upa_scenario();
        if (!(step_k > 0.0))
            throw InvalidInput("step_k must be positive");
        if (!(tolerance > 0.0))
            throw InvalidInput("tolerance must be positive");
        if (max_iterations < 1)
            throw InvalidInput("max_iterations must be >= 1");
        if (azimuth_list_deg.empty() || nr_list.empty())
            throw InvalidInput("sweep lists must not be empty");
    }

    ScenarioConfig parse_config(std::string_view text, const std::string &origin)
    {
        ScenarioConfig cfg;
        std::unordered_set<std::string> seen;
        std::size_t line_no = 0;

        while (!text.empty())
        {
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const std::string where = origin + ":" + std::to_string(line_no);
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(where + ": expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));

            const auto &table = fields();
            const auto it = std::find_if(table.begin(), table.end(), [&](const Field &f) { return f.key == key; });
            if (it == table.end())
                throw ConfigError(where + ": unknown key '" + key + "'");
            if (!seen.insert(key).second)
                throw ConfigError(where + ": duplicate key '" + key + "'");
            try
            {
                it->parse(cfg, value);
            }
            catch (const BadValue &e)
            {
                throw ConfigError(where + ": " + key + ": " + e.reason);
            }
        }

        try
        {
            cfg.validate();
        }
        catch (const InvalidInput &e)
        {
            throw ConfigError(origin + ": " + e.what());
        }
        return cfg;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorCategory::io, "cannot open config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str(), path.string());
    }

    std::string emit_config(const ScenarioConfig &config)
    {
        std::string out = "# cris scenario configuration\n";
        for (const Field &f : fields())
            out += f.key + " = " + f.print(config) + "\n";
        return out;
    }

} // namespace cris
