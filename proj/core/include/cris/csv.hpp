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

#ifndef CRIS_CSV_HPP
#define CRIS_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace cris
{
    using Cell = std::variant<double, std::int64_t, std::string>;

    // Column-ordered result table; rendered as CSV with one header row and 12 significant digits.
    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        void add_row(std::vector<Cell> row);
        const Cell &at(std::size_t row, const std::string &column) const;
        double number(std::size_t row, const std::string &column) const;
    };

    std::string format_cell(const Cell &cell);
    std::string to_csv(const Table &table);
    void write_csv(const Table &table, const std::filesystem::path &path);

} // namespace cris

#endif
