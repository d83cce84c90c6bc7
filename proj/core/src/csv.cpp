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

#include <cris/csv.hpp>
#include <cris/types.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace cris
{
    void Table::add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw InvalidInput("table row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
        rows.push_back(std::move(row));
    }

    const Cell &Table::at(std::size_t row, const std::string &column) const
    {
        const auto it = std::find(columns.begin(), columns.end(), column);
        if (it == columns.end())
            throw InvalidInput("no column '" + column + "'");
        return rows.at(row)[static_cast<std::size_t>(it - columns.begin())];
    }

    double Table::number(std::size_t row, const std::string &column) const
    {
        const Cell &c = at(row, column);
        if (const auto *d = std::get_if<double>(&c))
            return *d;
        if (const auto *i = std::get_if<std::int64_t>(&c))
            return static_cast<double>(*i);
        throw InvalidInput("column '" + column + "' is not numeric");
    }

    std::string format_cell(const Cell &cell)
    {
        if (const auto *d = std::get_if<double>(&cell))
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", *d);
            return buf;
        }
        if (const auto *i = std::get_if<std::int64_t>(&cell))
            return std::to_string(*i);
        return std::get<std::string>(cell);
    }

    std::string to_csv(const Table &table)
    {
        std::string out;
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out += (c ? "," : "") + table.columns[c];
        out += '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
                out += (c ? "," : "") + format_cell(row[c]);
            out += '\n';
        }
        return out;
    }

    void write_csv(const Table &table, const std::filesystem::path &path)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error(ErrorCategory::io, "cannot write '" + path.string() + "'");
        out << to_csv(table);
        if (!out)
            throw Error(ErrorCategory::io, "write failed for '" + path.string() + "'");
    }

} // namespace cris
