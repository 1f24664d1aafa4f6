/*
   Copyright 2026 hyperpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/// Record emission for the command-line front end.
///
/// Both output formats run through one numeric renderer (shortest round-trip
/// decimal via std::to_chars, at most 17 significant digits), so a CSV run
/// and a JSON run of the same experiment carry byte-identical numeric tokens
/// and reruns diff cleanly.

#include <cstdint>
#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperpol/errors.hpp"

namespace hyperpol::cli {

enum class OutputFormat {
    Csv,
    Json,  // newline-delimited: one object per row
};

inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t value) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline void append_json_string(std::string& out, std::string_view text) {
    out += '"';
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    static const char* hex = "0123456789abcdef";
                    out += "\\u00";
                    out += hex[(c >> 4) & 0xf];
                    out += hex[c & 0xf];
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

/// One table cell. Empty cells mark fields a failed row could not produce;
/// they render as an empty CSV field and a JSON null.
class Cell {
  public:
    Cell() : kind_(Kind::Empty) {}
    Cell(double value) : kind_(Kind::Number), text_(format_double(value)) {}
    Cell(std::int64_t value) : kind_(Kind::Number), text_(format_int(value)) {}
    Cell(int value) : Cell(static_cast<std::int64_t>(value)) {}
    Cell(bool value) : kind_(Kind::Boolean), text_(value ? "true" : "false") {}
    Cell(std::string value) : kind_(Kind::Text), text_(std::move(value)) {}
    Cell(const char* value) : kind_(Kind::Text), text_(value) {}

    void append_csv(std::string& out) const {
        // Emitted texts are regime names and status codes; none contain
        // separators, so CSV fields go out unquoted.
        out += text_;
    }

    void append_json(std::string& out) const {
        switch (kind_) {
            case Kind::Empty: out += "null"; break;
            case Kind::Text: append_json_string(out, text_); break;
            default: out += text_; break;
        }
    }

  private:
    enum class Kind { Empty, Number, Boolean, Text };

    Kind kind_;
    std::string text_;
};

/// Streams rows in a fixed column order. CSV gets one header line up front;
/// JSON repeats the column names as keys on every record.
class RecordWriter {
  public:
    RecordWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
        : out_(out), format_(format), columns_(std::move(columns)) {
        if (format_ == OutputFormat::Csv) {
            std::string header;
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                if (i > 0) header += ',';
                header += columns_[i];
            }
            out_ << header << '\n';
        }
    }

    void write(const std::vector<Cell>& cells) {
        if (cells.size() != columns_.size()) {
            throw Error(Errc::SizeMismatch, "record width does not match the column set");
        }
        std::string line;
        if (format_ == OutputFormat::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i > 0) line += ',';
                cells[i].append_csv(line);
            }
        } else {
            line += '{';
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i > 0) line += ", ";
                append_json_string(line, columns_[i]);
                line += ": ";
                cells[i].append_json(line);
            }
            line += '}';
        }
        out_ << line << '\n';
    }

  private:
    std::ostream& out_;
    OutputFormat format_;
    std::vector<std::string> columns_;
};

/// Machine-readable failure report on the error stream, one JSON object per
/// line regardless of the table format.
inline void write_error_record(std::ostream& err, std::string_view code, std::string_view message) {
    std::string line = "{\"error\": ";
    append_json_string(line, code);
    line += ", \"message\": ";
    append_json_string(line, message);
    line += '}';
    err << line << '\n';
}

inline void write_error_record(std::ostream& err, const Error& error) {
    write_error_record(err, errc_name(error.code()), error.message());
}

}  // namespace hyperpol::cli
