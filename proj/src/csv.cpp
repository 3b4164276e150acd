// Copyright 2026 The idwmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idwmap/csv.hpp"

#include "idwmap/error.hpp"

namespace idwmap::csv {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view bytes) : in_(bytes) {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") in_.remove_prefix(3);
  }

  bool done() const { return pos_ >= in_.size(); }
  std::size_t line() const { return line_; }

  // Reads one record; returns false at end of input.
  bool next(std::vector<std::string>& fields) {
    fields.clear();
    if (done()) return false;
    std::string field;
    while (true) {
      if (pos_ < in_.size() && in_[pos_] == '"') {
        read_quoted(field);
      } else {
        read_plain(field);
      }
      fields.push_back(std::move(field));
      field.clear();
      if (pos_ >= in_.size()) return true;
      const char c = in_[pos_];
      if (c == ',') {
        ++pos_;
        continue;
      }
      consume_line_end();
      return true;
    }
  }

 private:
  void read_plain(std::string& field) {
    const std::size_t start = pos_;
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c == ',' || c == '\n' || c == '\r') break;
      if (c == '"') {
        throw Error(ErrorCode::MalformedInput,
                    "line " + std::to_string(line_) +
                        ": quote inside unquoted field");
      }
      ++pos_;
    }
    field.assign(in_.substr(start, pos_ - start));
  }

  void read_quoted(std::string& field) {
    const std::size_t open_line = line_;
    ++pos_;
    while (true) {
      if (pos_ >= in_.size()) {
        throw Error(ErrorCode::MalformedInput,
                    "line " + std::to_string(open_line) + ": unterminated quoted field");
      }
      const char c = in_[pos_++];
      if (c == '"') {
        if (pos_ < in_.size() && in_[pos_] == '"') {
          field.push_back('"');
          ++pos_;
          continue;
        }
        break;
      }
      if (c == '\n') ++line_;
      field.push_back(c);
    }
    if (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c != ',' && c != '\n' && c != '\r') {
        throw Error(ErrorCode::MalformedInput,
                    "line " + std::to_string(line_) +
                        ": characters after closing quote");
      }
    }
  }

  void consume_line_end() {
    if (pos_ < in_.size() && in_[pos_] == '\r') ++pos_;
    if (pos_ < in_.size() && in_[pos_] == '\n') ++pos_;
    ++line_;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool blank(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields.front().empty();
}

}  // namespace

Table read(std::string_view bytes) {
  Reader reader(bytes);
  Table table;
  std::vector<std::string> fields;
  if (!reader.next(fields) || blank(fields)) {
    throw Error(ErrorCode::MalformedInput, "line 1: missing header row");
  }
  table.header = fields;
  while (true) {
    const std::size_t line = reader.line();
    if (!reader.next(fields)) break;
    if (blank(fields) && table.header.size() != 1) continue;
    if (blank(fields) && reader.done()) continue;
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line) + ": expected " +
                      std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    table.rows.push_back(fields);
    table.lines.push_back(line);
  }
  return table;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << "\r\n";
}

}  // namespace idwmap::csv
