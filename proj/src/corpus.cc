// Copyright 2026 The EDC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edc/corpus.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edc {
namespace {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;  // line on which the row starts
};

// RFC 4180 reader. Accepts LF or CRLF row endings; blank lines are skipped.
std::vector<CsvRow> ReadCsv(std::string_view text, const std::string& source) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  while (i < text.size()) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool row_done = false;
    bool any_content = false;
    while (!row_done) {
      if (i < text.size() && text[i] == '"') {
        any_content = true;
        ++i;
        const std::size_t quote_line = line;
        for (;;) {
          if (i >= text.size()) throw ParseError(source, quote_line, "unterminated quoted field");
          const char c = text[i++];
          if (c == '"') {
            if (i < text.size() && text[i] == '"') {
              field.push_back('"');
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
          }
        }
        if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          throw ParseError(source, line, "unexpected character after closing quote");
        }
      } else {
        while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          field.push_back(text[i++]);
          any_content = true;
        }
      }

      if (i >= text.size()) {
        row_done = true;
      } else if (text[i] == ',') {
        any_content = true;
        ++i;
      } else {
        if (text[i] == '\r') ++i;
        if (i < text.size() && text[i] == '\n') ++i;
        ++line;
        row_done = true;
      }
      row.fields.push_back(std::move(field));
      field.clear();
    }
    if (any_content) rows.push_back(std::move(row));
  }
  return rows;
}

std::string Trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

std::string Slurp(std::istream& in, const std::string& source) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + source);
  return buf.str();
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

Corpus ParseClothoCsv(std::istream& in, const std::string& source_name) {
  const std::string text = Slurp(in, source_name);
  const std::vector<CsvRow> rows = ReadCsv(text, source_name);
  if (rows.empty()) throw ParseError(source_name, 1, "missing header row");

  const CsvRow& header = rows.front();
  std::vector<std::string> expected = {"file_name"};
  for (int k = 1; k <= kClothoCaptionsPerClip; ++k) expected.push_back("caption_" + std::to_string(k));
  for (std::size_t c = 0; c < expected.size(); ++c) {
    if (c >= header.fields.size()) {
      throw ParseError(source_name, header.line, "header is missing column '" + expected[c] + "'");
    }
    if (Trim(header.fields[c]) != expected[c]) {
      throw ParseError(source_name, header.line,
                       "header column " + std::to_string(c + 1) + " must be '" + expected[c] +
                           "', found '" + Trim(header.fields[c]) + "'");
    }
  }
  if (header.fields.size() > expected.size()) {
    throw ParseError(source_name, header.line,
                     "header has unexpected extra column '" + header.fields[expected.size()] + "'");
  }

  Corpus corpus;
  corpus.records.reserve((rows.size() - 1) * kClothoCaptionsPerClip);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    const std::string where = "row " + std::to_string(r);
    if (row.fields.size() != expected.size()) {
      throw ParseError(source_name, row.line,
                       where + ": expected " + std::to_string(expected.size()) + " columns, got " +
                           std::to_string(row.fields.size()));
    }
    std::string file_name = Trim(row.fields[0]);
    if (file_name.empty()) throw ParseError(source_name, row.line, where + ": empty file_name");
    for (int k = 0; k < kClothoCaptionsPerClip; ++k) {
      std::string caption = Trim(row.fields[static_cast<std::size_t>(k) + 1]);
      if (caption.empty()) {
        throw ParseError(source_name, row.line,
                         where + ": empty caption in column '" + expected[k + 1] + "'");
      }
      corpus.records.push_back(CaptionRecord{file_name, k, std::move(caption)});
    }
  }
  return corpus;
}

Corpus LoadClothoCsv(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseClothoCsv(in, path.string());
}

Corpus ParseJsonl(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (Trim(line).empty()) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source_name, line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source_name, line_no, "expected a JSON object");
    for (const char* field : {"id", "caption"}) {
      auto it = obj.find(field);
      if (it == obj.end()) {
        throw ParseError(source_name, line_no, std::string("missing field \"") + field + "\"");
      }
      if (!it->is_string()) {
        throw ParseError(source_name, line_no, std::string("field \"") + field + "\" must be a string");
      }
    }
    std::string id = obj["id"].get<std::string>();
    std::string caption = obj["caption"].get<std::string>();
    if (id.empty()) throw ParseError(source_name, line_no, "field \"id\" is empty");
    if (Trim(caption).empty()) throw ParseError(source_name, line_no, "field \"caption\" is empty");
    corpus.records.push_back(CaptionRecord{std::move(id), 0, std::move(caption)});
  }
  if (in.bad()) throw IoError("error reading " + source_name);
  return corpus;
}

Corpus LoadJsonl(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseJsonl(in, path.string());
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  std::string ext = AsciiLower(path.extension().string());
  if (ext == ".csv") return LoadClothoCsv(path);
  return LoadJsonl(path);
}

std::vector<TokenizedCaption> PrepareCaptions(const Corpus& corpus, const StopwordSet& sw) {
  std::vector<TokenizedCaption> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    TokenizedCaption c = Tokenize(corpus.records[i].text);
    c.source_id = corpus.records[i].source_id;
    c.ordinal = i;
    out.push_back(Classify(std::move(c), sw));
  }
  return out;
}

}  // namespace edc
