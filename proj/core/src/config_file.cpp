/*
Copyright 2026 The lfg Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "lfg/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>

#include "lfg/error.hpp"

namespace lfg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size() && !text.empty();
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in, std::span<const std::string_view> allowed,
                             std::string_view source) {
  ConfigFile cfg;
  cfg.source_ = source;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const std::string where = cfg.source_ + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, where + "expected key = value");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key.empty()) throw Error(ErrorCode::kConfig, where + "empty key");
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kConfig, where + "unknown key '" + std::string(key) + "'");
    }
    if (cfg.values_.count(key)) {
      throw Error(ErrorCode::kConfig, where + "duplicate key '" + std::string(key) + "'");
    }
    cfg.values_.emplace(std::string(key), Entry{std::string(value), lineno});
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path,
                            std::span<const std::string_view> allowed) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path.string());
  return parse(in, allowed, path.string());
}

bool ConfigFile::has(std::string_view key) const { return values_.find(key) != values_.end(); }

std::optional<std::string> ConfigFile::raw(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second.value;
}

void ConfigFile::fail(std::string_view key, const std::string& what) const {
  const auto it = values_.find(key);
  const int line = it == values_.end() ? 0 : it->second.line;
  throw Error(ErrorCode::kConfig,
              source_ + ":" + std::to_string(line) + ": " + std::string(key) + ": " + what);
}

std::string ConfigFile::get_string(std::string_view key, std::string_view fallback) const {
  const auto v = raw(key);
  return v ? *v : std::string(fallback);
}

int ConfigFile::get_int(std::string_view key, int fallback) const {
  const auto v = raw(key);
  if (!v) return fallback;
  int out = 0;
  if (!parse_number(*v, out)) fail(key, "expected an integer, got '" + *v + "'");
  return out;
}

double ConfigFile::get_double(std::string_view key, double fallback) const {
  const auto v = raw(key);
  if (!v) return fallback;
  double out = 0.0;
  if (!parse_number(*v, out)) fail(key, "expected a number, got '" + *v + "'");
  return out;
}

bool ConfigFile::get_bool(std::string_view key, bool fallback) const {
  const auto v = raw(key);
  if (!v) return fallback;
  std::string s = *v;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  fail(key, "expected a boolean, got '" + *v + "'");
}

std::vector<std::string> ConfigFile::get_list(std::string_view key) const {
  std::vector<std::string> out;
  const auto v = raw(key);
  if (!v) return out;
  std::string_view rest(*v);
  for (;;) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    if (item.empty()) fail(key, "empty list item");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<int> ConfigFile::get_int_list(std::string_view key, std::vector<int> fallback) const {
  if (!has(key)) return fallback;
  std::vector<int> out;
  for (const auto& item : get_list(key)) {
    int v = 0;
    if (!parse_number(item, v)) fail(key, "expected integers, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> ConfigFile::get_double_list(std::string_view key,
                                                std::vector<double> fallback) const {
  if (!has(key)) return fallback;
  std::vector<double> out;
  for (const auto& item : get_list(key)) {
    double v = 0.0;
    if (!parse_number(item, v)) fail(key, "expected numbers, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace lfg
