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

#ifndef LFG_CONFIG_FILE_HPP
#define LFG_CONFIG_FILE_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfg {

// `key = value` lines. '#' starts a comment, blank lines are ignored, keys
// outside the allowed set and repeated keys are errors (Error(kConfig)).
class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in, std::span<const std::string_view> allowed,
                          std::string_view source = "<config>");
  static ConfigFile load(const std::filesystem::path& path,
                         std::span<const std::string_view> allowed);

  bool has(std::string_view key) const;
  std::optional<std::string> raw(std::string_view key) const;

  std::string get_string(std::string_view key, std::string_view fallback) const;
  int get_int(std::string_view key, int fallback) const;
  double get_double(std::string_view key, double fallback) const;
  // true/false, yes/no, on/off, 1/0.
  bool get_bool(std::string_view key, bool fallback) const;
  // Comma separated; empty items are rejected.
  std::vector<std::string> get_list(std::string_view key) const;
  std::vector<int> get_int_list(std::string_view key, std::vector<int> fallback) const;
  std::vector<double> get_double_list(std::string_view key, std::vector<double> fallback) const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::string source_;
  std::map<std::string, Entry, std::less<>> values_;

  [[noreturn]] void fail(std::string_view key, const std::string& what) const;
};

}  // namespace lfg

#endif  // LFG_CONFIG_FILE_HPP
