#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace handover {

/// Raised for malformed or invalid configuration input. The message names
/// the offending key where there is one.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines. `#` starts a comment; blank lines are
/// skipped; keys and values are whitespace-trimmed. Duplicate keys and lines
/// without `=` are ConfigErrors.
std::map<std::string, std::string> parse_key_values(std::istream& in);
std::map<std::string, std::string> read_key_value_file(const std::string& path);

double parse_double(const std::string& key, const std::string& text);
long long parse_integer(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);

}  // namespace handover
