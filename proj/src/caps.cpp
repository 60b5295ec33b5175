#include "toruskit/caps.hpp"

#include <cstdlib>

#include "toruskit/errors.hpp"

namespace toruskit {

namespace {

int parse_positive(const std::string& key, const std::string& value) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "cap " + key + ": not an integer: " + value);
  }
  if (pos != value.size())
    fail(Errc::ParseError, "cap " + key + ": trailing characters: " + value);
  if (v <= 0) fail(Errc::ParseError, "cap " + key + " must be positive");
  return v;
}

}  // namespace

void Caps::apply_overrides(const std::string& spec) {
  size_t start = 0;
  while (start < spec.size()) {
    size_t end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(Errc::ParseError, "cap override missing '=': " + item);
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "cap_multiple")
      cap_multiple = parse_positive(key, value);
    else if (key == "cap_insertions")
      cap_insertions = parse_positive(key, value);
    else if (key == "cap_exponent")
      cap_exponent = parse_positive(key, value);
    else if (key == "m_max")
      m_max = parse_positive(key, value);
    else
      fail(Errc::ParseError, "unknown cap: " + key);
  }
}

void Caps::validate() const {
  if (cap_multiple <= 0 || cap_insertions <= 0 || cap_exponent <= 0 || m_max <= 0)
    fail(Errc::ParseError, "caps must be positive");
}

}  // namespace toruskit
