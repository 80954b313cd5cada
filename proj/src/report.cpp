#include "matcut/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "matcut/errors.hpp"

namespace matcut {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ContractViolation("parse_double: malformed number '" + text + "'");
  return value;
}

RunReport::Section& RunReport::section(const std::string& name) {
  for (auto& s : sections_)
    if (s.name == name) return s;
  sections_.push_back(Section{name, {}});
  return sections_.back();
}

void RunReport::set(const std::string& section_name, const std::string& key,
                    const std::string& value) {
  Section& s = section(section_name);
  for (auto& [k, v] : s.entries)
    if (k == key) {
      v = value;
      return;
    }
  s.entries.emplace_back(key, value);
}

void RunReport::set_int(const std::string& section_name, const std::string& key, long long value) {
  set(section_name, key, std::to_string(value));
}

void RunReport::set_double(const std::string& section_name, const std::string& key, double value) {
  if (!std::isfinite(value))
    throw ContractViolation("report: non-finite value for " + section_name + "." + key);
  set(section_name, key, format_double(value));
}

const std::string* RunReport::find(const std::string& section_name, const std::string& key) const {
  for (const auto& s : sections_)
    if (s.name == section_name)
      for (const auto& [k, v] : s.entries)
        if (k == key) return &v;
  return nullptr;
}

std::string RunReport::serialize() const {
  std::string out = "matcut-report 1\n";
  for (const auto& s : sections_) {
    out += "[" + s.name + "]\n";
    for (const auto& [k, v] : s.entries) out += k + " = " + v + "\n";
  }
  return out;
}

RunReport RunReport::parse(const std::string& text) {
  RunReport report;
  Section* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != "matcut-report 1") throw ParseError("report: bad header", line_no, 1);
      continue;
    }
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("report: unterminated section", line_no, 1);
      current = &report.section(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t sep = line.find(" = ");
    if (sep == std::string::npos || current == nullptr)
      throw ParseError("report: expected 'key = value'", line_no, 1);
    current->entries.emplace_back(line.substr(0, sep), line.substr(sep + 3));
  }
  return report;
}

}  // namespace matcut
