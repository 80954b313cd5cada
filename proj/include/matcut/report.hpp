#ifndef MATCUT_REPORT_HPP
#define MATCUT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace matcut {

// Diff-friendly structured report: ordered sections of ordered key-value
// pairs. Numeric values are rendered with shortest round-trip formatting so
// write-then-read is the identity.
class RunReport {
 public:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
  };

  Section& section(const std::string& name);  // appends if missing
  const std::vector<Section>& sections() const { return sections_; }

  void set(const std::string& section_name, const std::string& key, const std::string& value);
  void set_int(const std::string& section_name, const std::string& key, long long value);
  // Throws ContractViolation on non-finite values.
  void set_double(const std::string& section_name, const std::string& key, double value);

  const std::string* find(const std::string& section_name, const std::string& key) const;

  std::string serialize() const;
  static RunReport parse(const std::string& text);

 private:
  std::vector<Section> sections_;
};

std::string format_double(double value);  // shortest round-trip
double parse_double(const std::string& text);

}  // namespace matcut

#endif
