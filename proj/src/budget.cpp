#include "matcut/budget.hpp"

#include "matcut/errors.hpp"

namespace matcut {

Budget Budget::from_name(const std::string& name) {
  if (name == "fast") return fast();
  if (name == "default") return standard();
  if (name == "thorough") return thorough();
  throw ContractViolation("unknown budget preset '" + name + "' (fast|default|thorough)");
}

}  // namespace matcut
