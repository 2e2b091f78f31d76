#ifndef GKM_VALIDATION_HPP
#define GKM_VALIDATION_HPP

#include <string>
#include <vector>

namespace gkm {

struct Violation {
  std::string code;     // stable machine-readable tag, e.g. "degree-mismatch"
  std::string message;  // human-readable, names the offending vertex/edge ids
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }

  std::string to_string() const {
    std::string out;
    for (const auto& v : violations) {
      out += v.code;
      out += ": ";
      out += v.message;
      out += "\n";
    }
    return out;
  }
};

}  // namespace gkm

#endif  // GKM_VALIDATION_HPP
