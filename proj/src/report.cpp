#include "fspt/report.hpp"

#include <sstream>

namespace fspt {

std::string emit_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["options"] = r.options;
  j["result"] = r.result;
  j["status"] = r.exit_status;
  j["version"] = kToolVersion;
  return canonical_dump(j);
}

namespace {

void render(std::ostream& os, const std::string& key, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render(os, k, sub, depth + 1);
  } else if (v.is_array() && v.size() > 8) {
    os << pad << key << ": [" << v.size() << " entries]\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << "fspt " << r.command << " (v" << kToolVersion << ")\n";
  for (const auto& [k, v] : r.options.items()) render(os, k, v, 1);
  os << "result:\n";
  for (const auto& [k, v] : r.result.items()) render(os, k, v, 1);
  os << "status: " << r.exit_status << "\n";
  return os.str();
}

}  // namespace fspt
