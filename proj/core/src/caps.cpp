#include "chordal/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

Caps parse_caps(std::string_view text, Caps base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::kInvalidParameter, "cap needs key=value: " + std::string(item));
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || ptr != val.data() + val.size() || value <= 0) {
      throw Error(ErrorKind::kInvalidParameter, "bad cap value: " + std::string(item));
    }
    if (key == "treewidth") {
      base.treewidth = value;
    } else if (key == "hadwiger") {
      base.hadwiger = value;
    } else if (key == "hajos") {
      base.hajos = value;
    } else if (key == "enumeration") {
      base.enumeration = value;
    } else {
      throw Error(ErrorKind::kInvalidParameter, "unknown cap: " + std::string(key));
    }
  }
  return base;
}

Caps caps_from_env(Caps base) {
  const char* env = std::getenv("CHORDAL_CAPS");
  return env ? parse_caps(env, base) : base;
}

}  // namespace chordal
