#include "lalgebra/limits.hpp"

#include <charconv>

#include "lalgebra/error.hpp"

namespace lalgebra {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::int64_t parse_value(const std::string& key, const std::string& text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v <= 0) {
    throw UsageError("limit override '" + key + "' needs a positive integer, got '" + text + "'");
  }
  return v;
}

}  // namespace

void apply_limit_overrides(Limits& lim, const std::string& spec) {
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string entry = spec.substr(pos, end - pos);
    pos = end + 1;
    if (entry.empty()) continue;
    size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw UsageError("limit override '" + entry + "' is not key=value");
    }
    std::string key = entry.substr(0, eq);
    std::int64_t v = parse_value(key, entry.substr(eq + 1));
    if (key == "max_arity") {
      lim.max_arity = static_cast<int>(v);
    } else if (key == "congruence_enum") {
      lim.congruence_enum = static_cast<int>(v);
    } else if (key == "pcgr_tuples") {
      lim.pcgr_tuples = v;
    } else if (key == "uniqueness_search") {
      lim.uniqueness_search = v;
    } else if (key == "morphism_search") {
      lim.morphism_search = v;
    } else {
      throw UsageError("unknown limit key '" + key +
                       "' (known: max_arity, congruence_enum, pcgr_tuples, "
                       "uniqueness_search, morphism_search)");
    }
  }
}

}  // namespace lalgebra
