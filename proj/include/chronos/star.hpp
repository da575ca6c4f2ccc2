#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace chronos {

// Optimality criterion for temporal paths.
enum class Star { foremost, fastest };

inline const char* star_name(Star s) { return s == Star::foremost ? "foremost" : "fastest"; }

inline std::optional<Star> parse_star(std::string_view s) {
  if (s == "foremost") return Star::foremost;
  if (s == "fastest") return Star::fastest;
  return std::nullopt;
}

}  // namespace chronos
