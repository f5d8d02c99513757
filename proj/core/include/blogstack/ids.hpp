#pragma once

#include <string>
#include <string_view>

namespace blogstack {

/// Orders summary ids the way a human reads them: digit runs compare by
/// numeric value, so B2 < B10. Falls back to plain byte order to stay a
/// strict weak ordering on arbitrary strings.
bool id_less(std::string_view a, std::string_view b);

struct IdLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return id_less(a, b);
  }
  // transparent comparator so std::map/set accept string_view lookups
  using is_transparent = void;
};

}  // namespace blogstack
