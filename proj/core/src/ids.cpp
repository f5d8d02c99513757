#include "blogstack/ids.hpp"

#include <cctype>
#include <cstddef>

namespace blogstack {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  // Remembers the first textual difference between numerically equal digit
  // runs ("B01" vs "B1") so the ordering stays strict.
  int pending = 0;

  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ia = i;
      std::size_t jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;

      std::string_view ra = a.substr(i, ia - i);
      std::string_view rb = b.substr(j, jb - j);
      std::string_view na = ra.substr(ra.find_first_not_of('0') == std::string_view::npos
                                          ? ra.size() - 1
                                          : ra.find_first_not_of('0'));
      std::string_view nb = rb.substr(rb.find_first_not_of('0') == std::string_view::npos
                                          ? rb.size() - 1
                                          : rb.find_first_not_of('0'));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (int c = na.compare(nb); c != 0) return c < 0;
      if (pending == 0 && ra != rb) pending = ra < rb ? -1 : 1;
      i = ia;
      j = jb;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (i < a.size()) return false;  // a longer -> b first
  if (j < b.size()) return true;
  return pending < 0;
}

}  // namespace blogstack
