#pragma once

#include <string>
#include <string_view>

namespace blogstack {

/// Porter suffix-stripping stemmer (the 1980 algorithm as distributed in the
/// author's reference implementation, i.e. with the step-2 bli/logi rules).
/// Expects a lowercase word. Words shorter than three letters, or containing
/// anything outside a-z (digits, non-ASCII), pass through unchanged.
std::string porter_stem(std::string_view word);

}  // namespace blogstack
