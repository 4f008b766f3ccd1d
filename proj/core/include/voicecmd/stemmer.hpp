#pragma once

#include <string>
#include <string_view>

namespace voicecmd {

/// Stems a lowercase English word (Porter suffix stripping, iterated to a
/// fixed point so that stem(stem(w)) == stem(w)). Words shorter than three
/// letters or containing non-alphabetic characters are returned unchanged.
std::string stem(std::string_view word);

}  // namespace voicecmd
