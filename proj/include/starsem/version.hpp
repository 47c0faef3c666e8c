#ifndef STARSEM_VERSION_HPP
#define STARSEM_VERSION_HPP

namespace starsem {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace starsem

#endif  // STARSEM_VERSION_HPP
