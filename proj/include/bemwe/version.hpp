#ifndef BEMWE_VERSION_HPP
#define BEMWE_VERSION_HPP

namespace bemwe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bemwe

#endif
