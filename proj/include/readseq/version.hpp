#ifndef READSEQ_VERSION_HPP
#define READSEQ_VERSION_HPP

namespace readseq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace readseq

#endif
