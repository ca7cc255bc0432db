#include "bitarm/scan_counter.hpp"

namespace bitarm {

ScanCountingBuf::int_type ScanCountingBuf::underflow() {
  if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
  const std::streamsize n = source_->sgetn(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  if (n <= 0) return traits_type::eof();
  if (offset_ == 0) ++passes_;
  offset_ += static_cast<std::size_t>(n);
  bytes_read_ += static_cast<std::size_t>(n);
  setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
  return traits_type::to_int_type(*gptr());
}

ScanCountingBuf::pos_type ScanCountingBuf::seekoff(off_type off, std::ios_base::seekdir dir,
                                                   std::ios_base::openmode which) {
  if (dir == std::ios_base::cur) {
    // Position requests relative to the buffered read head.
    off -= static_cast<off_type>(egptr() - gptr());
  }
  const pos_type pos = source_->pubseekoff(off, dir, which);
  if (pos != pos_type(off_type(-1))) {
    setg(buffer_.data(), buffer_.data(), buffer_.data());
    offset_ = static_cast<std::size_t>(off_type(pos));
  }
  return pos;
}

ScanCountingBuf::pos_type ScanCountingBuf::seekpos(pos_type pos, std::ios_base::openmode which) {
  return seekoff(off_type(pos), std::ios_base::beg, which);
}

}  // namespace bitarm
