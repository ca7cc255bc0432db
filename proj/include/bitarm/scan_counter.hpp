#pragma once

#include <array>
#include <cstddef>
#include <streambuf>

namespace bitarm {

// Read-only streambuf filter that counts passes over an underlying source. A
// pass starts whenever bytes are pulled from offset 0, so rewinding and
// re-reading is counted as a new pass.
class ScanCountingBuf : public std::streambuf {
 public:
  explicit ScanCountingBuf(std::streambuf* source) : source_(source) {}

  std::size_t passes() const noexcept { return passes_; }
  std::size_t bytes_read() const noexcept { return bytes_read_; }

 protected:
  int_type underflow() override;
  pos_type seekoff(off_type off, std::ios_base::seekdir dir,
                   std::ios_base::openmode which) override;
  pos_type seekpos(pos_type pos, std::ios_base::openmode which) override;

 private:
  std::streambuf* source_;
  std::array<char, 4096> buffer_{};
  std::size_t offset_ = 0;  // bytes consumed from source since last rewind
  std::size_t passes_ = 0;
  std::size_t bytes_read_ = 0;
};

}  // namespace bitarm
