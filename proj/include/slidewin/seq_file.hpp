#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "slidewin/symbol_seq.hpp"

namespace slidewin {

/// Load failure; `byte_offset` locates the offending byte in the file.
class SeqParseError : public std::runtime_error {
 public:
  SeqParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Binary sequence file: magic "SLWSEQ", u16 version, u64 alphabet_size,
/// u64 length, u8 symbol width (the smallest of 1/2/4/8 bytes that holds
/// alphabet_size), then `length` little-endian fixed-width symbols.
/// Round trips are bit-exact.
void save_seq(const SymbolSeq& seq, const std::string& path);
SymbolSeq load_seq(const std::string& path);

/// Bytes per stored symbol for a given alphabet.
unsigned seq_symbol_width(Symbol alphabet_size);

}  // namespace slidewin
