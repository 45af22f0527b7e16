#include "slidewin/seq_file.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace slidewin {
namespace {

constexpr char kMagic[6] = {'S', 'L', 'W', 'S', 'E', 'Q'};
constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kHeaderSize = 6 + 2 + 8 + 8 + 1;

void put_le(std::string& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_le(const unsigned char* p, unsigned bytes) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

unsigned seq_symbol_width(Symbol alphabet_size) {
  if (alphabet_size <= 0xFF) return 1;
  if (alphabet_size <= 0xFFFF) return 2;
  if (alphabet_size <= 0xFFFFFFFFULL) return 4;
  return 8;
}

void save_seq(const SymbolSeq& seq, const std::string& path) {
  const unsigned width = seq_symbol_width(seq.alphabet_size());
  std::string buf;
  buf.reserve(kHeaderSize + seq.size() * width);
  buf.append(kMagic, sizeof(kMagic));
  put_le(buf, kVersion, 2);
  put_le(buf, seq.alphabet_size(), 8);
  put_le(buf, seq.size(), 8);
  buf.push_back(static_cast<char>(width));
  for (std::size_t i = 0; i < seq.size(); ++i) put_le(buf, seq[i], width);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_seq: cannot open " + path + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("save_seq: write to " + path + " failed");
}

SymbolSeq load_seq(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_seq: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

  if (bytes.empty()) throw SeqParseError("missing header", 0);
  if (bytes.size() < kHeaderSize) throw SeqParseError("truncated header", bytes.size());
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
    throw SeqParseError("bad magic", 0);
  const std::uint64_t version = get_le(bytes.data() + 6, 2);
  if (version != kVersion)
    throw SeqParseError("unsupported version " + std::to_string(version), 6);
  const std::uint64_t alphabet = get_le(bytes.data() + 8, 8);
  if (alphabet < 1) throw SeqParseError("alphabet_size must be positive", 8);
  const std::uint64_t length = get_le(bytes.data() + 16, 8);
  if (length < 1) throw SeqParseError("declared length must be positive", 16);
  const unsigned width = bytes[24];
  if (width != seq_symbol_width(alphabet))
    throw SeqParseError("symbol width " + std::to_string(width) +
                            " does not match alphabet_size " + std::to_string(alphabet),
                        24);
  const std::size_t expected = kHeaderSize + static_cast<std::size_t>(length) * width;
  if (bytes.size() != expected)
    throw SeqParseError("payload size mismatch: expected " + std::to_string(expected) +
                            " bytes, have " + std::to_string(bytes.size()),
                        std::min(bytes.size(), expected));

  std::vector<Symbol> data(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    const std::size_t off = kHeaderSize + static_cast<std::size_t>(i) * width;
    const std::uint64_t v = get_le(bytes.data() + off, width);
    if (v < 1 || v > alphabet)
      throw SeqParseError("symbol " + std::to_string(v) + " at record " + std::to_string(i) +
                              " outside declared alphabet [1, " + std::to_string(alphabet) + "]",
                          off);
    data[i] = v;
  }
  return SymbolSeq(std::move(data), alphabet);
}

}  // namespace slidewin
