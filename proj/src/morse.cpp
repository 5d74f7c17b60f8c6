#include "tmspec/morse.hpp"

#include <limits>
#include <stdexcept>

namespace tmspec {

Block Block::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("Block: empty word");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("Block: symbols must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Block(std::move(bits));
}

std::string Block::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_)
    s.push_back(static_cast<char>('0' + b));
  return s;
}

Block complement(const Block &b) {
  std::vector<std::uint8_t> bits(b.bits());
  for (auto &x : bits)
    x ^= 1u;
  return Block(std::move(bits));
}

Block block_product(const Block &b, const Block &c) {
  if (b.empty() || c.empty())
    throw std::domain_error("block_product: blocks must be nonempty");
  std::vector<std::uint8_t> out;
  out.reserve(b.size() * c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::uint8_t flip = static_cast<std::uint8_t>(c.bit(j));
    for (std::size_t i = 0; i < b.size(); ++i)
      out.push_back(static_cast<std::uint8_t>(b.bit(i) ^ flip));
  }
  return Block(std::move(out));
}

namespace {

void validate_spec_block(const Block &b) {
  if (b.size() < 2 || b.bit(0) != 0)
    throw std::invalid_argument("MorseSpec: each block needs length >= 2 and b(0) = 0");
}

const Block &block_01() {
  static const Block b = Block::parse("01");
  return b;
}

const Block &block_00() {
  static const Block b = Block::parse("00");
  return b;
}

} // namespace

MorseSpec MorseSpec::from_blocks(std::vector<Block> blocks, Kind kind) {
  if (blocks.empty())
    throw std::invalid_argument("MorseSpec: needs at least one block");
  if (kind == Kind::tm_splice)
    throw std::invalid_argument("MorseSpec: use tm_splice() for the splice form");
  for (const auto &b : blocks)
    validate_spec_block(b);
  MorseSpec s;
  s.kind_ = kind;
  s.blocks_ = std::move(blocks);
  return s;
}

MorseSpec MorseSpec::tm_splice(Block base) {
  validate_spec_block(base);
  MorseSpec s;
  s.kind_ = Kind::tm_splice;
  s.base_ = std::move(base);
  return s;
}

MorseSpec MorseSpec::thue_morse() {
  return from_blocks({block_01()}, Kind::repeat_last);
}

MorseSpec MorseSpec::kakutani(const std::function<bool(unsigned)> &in_E, unsigned depth) {
  if (depth == 0)
    throw std::invalid_argument("kakutani: depth must be >= 1");
  std::vector<Block> blocks;
  blocks.reserve(depth);
  for (unsigned n = 0; n < depth; ++n)
    blocks.push_back(in_E(n + 1) ? block_01() : block_00());
  return from_blocks(std::move(blocks), Kind::cycle);
}

MorseSpec MorseSpec::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("MorseSpec: empty spec");
  if (text == "tm")
    return thue_morse();
  if (text.find("base=") == 0) {
    // base=<block>;tm_runs=auto
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.substr(semi + 1) != "tm_runs=auto")
      throw std::invalid_argument("MorseSpec: splice form is base=<block>;tm_runs=auto");
    return tm_splice(Block::parse(text.substr(5, semi - 5)));
  }
  std::vector<Block> blocks;
  Kind kind = Kind::cycle;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    if (item.empty() && comma == text.size() && pos == text.size())
      break; // tolerate one trailing comma
    if (!item.empty() && item.back() == '*') {
      if (comma != text.size() && text.find_first_not_of(',', comma) != std::string_view::npos)
        throw std::invalid_argument("MorseSpec: '*' may only end the last block");
      kind = Kind::repeat_last;
      item.remove_suffix(1);
    }
    blocks.push_back(Block::parse(item));
    pos = comma + 1;
    if (comma == text.size())
      break;
  }
  return from_blocks(std::move(blocks), kind);
}

Block MorseSpec::block_at(std::size_t i) const {
  switch (kind_) {
  case Kind::cycle:
    return blocks_[i % blocks_.size()];
  case Kind::repeat_last:
    return i < blocks_.size() ? blocks_[i] : blocks_.back();
  case Kind::tm_splice: {
    // Group g >= 1 is one base block followed by g copies of 01 and occupies
    // indices [T_{g-1}, T_g) with T_g = g + g(g+1)/2.
    std::uint64_t t = 0;
    for (std::uint64_t g = 1;; ++g) {
      if (i == t)
        return base_;
      if (i < t + 1 + g)
        return block_01();
      t += 1 + g;
    }
  }
  }
  throw std::logic_error("MorseSpec: bad kind");
}

std::uint64_t MorseSpec::q(unsigned k) const {
  std::uint64_t prod = 1;
  for (unsigned j = 0; j < k; ++j) {
    const std::uint64_t p = block_at(j).size();
    if (prod > (std::uint64_t(1) << 62) / p)
      throw std::range_error("MorseSpec: q(k) exceeds the representable horizon");
    prod *= p;
  }
  return prod;
}

bool MorseSpec::tm_type() const {
  switch (kind_) {
  case Kind::tm_splice:
    return true;
  case Kind::repeat_last:
    return blocks_.back() == block_01();
  case Kind::cycle:
    for (const auto &b : blocks_)
      if (!(b == block_01()))
        return false;
    return true;
  }
  return false;
}

int MorseSpec::bit(std::uint64_t n) const {
  int acc = 0;
  std::uint64_t rest = n;
  for (std::size_t j = 0; rest > 0; ++j) {
    const Block b = block_at(j);
    const std::uint64_t p = b.size();
    acc ^= b.bit(static_cast<std::size_t>(rest % p));
    rest /= p;
  }
  return acc;
}

std::string MorseSpec::str() const {
  switch (kind_) {
  case Kind::tm_splice:
    return "base=" + base_.str() + ";tm_runs=auto";
  case Kind::cycle:
  case Kind::repeat_last: {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i)
        s.push_back(',');
      s += blocks_[i].str();
    }
    if (kind_ == Kind::repeat_last)
      s.push_back('*');
    return s;
  }
  }
  return {};
}

Block morse_prefix(const MorseSpec &spec, unsigned k) {
  Block prefix = Block::parse("0");
  for (unsigned j = 0; j < k; ++j)
    prefix = block_product(prefix, spec.block_at(j));
  return prefix;
}

int s_E_bit(std::uint64_t n, std::span<const unsigned> E) {
  int acc = 0;
  for (unsigned i : E) {
    if (i == 0)
      throw std::domain_error("s_E_bit: digit indices start at 1");
    if (i <= 64)
      acc ^= static_cast<int>((n >> (i - 1)) & 1u);
  }
  return acc;
}

Block window(const BitSeq &seq, std::int64_t a, std::size_t len) {
  if (a < 0)
    throw std::range_error("window: negative index on a one-sided sequence");
  std::vector<std::uint8_t> bits;
  bits.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    bits.push_back(static_cast<std::uint8_t>(seq(static_cast<std::uint64_t>(a) + i) & 1));
  return Block(std::move(bits));
}

} // namespace tmspec
