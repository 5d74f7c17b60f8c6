#ifndef TMSPEC_MORSE_HPP
#define TMSPEC_MORSE_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmspec {

// A finite word over {0,1}.
class Block {
public:
  Block() = default;
  explicit Block(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  static Block parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t> &bits() const { return bits_; }

  std::string str() const;

  friend bool operator==(const Block &a, const Block &b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Block &a, const Block &b) { return !(a == b); }

private:
  std::vector<std::uint8_t> bits_;
};

// Pointwise 0<->1 swap; an involution.
Block complement(const Block &b);

// B x C = B^{C(0)} B^{C(1)} ... B^{C(|C|-1)} where B^0 = B and B^1 is the
// complement of B. |B x C| = |B| * |C|.
Block block_product(const Block &b, const Block &c);

// Description of an infinite sequence of blocks (b^0, b^1, ...), each with
// b(0) = 0 and |b| >= 2. Three forms:
//   - list with the last block repeated forever         ("001,01*")
//   - list cycled periodically                          ("001,010")
//   - a base block alternating with 01-runs of growing
//     length 1, 2, 3, ...                               ("base=001;tm_runs=auto")
// The textual grammar is documented in the README.
class MorseSpec {
public:
  enum class Kind { cycle, repeat_last, tm_splice };

  static MorseSpec parse(std::string_view text);
  static MorseSpec thue_morse(); // "01*"
  static MorseSpec from_blocks(std::vector<Block> blocks, Kind kind);
  static MorseSpec tm_splice(Block base);
  // b^n = 01 iff n+1 is in E, else 00, for n < depth; cycles afterwards.
  static MorseSpec kakutani(const std::function<bool(unsigned)> &in_E, unsigned depth);

  Kind kind() const { return kind_; }
  Block block_at(std::size_t i) const;

  // q_k = p_0 * ... * p_{k-1}, the length of the k-fold product prefix.
  // Throws std::range_error if the product does not fit 63 bits.
  std::uint64_t q(unsigned k) const;

  // True when the tail contains 01-runs of unbounded length.
  bool tm_type() const;

  // n-th symbol of the infinite product. Writing n in the mixed radix
  // (p_0, p_1, ...), n = sum_j d_j q_j, the fold gives
  //   x(n) = sum_j b^j(d_j)  (mod 2),
  // the first factor consuming the least significant digit.
  int bit(std::uint64_t n) const;

  std::string str() const;

private:
  MorseSpec() = default;
  Kind kind_ = Kind::repeat_last;
  std::vector<Block> blocks_; // for cycle / repeat_last
  Block base_;                // for tm_splice
};

// Prefix of length q_k, computed by left-folding block_product over
// b^0, ..., b^{k-1}. morse_prefix(spec, 0) is the one-symbol block "0".
Block morse_prefix(const MorseSpec &spec, unsigned k);

// Thue-Morse: parity of the number of 1-bits of n.
inline int thue_morse_bit(std::uint64_t n) { return std::popcount(n) & 1; }
inline int tm_sign(std::uint64_t n) { return 1 - 2 * thue_morse_bit(n); }

// s_E(n) = sum_{i in E} n_i (mod 2) over the binary digits of n, indexed from
// 1: digit i of n is bit i-1. E entries must be >= 1.
int s_E_bit(std::uint64_t n, std::span<const unsigned> E);

// Toeplitz factor of Thue-Morse: z(i) = x(i) + x(i+1) (mod 2).
inline int thue_toeplitz_bit(std::uint64_t n) {
  return thue_morse_bit(n) ^ thue_morse_bit(n + 1);
}

using BitSeq = std::function<int(std::uint64_t)>;

// The word (w(a), ..., w(a+len-1)). One-sided sequences reject negative
// absolute indices with std::range_error.
Block window(const BitSeq &seq, std::int64_t a, std::size_t len);

} // namespace tmspec

#endif
