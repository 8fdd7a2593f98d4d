#pragma once

// Dense linear algebra over the two-element field. Rows are bit-packed into
// 64-bit words; all operations have value semantics.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pivotkit {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-size dynamic bitset.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Indices of the set bits in ascending order.
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// Complement within [0, size).
  BitVector operator~() const;

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector&) const = default;
  auto operator<=>(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Dense nrows x ncols matrix over GF(2). Addition is XOR.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), stride_(words_for(ncols)), data_(nrows * stride_, 0) {}

  static BitMatrix zeros(std::size_t nrows, std::size_t ncols) { return {nrows, ncols}; }
  static BitMatrix ones(std::size_t nrows, std::size_t ncols);
  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from rows of '0'/'1' characters; all rows must share a length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t nrows() const noexcept { return nrows_; }
  std::size_t ncols() const noexcept { return ncols_; }
  bool empty() const noexcept { return nrows_ == 0 || ncols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row_words(std::size_t r) const noexcept {
    return {data_.data() + r * stride_, stride_};
  }
  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  /// rows[r] ^= mask, where mask has ncols bits.
  void xor_row(std::size_t r, const BitVector& mask);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::size_t count_ones() const noexcept;

  BitMatrix transpose() const;
  BitMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  BitMatrix complement() const;
  BitMatrix& operator^=(const BitMatrix& other);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }

  /// One line per row of '0'/'1' characters.
  std::vector<std::string> to_strings() const;

  bool operator==(const BitMatrix&) const = default;
  auto operator<=>(const BitMatrix&) const = default;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Dimension of the row space of m.
std::size_t rank(const BitMatrix& m);

/// Rank of a set of row vectors packed into single words (at most 64 columns).
std::size_t rank_of_words(std::span<const Word> rows);

/// Gaussian pivot at (x, y): every other row with a 1 in column y gets row x
/// added to it, except that column y itself is left untouched. This is the
/// D -> D' - alpha*beta update of a basis exchange; the caller swaps labels.
/// Throws ErrorCode::PivotOnZero when m(x, y) == 0.
BitMatrix matrix_pivot(const BitMatrix& m, std::size_t x, std::size_t y);

/// rank(a ^ b). Throws ErrorCode::DimensionMismatch on shape mismatch.
std::size_t xor_rank(const BitMatrix& a, const BitMatrix& b);

}  // namespace pivotkit
