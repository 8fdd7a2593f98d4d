#include "pivotkit/gf2.hpp"

#include <algorithm>
#include <utility>

#include "pivotkit/error.hpp"

namespace pivotkit {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

}  // namespace

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    Word w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out(*this);
  for (Word& w : out.words_) w = ~w;
  if (!out.words_.empty()) out.words_.back() &= tail_mask(size_);
  return out;
}

BitMatrix BitMatrix::ones(std::size_t nrows, std::size_t ncols) {
  BitMatrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    auto row = m.row_words(r);
    std::fill(row.begin(), row.end(), ~Word{0});
    if (!row.empty()) row.back() &= tail_mask(ncols);
  }
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw Error(ErrorCode::ParseError, "matrix entry must be 0 or 1");
      if (ch == '1') m.set(r, c);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw Error(ErrorCode::InvalidArgument, "matrix entry must be 0 or 1");
      }
      if (rows[r][c] == 1) m.set(r, c);
    }
  }
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(ncols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(nrows_);
  for (std::size_t r = 0; r < nrows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

void BitMatrix::xor_row(std::size_t r, const BitVector& mask) {
  auto dst = row_words(r);
  auto src = mask.words();
  for (std::size_t i = 0; i < stride_; ++i) dst[i] ^= src[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row_words(a);
  auto rb = row_words(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void BitMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < nrows_; ++r) {
    const bool va = get(r, a);
    const bool vb = get(r, b);
    set(r, a, vb);
    set(r, b, va);
  }
}

std::size_t BitMatrix::count_ones() const noexcept {
  std::size_t total = 0;
  for (Word w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(ncols_, nrows_);
  for (std::size_t r = 0; r < nrows_; ++r) {
    auto words = row_words(r);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      Word w = words[wi];
      while (w != 0) {
        t.set(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)), r);
        w &= w - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) const {
  BitMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (get(rows[i], cols[j])) out.set(i, j);
    }
  }
  return out;
}

BitMatrix BitMatrix::complement() const {
  BitMatrix out = *this;
  for (std::size_t r = 0; r < nrows_; ++r) {
    auto row = out.row_words(r);
    for (Word& w : row) w = ~w;
    if (!row.empty()) row.back() &= tail_mask(ncols_);
  }
  return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
  if (nrows_ != other.nrows_ || ncols_ != other.ncols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out(nrows_, std::string(ncols_, '0'));
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (get(r, c)) out[r][c] = '1';
    }
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  if (m.empty()) return 0;
  if (m.ncols() <= kWordBits) {
    std::vector<Word> rows(m.nrows());
    for (std::size_t r = 0; r < m.nrows(); ++r) rows[r] = m.row_words(r)[0];
    return rank_of_words(rows);
  }
  BitMatrix work = m;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < work.ncols() && rk < work.nrows(); ++c) {
    std::size_t pivot = rk;
    while (pivot < work.nrows() && !work.get(pivot, c)) ++pivot;
    if (pivot == work.nrows()) continue;
    work.swap_rows(rk, pivot);
    auto prow = work.row_words(rk);
    for (std::size_t r = rk + 1; r < work.nrows(); ++r) {
      if (!work.get(r, c)) continue;
      auto row = work.row_words(r);
      for (std::size_t i = c / kWordBits; i < row.size(); ++i) row[i] ^= prow[i];
    }
    ++rk;
  }
  return rk;
}

std::size_t rank_of_words(std::span<const Word> rows) {
  // basis[b] holds a vector whose highest set bit is b.
  Word basis[kWordBits] = {};
  std::size_t rk = 0;
  for (Word v : rows) {
    while (v != 0) {
      const int top = std::bit_width(v) - 1;
      if (basis[top] == 0) {
        basis[top] = v;
        ++rk;
        break;
      }
      v ^= basis[top];
    }
  }
  return rk;
}

BitMatrix matrix_pivot(const BitMatrix& m, std::size_t x, std::size_t y) {
  if (x >= m.nrows() || y >= m.ncols()) {
    throw Error(ErrorCode::InvalidArgument, "pivot index out of range");
  }
  if (!m.get(x, y)) throw Error(ErrorCode::PivotOnZero, "entry at pivot position is 0");
  BitMatrix out = m;
  BitVector beta = m.row(x);
  beta.reset(y);
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    if (i != x && m.get(i, y)) out.xor_row(i, beta);
  }
  return out;
}

std::size_t xor_rank(const BitMatrix& a, const BitMatrix& b) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw Error(ErrorCode::DimensionMismatch, "xor_rank needs equal shapes");
  }
  return rank(a ^ b);
}

}  // namespace pivotkit
