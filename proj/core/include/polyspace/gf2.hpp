#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyspace {

/// Dense bit-packed matrix over the field with two elements. Each row spans
/// ceil(width / 64) machine words; bits beyond `width` are always zero.
class Gf2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits) {}
  Gf2Matrix(std::size_t rows, std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t width() const { return width_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  /// Appends a zero row and returns its index.
  std::size_t add_row();
  /// Appends the unit row with a single 1 in column c.
  std::size_t add_unit_row(std::size_t c);

  std::span<const Word> row(std::size_t r) const;

  /// The matrix with column c removed.
  Gf2Matrix without_column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Rank over GF(2) by Gaussian elimination on whole words.
std::size_t gf2_rank(const Gf2Matrix& m);

}  // namespace polyspace
