#include "polyspace/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace polyspace {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t width) : Gf2Matrix(width) {
  rows_ = rows;
  bits_.assign(rows * words_, 0);
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= width_) throw std::out_of_range("Gf2Matrix index");
  return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= width_) throw std::out_of_range("Gf2Matrix index");
  Word& w = bits_[r * words_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t Gf2Matrix::add_row() {
  bits_.resize(bits_.size() + words_, 0);
  return rows_++;
}

std::size_t Gf2Matrix::add_unit_row(std::size_t c) {
  const auto r = add_row();
  set(r, c);
  return r;
}

std::span<const Gf2Matrix::Word> Gf2Matrix::row(std::size_t r) const {
  return {bits_.data() + r * words_, words_};
}

Gf2Matrix Gf2Matrix::without_column(std::size_t c) const {
  if (c >= width_) throw std::out_of_range("Gf2Matrix column");
  Gf2Matrix out(rows_, width_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < width_; ++j) {
      if (j != c && get(r, j)) out.set(r, j < c ? j : j - 1);
    }
  }
  return out;
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  const std::size_t words = m.words_per_row();
  std::vector<Gf2Matrix::Word> a;
  a.reserve(m.rows() * words);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    a.insert(a.end(), row.begin(), row.end());
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.width() && rank < m.rows(); ++c) {
    const std::size_t w = c / Gf2Matrix::kWordBits;
    const Gf2Matrix::Word bit = Gf2Matrix::Word{1} << (c % Gf2Matrix::kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(a[pivot * words + w] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < words; ++k) std::swap(a[pivot * words + k], a[rank * words + k]);
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r * words + w] & bit) {
        // Words before w are already zero in the pivot row.
        for (std::size_t k = w; k < words; ++k) a[r * words + k] ^= a[rank * words + k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace polyspace
