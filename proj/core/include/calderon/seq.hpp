#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace calderon {

// Finite-support sequence on a window of Z (or Z+ when offset >= 0); zero
// outside the window.  Construction trims zero entries at both ends so two
// sequences that agree as functions on Z compare equal.
class Seq {
 public:
  Seq() = default;  // the zero sequence
  Seq(std::int64_t offset, std::vector<double> entries);

  std::int64_t offset() const { return offset_; }
  const std::vector<double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::int64_t first_index() const { return offset_; }
  std::int64_t last_index() const {
    return offset_ + static_cast<std::int64_t>(entries_.size()) - 1;
  }

  double at(std::int64_t n) const;

  friend bool operator==(const Seq& a, const Seq& b) {
    return a.offset_ == b.offset_ && a.entries_ == b.entries_;
  }

 private:
  std::int64_t offset_ = 0;
  std::vector<double> entries_;
};

// Complex-valued counterpart, used for discrete Hilbert transform output and
// Fourier multiplier symbols.
class CplxSeq {
 public:
  using cplx = std::complex<double>;

  CplxSeq() = default;
  CplxSeq(std::int64_t offset, std::vector<cplx> entries);

  std::int64_t offset() const { return offset_; }
  const std::vector<cplx>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::int64_t first_index() const { return offset_; }
  std::int64_t last_index() const {
    return offset_ + static_cast<std::int64_t>(entries_.size()) - 1;
  }

  cplx at(std::int64_t n) const;

 private:
  std::int64_t offset_ = 0;
  std::vector<cplx> entries_;
};

// Entrywise modulus.
Seq modulus(const CplxSeq& a);

}  // namespace calderon
