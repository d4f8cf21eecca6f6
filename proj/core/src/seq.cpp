#include "calderon/seq.hpp"

#include <cmath>
#include <stdexcept>

namespace calderon {

namespace {

template <typename T>
void trim(std::int64_t& offset, std::vector<T>& entries) {
  std::size_t lead = 0;
  while (lead < entries.size() && entries[lead] == T{}) ++lead;
  std::size_t tail = entries.size();
  while (tail > lead && entries[tail - 1] == T{}) --tail;
  if (lead == tail) {
    entries.clear();
    offset = 0;
    return;
  }
  entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(tail),
                entries.end());
  entries.erase(entries.begin(),
                entries.begin() + static_cast<std::ptrdiff_t>(lead));
  offset += static_cast<std::int64_t>(lead);
}

}  // namespace

Seq::Seq(std::int64_t offset, std::vector<double> entries)
    : offset_(offset), entries_(std::move(entries)) {
  for (double e : entries_) {
    if (!std::isfinite(e)) throw std::invalid_argument("Seq: entries must be finite");
  }
  trim(offset_, entries_);
}

double Seq::at(std::int64_t n) const {
  if (n < offset_ || n > last_index()) return 0.0;
  return entries_[static_cast<std::size_t>(n - offset_)];
}

CplxSeq::CplxSeq(std::int64_t offset, std::vector<cplx> entries)
    : offset_(offset), entries_(std::move(entries)) {
  for (const cplx& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("CplxSeq: entries must be finite");
    }
  }
  trim(offset_, entries_);
}

CplxSeq::cplx CplxSeq::at(std::int64_t n) const {
  if (n < offset_ || n > last_index()) return cplx{};
  return entries_[static_cast<std::size_t>(n - offset_)];
}

Seq modulus(const CplxSeq& a) {
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::abs(a.entries()[i]);
  return Seq(a.offset(), std::move(m));
}

}  // namespace calderon
