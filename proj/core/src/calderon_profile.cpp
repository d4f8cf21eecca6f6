#include "calderon/calderon_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace calderon {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CalderonProfile::CalderonProfile() : pieces_{{kInf, 0.0, 0.0, 0.0}} {}

CalderonProfile::CalderonProfile(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty() || pieces_.back().end != kInf) {
    throw std::invalid_argument(
        "CalderonProfile: pieces must cover (0, inf); last end must be +inf");
  }
  double prev = 0.0;
  for (const Piece& p : pieces_) {
    if (!(p.end > prev)) {
      throw std::invalid_argument("CalderonProfile: ends must increase");
    }
    prev = p.end;
  }
}

double CalderonProfile::operator()(double t) const {
  if (!(t > 0.0)) {
    throw std::domain_error("CalderonProfile: evaluation requires t > 0");
  }
  std::size_t lo = 0, hi = pieces_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (pieces_[mid].end > t) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Piece& p = pieces_[lo];
  return p.a + p.b / t + p.c * std::log(t);
}

double CalderonProfile::integral(double lo, double hi) const {
  if (!(lo >= 0.0) || !(hi > lo) || hi == kInf) {
    throw std::domain_error("CalderonProfile::integral: need 0 <= lo < hi < inf");
  }
  // Antiderivative of a + b/t + c log t.
  const auto anti = [](const Piece& p, double t) {
    return p.a * t + p.b * std::log(t) + p.c * (t * std::log(t) - t);
  };
  double acc = 0.0;
  double prev = 0.0;
  for (const Piece& p : pieces_) {
    const double seg_lo = std::max(prev, lo);
    const double seg_hi = std::min(p.end, hi);
    if (seg_hi > seg_lo) {
      if (seg_lo == 0.0) {
        if (p.b != 0.0) {
          throw std::domain_error(
              "CalderonProfile::integral: 1/t piece is not integrable at 0");
        }
        // a*t + c*(t log t - t) vanishes at 0+.
        acc += anti(p, seg_hi);
      } else {
        acc += anti(p, seg_hi) - anti(p, seg_lo);
      }
    }
    prev = p.end;
    if (prev >= hi) break;
  }
  return acc;
}

CalderonProfile CalderonProfile::operator+(const CalderonProfile& other) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size() + other.pieces_.size());
  std::size_t i = 0, j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const Piece& p = pieces_[i];
    const Piece& q = other.pieces_[j];
    const double end = std::min(p.end, q.end);
    out.push_back({end, p.a + q.a, p.b + q.b, p.c + q.c});
    if (p.end <= end) ++i;
    if (q.end <= end) ++j;
  }
  return CalderonProfile(std::move(out));
}

}  // namespace calderon
