#include "affhecke/weight.hpp"

#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInRootLattice: return "NotInRootLattice";
    case ErrorCode::RootSystemMismatch: return "RootSystemMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::StabilizationInconclusive: return "StabilizationInconclusive";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InfiniteParabolic: return "InfiniteParabolic";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotFundamental: return "NotFundamental";
    case ErrorCode::StabilizerMismatch: return "StabilizerMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) fail(ErrorCode::DimensionMismatch, "rank out of range: " + std::to_string(rank));
}

Weight::Weight(std::initializer_list<Int> coords) : Weight(static_cast<int>(coords.size())) {
  std::size_t i = 0;
  for (Int v : coords) c_[i++] = v;
}

Weight Weight::from_span(std::span<const Int> coords) {
  Weight w(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w.c_[i] = coords[i];
  return w;
}

bool Weight::is_zero() const noexcept {
  for (int i = 0; i < rank_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

Int Weight::height() const noexcept {
  Int h = 0;
  for (int i = 0; i < rank_; ++i) h += c_[static_cast<std::size_t>(i)];
  return h;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) fail(ErrorCode::DimensionMismatch, "adding weights of rank " + std::to_string(rank_) + " and " + std::to_string(o.rank_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank_); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) fail(ErrorCode::DimensionMismatch, "subtracting weights of rank " + std::to_string(rank_) + " and " + std::to_string(o.rank_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank_); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(Int k) noexcept {
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank_); ++i) c_[i] *= k;
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << c_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

std::size_t hash_value(const Weight& w) noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank());
  for (Int v : w.coords()) h = hash_combine(h, static_cast<std::size_t>(v));
  return h;
}

bool RationalWeight::is_integral() const {
  for (const auto& q : coords)
    if (q.denominator() != 1) return false;
  return true;
}

Weight RationalWeight::to_integral() const {
  if (!is_integral()) fail(ErrorCode::NotInRootLattice, "weight " + str() + " has fractional coordinates");
  Weight w(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w[static_cast<int>(i)] = coords[i].numerator();
  return w;
}

std::string RationalWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i].numerator();
    if (coords[i].denominator() != 1) os << '/' << coords[i].denominator();
  }
  os << ')';
  return os.str();
}

}  // namespace affhecke
