#include "leash/dyadic.hpp"

#include <algorithm>

#include "leash/error.hpp"

namespace leash {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResolutionTooLarge: return "resolution-too-large";
    case ErrorCode::SpaceMismatch: return "space-mismatch";
    case ErrorCode::DepthOutOfRange: return "depth-out-of-range";
    case ErrorCode::DepthTooDeep: return "depth-too-deep";
    case ErrorCode::EpsTooSmall: return "eps-too-small";
    case ErrorCode::ResolutionOverflow: return "resolution-overflow";
    case ErrorCode::InvalidParams: return "invalid-params";
    case ErrorCode::ModelMismatch: return "model-mismatch";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::ExactUnsupported: return "exact-unsupported";
    case ErrorCode::NoEnvelopeAvailable: return "no-envelope-available";
    case ErrorCode::HNotANet: return "h-not-a-net";
    case ErrorCode::RelatorViolated: return "relator-violated";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

DyadicRational DyadicRational::from_parts(BigInt numerator, unsigned exponent) {
  if (numerator < 0) fail(ErrorCode::InvalidParams, "negative numerator");
  DyadicRational r;
  if (numerator == 0) return r;
  while (exponent > 0 && (numerator & 1) == 0) {
    numerator >>= 1;
    --exponent;
  }
  r.num_ = std::move(numerator);
  r.exp_ = exponent;
  return r;
}

DyadicRational DyadicRational::integer(std::uint64_t value) {
  return from_parts(BigInt(value), 0);
}

DyadicRational DyadicRational::pow2(int k) {
  if (k >= 0) return from_parts(BigInt(1) << k, 0);
  return from_parts(BigInt(1), static_cast<unsigned>(-k));
}

DyadicRational DyadicRational::scaled_pow2(int k) const {
  if (is_zero()) return {};
  if (k >= 0) return from_parts(num_ << k, exp_);
  return from_parts(num_, exp_ + static_cast<unsigned>(-k));
}

std::uint64_t DyadicRational::floor_u64() const {
  BigInt q = num_ >> exp_;
  if (q > BigInt(~std::uint64_t{0})) fail(ErrorCode::Internal, "floor does not fit in 64 bits");
  return q.convert_to<std::uint64_t>();
}

std::string DyadicRational::to_fraction_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

std::string DyadicRational::to_decimal_string() const {
  if (exp_ == 0) return num_.str();
  BigInt scaled = num_;
  for (unsigned i = 0; i < exp_; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (digits.size() <= exp_) digits.insert(0, exp_ + 1 - digits.size(), '0');
  digits.insert(digits.size() - exp_, ".");
  return digits;
}

namespace {

bool parse_uint(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  out = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

std::optional<DyadicRational> DyadicRational::try_parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num;
  if (slash == std::string_view::npos) {
    if (!parse_uint(text, num)) return std::nullopt;
    return from_parts(num, 0);
  }
  if (!parse_uint(text.substr(0, slash), num)) return std::nullopt;
  std::string_view den = text.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) {
    BigInt e;
    if (!parse_uint(den.substr(2), e)) return std::nullopt;
    if (e > 1 << 20) return std::nullopt;
    return from_parts(num, e.convert_to<unsigned>());
  }
  BigInt d;
  if (!parse_uint(den, d) || d == 0) return std::nullopt;
  unsigned e = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++e;
  }
  if (d != 1) return std::nullopt;  // denominator must be a power of two
  return from_parts(num, e);
}

DyadicRational DyadicRational::parse(std::string_view text) {
  auto parsed = try_parse(text);
  if (!parsed) {
    fail(ErrorCode::ParseError,
         "bad rational '" + std::string(text) + "' (expected p, p/2^q, or p/q with q a power of two)");
  }
  return *parsed;
}

int DyadicRational::compare(const DyadicRational& a, const DyadicRational& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt lhs = a.num_ << (e - a.exp_);
  BigInt rhs = b.num_ << (e - b.exp_);
  return lhs.compare(rhs);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return DyadicRational::from_parts((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt lhs = a.num_ << (e - a.exp_);
  BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) fail(ErrorCode::InvalidParams, "subtraction would be negative");
  return DyadicRational::from_parts(lhs - rhs, e);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational::from_parts(a.num_ * b.num_, a.exp_ + b.exp_);
}

DyadicRational abs_diff(const DyadicRational& a, const DyadicRational& b) {
  return a >= b ? a - b : b - a;
}

const DyadicRational& max(const DyadicRational& a, const DyadicRational& b) {
  return a < b ? b : a;
}

}  // namespace leash
