#include "satip/combinat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "satip/error.hpp"

namespace satip::combinat {

Partition::Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<long> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition();
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view piece = trim(text.substr(0, comma));
    long value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      fail(ErrorCode::InvalidArgument, "cannot parse partition part \"" + std::string(piece) + "\"");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<long> out;
  if (parts_.empty()) return Partition();
  for (long c = 1; c <= parts_.front(); ++c) {
    long count = 0;
    for (long p : parts_)
      if (p >= c) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition Partition::scaled(long n) const {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative scaling factor");
  std::vector<long> out = parts_;
  for (long& p : out) p *= n;
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.height() > height()) return false;
  for (std::size_t i = 0; i < inner.height(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<long> Partition::padded(std::size_t length) const {
  std::vector<long> out(std::max(length, parts_.size()), 0);
  std::copy(parts_.begin(), parts_.end(), out.begin());
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Integer factorial(long n) {
  Integer out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer centralizer_size(const CycleType& rho) {
  std::map<long, long> mult;
  for (long p : rho.parts()) ++mult[p];
  Integer out = 1;
  for (const auto& [length, m] : mult) {
    for (long i = 0; i < m; ++i) out *= length;
    out *= factorial(m);
  }
  return out;
}

namespace {

void generate(long remaining, long max_part, long height_left, std::vector<long>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (height_left == 0) return;
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, height_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(long n, long max_height, long max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> current;
  generate(n, max_part < 0 ? n : max_part, max_height < 0 ? n + 1 : max_height, current, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.height(), b.height()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace satip::combinat
