#include "amqft/signal.hpp"

#include <stdexcept>
#include <string>

namespace amqft {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

TransformKind kind_of(SignalType type) {
  switch (type) {
    case SignalType::CdftFull:
      return TransformKind::Cdft;
    case SignalType::RdftFull:
      return TransformKind::Rdft;
    case SignalType::DctFull:
    case SignalType::DctEvenTime:
    case SignalType::DctOddTime:
    case SignalType::DctEvenHarm:
    case SignalType::DctOddHarm:
    case SignalType::DctOddTimeEvenHarm:
    case SignalType::DctEvenTimeOddHarm:
    case SignalType::DctOddTimeOddHarm:
      return TransformKind::Dct;
    default:
      return TransformKind::Dst;
  }
}

Parity time_parity(SignalType type) {
  switch (type) {
    case SignalType::DctEvenTime:
    case SignalType::DctEvenTimeOddHarm:
    case SignalType::DstEvenTime:
    case SignalType::DstEvenTimeOddHarm:
      return Parity::Even;
    case SignalType::DctOddTime:
    case SignalType::DctOddTimeEvenHarm:
    case SignalType::DctOddTimeOddHarm:
    case SignalType::DstOddTime:
    case SignalType::DstOddTimeEvenHarm:
    case SignalType::DstOddTimeOddHarm:
      return Parity::Odd;
    default:
      return Parity::Full;
  }
}

Parity harmonic_parity(SignalType type) {
  switch (type) {
    case SignalType::DctEvenHarm:
    case SignalType::DctOddTimeEvenHarm:
    case SignalType::DstEvenHarm:
    case SignalType::DstOddTimeEvenHarm:
      return Parity::Even;
    case SignalType::DctOddHarm:
    case SignalType::DctEvenTimeOddHarm:
    case SignalType::DctOddTimeOddHarm:
    case SignalType::DstOddHarm:
    case SignalType::DstEvenTimeOddHarm:
    case SignalType::DstOddTimeOddHarm:
      return Parity::Odd;
    default:
      return Parity::Full;
  }
}

const char* type_name(SignalType type) {
  switch (type) {
    case SignalType::CdftFull:
      return "cdft";
    case SignalType::RdftFull:
      return "rdft";
    case SignalType::DctFull:
      return "dct";
    case SignalType::DctEvenTime:
      return "dct[even-n]";
    case SignalType::DctOddTime:
      return "dct[odd-n]";
    case SignalType::DctEvenHarm:
      return "dct[even-k]";
    case SignalType::DctOddHarm:
      return "dct[odd-k]";
    case SignalType::DctOddTimeEvenHarm:
      return "dct[odd-n,even-k]";
    case SignalType::DctEvenTimeOddHarm:
      return "dct[even-n,odd-k]";
    case SignalType::DctOddTimeOddHarm:
      return "dct[odd-n,odd-k]";
    case SignalType::DstFull:
      return "dst";
    case SignalType::DstEvenTime:
      return "dst[even-n]";
    case SignalType::DstOddTime:
      return "dst[odd-n]";
    case SignalType::DstEvenHarm:
      return "dst[even-k]";
    case SignalType::DstOddHarm:
      return "dst[odd-k]";
    case SignalType::DstOddTimeEvenHarm:
      return "dst[odd-n,even-k]";
    case SignalType::DstEvenTimeOddHarm:
      return "dst[even-n,odd-k]";
    case SignalType::DstOddTimeOddHarm:
      return "dst[odd-n,odd-k]";
  }
  return "?";
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t min_periodization(SignalType type) {
  switch (type) {
    case SignalType::CdftFull:
    case SignalType::RdftFull:
    case SignalType::DctFull:
      return 2;
    case SignalType::DctEvenTime:
    case SignalType::DctOddTime:
    case SignalType::DctEvenHarm:
    case SignalType::DctOddHarm:
    case SignalType::DstOddTime:
    case SignalType::DstOddHarm:
      return 4;
    case SignalType::DstFull:
      return 4;
    default:
      return 8;
  }
}

void validate_periodization(SignalType type, std::size_t n) {
  if (!is_power_of_two(n)) {
    fail("periodization " + std::to_string(n) + " is not a power of two");
  }
  if (n < min_periodization(type)) {
    fail(std::string("periodization ") + std::to_string(n) +
         " is below the minimum " + std::to_string(min_periodization(type)) +
         " for " + type_name(type));
  }
}

std::size_t IndexRange::position_of(std::size_t index) const {
  if (!contains(index)) {
    fail("signal index " + std::to_string(index) + " is not stored");
  }
  return (index - first) / step;
}

std::size_t IndexRange::index_at(std::size_t position) const {
  if (position >= count) {
    fail("storage position " + std::to_string(position) + " out of range");
  }
  return first + step * position;
}

IndexRange stored_range(SignalType type, std::size_t n, Domain domain) {
  validate_periodization(type, n);
  const bool temporal = domain == Domain::Temporal;
  switch (type) {
    case SignalType::CdftFull:
    case SignalType::RdftFull:
      return {0, 1, n};
    case SignalType::DctFull:
      return {0, 1, n / 2 + 1};
    case SignalType::DctEvenTime:
      return temporal ? IndexRange{0, 2, n / 4 + 1} : IndexRange{0, 1, n / 4 + 1};
    case SignalType::DctOddTime:
      return temporal ? IndexRange{1, 2, n / 4} : IndexRange{0, 1, n / 4};
    case SignalType::DctEvenHarm:
      return temporal ? IndexRange{0, 1, n / 4 + 1} : IndexRange{0, 2, n / 4 + 1};
    case SignalType::DctOddHarm:
      return temporal ? IndexRange{0, 1, n / 4} : IndexRange{1, 2, n / 4};
    case SignalType::DctOddTimeEvenHarm:
      return temporal ? IndexRange{1, 2, n / 8} : IndexRange{0, 2, n / 8};
    case SignalType::DctEvenTimeOddHarm:
      return temporal ? IndexRange{0, 2, n / 8} : IndexRange{1, 2, n / 8};
    case SignalType::DctOddTimeOddHarm:
      return {1, 2, n / 8};
    case SignalType::DstFull:
      return {1, 1, n / 2 - 1};
    case SignalType::DstEvenTime:
      return temporal ? IndexRange{2, 2, n / 4 - 1} : IndexRange{1, 1, n / 4 - 1};
    case SignalType::DstOddTime:
      return temporal ? IndexRange{1, 2, n / 4} : IndexRange{1, 1, n / 4};
    case SignalType::DstEvenHarm:
      return temporal ? IndexRange{1, 1, n / 4 - 1} : IndexRange{2, 2, n / 4 - 1};
    case SignalType::DstOddHarm:
      return temporal ? IndexRange{1, 1, n / 4} : IndexRange{1, 2, n / 4};
    case SignalType::DstOddTimeEvenHarm:
      return temporal ? IndexRange{1, 2, n / 8} : IndexRange{2, 2, n / 8};
    case SignalType::DstEvenTimeOddHarm:
      return temporal ? IndexRange{2, 2, n / 8} : IndexRange{1, 2, n / 8};
    case SignalType::DstOddTimeOddHarm:
      return {1, 2, n / 8};
  }
  fail("unknown signal type");
}

std::vector<std::size_t> stored_indices(SignalType type, std::size_t n,
                                        Domain domain) {
  const IndexRange r = stored_range(type, n, domain);
  std::vector<std::size_t> out;
  out.reserve(r.count);
  for (std::size_t p = 0; p < r.count; ++p) out.push_back(r.index_at(p));
  return out;
}

std::size_t storage_position(SignalType type, std::size_t n, Domain domain,
                             std::size_t index) {
  return stored_range(type, n, domain).position_of(index);
}

std::size_t cell_count(SignalType type, std::size_t n) {
  const std::size_t slots = stored_range(type, n, Domain::Temporal).count;
  return type == SignalType::CdftFull ? 2 * slots : slots;
}

SignalBuffer SignalBuffer::zeros(SignalType type, std::size_t n,
                                 Domain domain) {
  validate_periodization(type, n);
  SignalBuffer buf;
  buf.type = type;
  buf.periodization = n;
  buf.domain = domain;
  buf.cells.assign(cell_count(type, n), 0.0);
  return buf;
}

double SignalBuffer::at(std::size_t index) const {
  if (type == SignalType::CdftFull) {
    fail("at() is for real-valued signal types; use re()/im()");
  }
  return cells[range().position_of(index)];
}

double& SignalBuffer::at(std::size_t index) {
  if (type == SignalType::CdftFull) {
    fail("at() is for real-valued signal types; use re()/im()");
  }
  return cells[range().position_of(index)];
}

double SignalBuffer::re(std::size_t index) const {
  if (type != SignalType::CdftFull) fail("re() is for the complex type");
  return cells[2 * range().position_of(index)];
}

double& SignalBuffer::re(std::size_t index) {
  if (type != SignalType::CdftFull) fail("re() is for the complex type");
  return cells[2 * range().position_of(index)];
}

double SignalBuffer::im(std::size_t index) const {
  if (type != SignalType::CdftFull) fail("im() is for the complex type");
  return cells[2 * range().position_of(index) + 1];
}

double& SignalBuffer::im(std::size_t index) {
  if (type != SignalType::CdftFull) fail("im() is for the complex type");
  return cells[2 * range().position_of(index) + 1];
}

}  // namespace amqft
