#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "zgap/primes.hpp"

namespace zgap::primes {

namespace {

constexpr char kMagic[8] = {'Z', 'G', 'A', 'P', 'P', 'R', 'M', '1'};
constexpr std::uint64_t kSegment = 1u << 18;

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::istream& is, std::uint64_t& v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return true;
}

}  // namespace

std::size_t PrimeTable::count_upto(double X) const {
  if (X < 2.0) return 0;
  auto bound = static_cast<std::uint64_t>(std::floor(X));
  return static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), bound) - primes.begin());
}

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

PrimeTable sieve(std::uint64_t limit) {
  if (limit > kMaxSieveLimit) throw LimitTooLarge("sieve limit above 10^9");
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  PrimeTable t;
  t.limit = limit;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  const std::vector<std::uint32_t> base = simple_sieve(root);

  // Rough pi(x) estimate to avoid repeated reallocation.
  double lx = std::log(static_cast<double>(limit));
  t.primes.reserve(static_cast<std::size_t>(limit / lx * (1.0 + 1.3 / lx)) + 16);

  std::vector<unsigned char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(lo + kSegment - 1, limit);
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(hi - lo + 1), 1);
    for (std::uint32_t p : base) {
      std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (seg[i - lo]) t.primes.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return t;
}

void save_cache(const PrimeTable& t, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("IoError", "cannot write prime cache " + path);
  os.write(kMagic, sizeof kMagic);
  put_u64(os, t.limit);
  put_u64(os, t.primes.size());
  for (std::uint32_t p : t.primes) put_u64(os, p);
}

std::optional<PrimeTable> load_cache(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[8];
  if (!is.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  PrimeTable t;
  std::uint64_t count = 0;
  if (!get_u64(is, t.limit) || !get_u64(is, count)) return std::nullopt;
  if (t.limit > kMaxSieveLimit || count > t.limit) return std::nullopt;
  t.primes.resize(count);
  for (auto& p : t.primes) {
    std::uint64_t v;
    if (!get_u64(is, v)) return std::nullopt;
    p = static_cast<std::uint32_t>(v);
  }
  return t;
}

PrimeTable sieve_cached(std::uint64_t limit, const std::string& path) {
  if (auto c = load_cache(path); c && c->limit >= limit) {
    auto cut = std::upper_bound(c->primes.begin(), c->primes.end(), limit);
    c->primes.erase(cut, c->primes.end());
    c->limit = limit;
    return *c;
  }
  PrimeTable t = sieve(limit);
  save_cache(t, path);
  return t;
}

}  // namespace zgap::primes
