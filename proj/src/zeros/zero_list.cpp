#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "zgap/zeros.hpp"
#include "zgap/zeta.hpp"

namespace zgap::zeros {

namespace {

bool less_value(double v, const Ordinate& o) { return v < o.gamma; }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Ordinate> bisect_all(const zeta::SignChangeScan& scan, double radius) {
  std::vector<Ordinate> out;
  out.reserve(scan.brackets.size());
  for (const auto& [a, b] : scan.brackets) {
    const auto [lo, hi] = zeta::refine_zero(a, b, 2.0 * radius);
    out.push_back({0.5 * (lo + hi), 0.5 * (hi - lo)});
  }
  return out;
}

}  // namespace

long ZeroList::count_in(double a, double b) const {
  if (b <= a) return 0;
  auto lo = std::upper_bound(ordinates.begin(), ordinates.end(), a, less_value);
  auto hi = std::upper_bound(ordinates.begin(), ordinates.end(), b, less_value);
  return static_cast<long>(hi - lo);
}

long ZeroList::count_upto(double t) const {
  if (t < t_min || t > t_max) throw OutOfRange("count_upto: t outside the zero list range");
  auto it = std::upper_bound(ordinates.begin(), ordinates.end(), t, less_value);
  return count_below + static_cast<long>(it - ordinates.begin());
}

ZeroList isolate_zeros(double t_min, double t_max, double radius) {
  if (!(t_min >= zeta::kMinHeight) || !(t_max > t_min) || t_max > zeta::kMaxHeight)
    throw DomainError("isolate_zeros requires 10 <= t_min < t_max <= 1e7");
  if (!(radius > 0.0)) throw DomainError("isolate_zeros: radius must be positive");

  const zeta::CountResult lo = zeta::count_N(t_min);
  const zeta::CountResult hi = zeta::count_N(t_max);
  const long expected = hi.count - lo.count;

  zeta::SignChangeScan scan = zeta::scan_sign_changes(t_min, t_max);
  if (static_cast<long>(scan.brackets.size()) != expected) {
    scan = zeta::scan_sign_changes(t_min, t_max, 0.5);
    if (static_cast<long>(scan.brackets.size()) != expected)
      throw CountMismatch("isolate_zeros: " + std::to_string(scan.brackets.size()) +
                          " sign changes, count_N difference " + std::to_string(expected));
  }

  ZeroList zl;
  zl.t_min = t_min;
  zl.t_max = t_max;
  zl.count_below = lo.count;
  zl.ordinates = bisect_all(scan, radius);
  zl.count_certified = lo.certified && hi.certified && scan.stable;
  return zl;
}

ZeroList restrict(const ZeroList& zl, double a, double b) {
  if (a < zl.t_min || b > zl.t_max || !(b > a)) throw OutOfRange("restrict: window outside the zero list");
  ZeroList out;
  out.t_min = a;
  out.t_max = b;
  out.count_below = zl.count_upto(a);
  out.count_certified = zl.count_certified;
  for (const Ordinate& o : zl.ordinates)
    if (o.gamma > a && o.gamma <= b) out.ordinates.push_back(o);
  return out;
}

void write_csv(const ZeroList& zl, std::ostream& out) {
  out << "# t_min=" << fmt17(zl.t_min) << " t_max=" << fmt17(zl.t_max)
      << " count_below=" << zl.count_below << " count_certified=" << (zl.count_certified ? 1 : 0) << "\n";
  out << "index,gamma,radius\n";
  for (std::size_t i = 0; i < zl.size(); ++i)
    out << zl.index_of(i) << ',' << fmt17(zl.ordinates[i].gamma) << ',' << fmt17(zl.ordinates[i].radius) << "\n";
}

ZeroList read_csv(std::istream& in) {
  ZeroList zl;
  bool have_meta = false;
  long first_index = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string kv;
      while (meta >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "t_min") zl.t_min = std::stod(val), have_meta = true;
        else if (key == "t_max") zl.t_max = std::stod(val);
        else if (key == "count_below") zl.count_below = std::stol(val);
        else if (key == "count_certified") zl.count_certified = val == "1";
      }
      continue;
    }
    if (line.rfind("index", 0) == 0) continue;
    std::istringstream row(line);
    std::string idx, g, r;
    if (!std::getline(row, idx, ',') || !std::getline(row, g, ',') || !std::getline(row, r))
      throw DomainError("zero list CSV: malformed row '" + line + "'");
    if (first_index < 0) first_index = std::stol(idx);
    zl.ordinates.push_back({std::stod(g), std::stod(r)});
  }
  for (std::size_t i = 1; i < zl.ordinates.size(); ++i)
    if (!(zl.ordinates[i].gamma - zl.ordinates[i].radius > zl.ordinates[i - 1].gamma + zl.ordinates[i - 1].radius))
      throw DomainError("zero list CSV: ordinates not increasing with disjoint enclosures");
  if (!have_meta) {
    if (zl.ordinates.empty()) throw DomainError("zero list CSV: no metadata and no rows");
    zl.t_min = zl.ordinates.front().gamma - zl.ordinates.front().radius;
    zl.t_max = zl.ordinates.back().gamma + zl.ordinates.back().radius;
    zl.count_below = std::max(0L, first_index - 1);
    zl.count_certified = false;
  }
  return zl;
}

}  // namespace zgap::zeros
