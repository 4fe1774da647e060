#include "xifam/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace xifam {

void check_ground_size(int n, int cap) {
  if (n < 1 || n > cap) {
    throw InputError("ground size n=" + std::to_string(n) + " outside [1, " +
                     std::to_string(cap) + "]");
  }
}

Mask mask_from_elements(int n, const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw InputError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    }
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::string format_mask(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

Family Family::from_masks(int n, std::vector<Mask> masks) {
  check_ground_size(n, kMaxLiftedSize);
  for (Mask m : masks) {
    if (!mask_fits(m, n)) {
      throw InputError("subset " + format_mask(m) + " does not fit ground size " +
                       std::to_string(n));
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return Family(n, std::move(masks));
}

Family Family::power_set(int n) {
  check_ground_size(n, kMaxLiftedSize);
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  return Family(n, std::move(all));
}

bool Family::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::vector<std::vector<int>> Family::element_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(members_.size());
  for (Mask m : members_) out.push_back(elements_of(m));
  return out;
}

Family make_family(int n, const std::vector<std::vector<int>>& sets) {
  check_ground_size(n);
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(mask_from_elements(n, s));
  return Family::from_masks(n, std::move(masks));
}

Frac Frac::reduced(long long c, long long d) {
  if (d <= 0) throw InputError("fraction denominator must be positive, got " + std::to_string(d));
  if (c < 0 || c > d) {
    throw InputError("fraction " + std::to_string(c) + "/" + std::to_string(d) +
                     " is outside [0, 1]");
  }
  if (d > (1LL << 30)) throw InputError("fraction denominator too large");
  const long long g = std::gcd(c, d);
  return Frac(static_cast<int>(c / g), static_cast<int>(d / g));
}

Frac parse_fraction(const std::string& text, bool* reduced_from_input) {
  auto parse_int = [&](std::string_view part) {
    long long v = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc{} || ptr != last) {
      throw InputError("malformed fraction '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto slash = sv.find('/');
  const long long c = parse_int(slash == std::string_view::npos ? sv : sv.substr(0, slash));
  const long long d = slash == std::string_view::npos ? 1 : parse_int(sv.substr(slash + 1));
  const Frac f = Frac::reduced(c, d);
  if (reduced_from_input != nullptr) *reduced_from_input = (f.c() != c || f.d() != d);
  return f;
}

PairInstance::PairInstance(Frac f, Family a_side, Family b_side)
    : frac(f), a(std::move(a_side)), b(std::move(b_side)) {
  if (a.n() != b.n()) {
    throw InputError("pair families disagree on ground size (" + std::to_string(a.n()) + " vs " +
                     std::to_string(b.n()) + ")");
  }
}

}  // namespace xifam
