#include "socle/vectors.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace socle {

namespace {

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

const Int& HVector::operator[](int d) const {
  if (d < 0 || d > top_degree()) throw std::out_of_range("HVector: degree out of range");
  return entries_[static_cast<std::size_t>(d)];
}

Int HVector::entry_or_zero(int d) const {
  if (d < 0) throw std::out_of_range("HVector: negative degree");
  return d <= top_degree() ? entries_[static_cast<std::size_t>(d)] : Int(0);
}

int HVector::codimension() const {
  if (top_degree() < 1)
    throw std::invalid_argument("codimension undefined for h = (1): no degree-1 entry");
  const Int& r = entries_[1];
  if (!r.fits_sint_p())
    throw std::invalid_argument("codimension too large for a machine integer");
  return static_cast<int>(r.get_si());
}

std::optional<HVector> HVector::try_validate(std::vector<Int> entries, std::string* diagnostic) {
  auto fail = [&](const std::string& why) -> std::optional<HVector> {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  };
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
  if (entries.empty()) return fail("empty sequence");
  if (entries[0] != 1) return fail("entry of degree 0 must be 1");
  for (std::size_t d = 1; d < entries.size(); ++d)
    if (entries[d] <= 0)
      return fail("non-positive entry at degree " + std::to_string(d));
  for (std::size_t d = 1; d + 1 < entries.size(); ++d) {
    Int bound = macaulay_bound(entries[d], static_cast<int>(d));
    if (entries[d + 1] > bound)
      return fail("growth bound violated at degree " + std::to_string(d) + ": " +
                  entries[d + 1].get_str() + " > " + bound.get_str());
  }
  return HVector(std::move(entries));
}

HVector HVector::validate(std::vector<Int> entries) {
  std::string why;
  auto h = try_validate(std::move(entries), &why);
  if (!h) throw std::invalid_argument("invalid h-vector: " + why);
  return *h;
}

const Int& SocleVector::operator[](int d) const {
  if (d < 0 || d > top_degree()) throw std::out_of_range("SocleVector: degree out of range");
  return entries_[static_cast<std::size_t>(d)];
}

Int SocleVector::entry_or_zero(int d) const {
  if (d < 0) throw std::out_of_range("SocleVector: negative degree");
  return d <= top_degree() ? entries_[static_cast<std::size_t>(d)] : Int(0);
}

bool SocleVector::is_level() const {
  for (int d = 0; d < top_degree(); ++d)
    if (entries_[static_cast<std::size_t>(d)] != 0) return false;
  return true;
}

bool SocleVector::is_gorenstein() const { return is_level() && entries_.back() == 1; }

std::optional<SocleVector> SocleVector::try_validate(std::vector<Int> entries,
                                                     std::string* diagnostic) {
  auto fail = [&](const std::string& why) -> std::optional<SocleVector> {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  };
  if (entries.size() < 2) return fail("need a top degree e >= 1");
  if (entries[0] != 0) return fail("entry of degree 0 must be 0");
  for (std::size_t d = 1; d < entries.size(); ++d)
    if (entries[d] < 0) return fail("negative entry at degree " + std::to_string(d));
  if (entries.back() == 0) return fail("entry of top degree must be positive");
  return SocleVector(std::move(entries));
}

SocleVector SocleVector::validate(std::vector<Int> entries) {
  std::string why;
  auto s = try_validate(std::move(entries), &why);
  if (!s) throw std::invalid_argument("invalid socle-vector: " + why);
  return *s;
}

HVector validate_h(const std::vector<Int>& seq) { return HVector::validate(seq); }
SocleVector validate_s(const std::vector<Int>& seq) { return SocleVector::validate(seq); }

HVector min_h_for_socle(const SocleVector& s) {
  const int e = s.top_degree();
  std::vector<Int> h(static_cast<std::size_t>(e) + 1);
  h[static_cast<std::size_t>(e)] = s[e];
  for (int i = e - 1; i >= 1; --i)
    h[static_cast<std::size_t>(i)] = min_prev(h[static_cast<std::size_t>(i) + 1], i + 1) + s[i];
  h[0] = 1;
  return HVector::validate(std::move(h));
}

SocleVector max_socle_for_h(const HVector& h) {
  const int e = h.top_degree();
  if (e < 1)
    throw std::invalid_argument(
        "max_socle_for_h: h = (1) has no socle-vector (need top degree e >= 1)");
  std::vector<Int> s(static_cast<std::size_t>(e) + 1);
  s[static_cast<std::size_t>(e)] = h[e];
  for (int i = e - 1; i >= 1; --i) {
    s[static_cast<std::size_t>(i)] = h[i] - min_prev(h[i + 1], i + 1);
    internal_check(s[static_cast<std::size_t>(i)] >= 0,
                   "maximum socle entry must be non-negative for a valid h-vector");
  }
  s[0] = 0;
  return SocleVector::validate(std::move(s));
}

Int min_codimension(const SocleVector& s) { return min_h_for_socle(s)[1]; }

int generic_index(const HVector& h) {
  if (h.top_degree() < 1)
    throw std::invalid_argument("generic_index: need top degree e >= 1");
  const Int r = h[1];
  int t = 1;
  for (int d = 2; d <= h.top_degree(); ++d)
    if (h[d] == binom(r - 1 + d, static_cast<unsigned long>(d))) t = d;
  return t;
}

bool entrywise_leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const HVector& h) { return join(h.entries()); }
std::string to_string(const SocleVector& s) { return join(s.entries()); }

std::ostream& operator<<(std::ostream& os, const HVector& h) { return os << to_string(h); }
std::ostream& operator<<(std::ostream& os, const SocleVector& s) { return os << to_string(s); }

}  // namespace socle
