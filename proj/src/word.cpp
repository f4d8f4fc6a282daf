#include "crank/word.hpp"

#include "crank/errors.hpp"

#include <numeric>
#include <vector>

namespace crank {

namespace {

void check_bits(const std::string& s) {
  for (char c : s)
    if (c != '0' && c != '1')
      throw ParseError(std::string("invalid bit '") + c + "'", 0);
}

// Smallest string-period of v via the KMP failure function; v is a power
// of its length-p prefix iff p divides |v|.
std::size_t smallest_period(const std::string& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && v[i] != v[k])
      k = fail[k - 1];
    if (v[i] == v[k])
      ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

} // namespace

UPWord::UPWord(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty())
    throw PreconditionError("UPWord period must be nonempty");
  check_bits(prefix_);
  check_bits(period_);

  period_.resize(smallest_period(period_));
  // u a (v0 a)^w == u (a v0)^w: absorb trailing prefix bits into the cycle.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
  }
}

char UPWord::bit(std::size_t i) const {
  if (i < prefix_.size())
    return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

std::string UPWord::unfold(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out += bit(i);
  return out;
}

bool UPWord::operator<(const UPWord& other) const {
  if (prefix_ != other.prefix_)
    return prefix_.size() != other.prefix_.size() ? prefix_.size() < other.prefix_.size()
                                                  : prefix_ < other.prefix_;
  if (period_ != other.period_)
    return period_.size() != other.period_.size() ? period_.size() < other.period_.size()
                                                  : period_ < other.period_;
  return false;
}

UPWord prepend(const std::string& bits, const UPWord& w) {
  return UPWord(bits + w.prefix(), w.period());
}

bool first_difference(const UPWord& a, const UPWord& b, std::size_t& pos) {
  const std::size_t bound =
      a.prefix().size() + b.prefix().size() + 2 * std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < bound; ++i) {
    if (a.bit(i) != b.bit(i)) {
      pos = i;
      return true;
    }
  }
  return false;
}

UPWord parse_upword(const std::string& text) {
  std::size_t i = 0;
  std::string prefix;
  while (i < text.size() && (text[i] == '0' || text[i] == '1'))
    prefix += text[i++];
  if (i >= text.size() || text[i] != '(')
    throw ParseError("word: expected '('", i);
  ++i;
  std::string period;
  while (i < text.size() && (text[i] == '0' || text[i] == '1'))
    period += text[i++];
  if (period.empty())
    throw ParseError("word: empty period", i);
  if (i + 2 >= text.size() || text.compare(i, 3, ")^w") != 0)
    throw ParseError("word: expected ')^w'", i);
  i += 3;
  if (i != text.size())
    throw ParseError("word: unexpected trailing input", i);
  return UPWord(prefix, period);
}

std::string to_string(const UPWord& w) {
  return w.prefix() + "(" + w.period() + ")^w";
}

} // namespace crank
