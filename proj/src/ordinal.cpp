#include "crank/ordinal.hpp"

#include "crank/errors.hpp"

#include <algorithm>
#include <cctype>

namespace crank {

void Ordinal::push_term(Ordinal exp, std::uint64_t coeff) {
  exponents_.push_back(std::move(exp));
  coeffs_.push_back(coeff);
}

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal a;
  if (n > 0)
    a.push_term(Ordinal(), n);
  return a;
}

Ordinal Ordinal::omega_pow(const Ordinal& exp, std::uint64_t coeff) {
  Ordinal a;
  if (coeff > 0)
    a.push_term(exp, coeff);
  return a;
}

Ordinal Ordinal::from_terms(std::vector<Ordinal> exponents, std::vector<std::uint64_t> coeffs) {
  if (exponents.size() != coeffs.size())
    throw PreconditionError("from_terms: mismatched term lists");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0)
      throw PreconditionError("from_terms: zero coefficient");
    if (i > 0 && ord_compare_raw(exponents[i], exponents[i - 1]) >= 0)
      throw PreconditionError("from_terms: exponents must strictly decrease");
  }
  Ordinal a;
  a.exponents_ = std::move(exponents);
  a.coeffs_ = std::move(coeffs);
  return a;
}

bool Ordinal::is_finite() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && exponents_[0].is_zero());
}

std::uint64_t Ordinal::value() const {
  if (!is_finite())
    throw PreconditionError("ordinal is not a natural number: " + to_string(*this));
  return coeffs_.empty() ? 0 : coeffs_[0];
}

int ord_compare_raw(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int e = ord_compare_raw(a.exponents_[i], b.exponents_[i]);
    if (e != 0)
      return e;
    if (a.coeffs_[i] != b.coeffs_[i])
      return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
  }
  if (a.coeffs_.size() != b.coeffs_.size())
    return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
  return 0;
}

Order ord_compare(const Ordinal& a, const Ordinal& b) {
  const int c = ord_compare_raw(a, b);
  return c < 0 ? Order::Less : c > 0 ? Order::Greater : Order::Equal;
}

bool operator<(const Ordinal& a, const Ordinal& b) { return ord_compare_raw(a, b) < 0; }
bool operator<=(const Ordinal& a, const Ordinal& b) { return ord_compare_raw(a, b) <= 0; }

Ordinal ord_succ(const Ordinal& a) {
  Ordinal r = a;
  if (!r.coeffs_.empty() && r.exponents_.back().is_zero())
    r.coeffs_.back() += 1;
  else
    r.push_term(Ordinal(), 1);
  return r;
}

Ordinal ord_pred(const Ordinal& a) {
  if (a.is_zero() || is_limit(a))
    throw PreconditionError("ord_pred: " + to_string(a) + " is not a successor");
  Ordinal r = a;
  if (r.coeffs_.back() > 1) {
    r.coeffs_.back() -= 1;
  } else {
    r.coeffs_.pop_back();
    r.exponents_.pop_back();
  }
  return r;
}

bool is_limit(const Ordinal& a) {
  return !a.coeffs_.empty() && !a.exponents_.back().is_zero();
}

Ordinal fund_seq(const Ordinal& limit, std::uint64_t n) {
  if (!is_limit(limit))
    throw PreconditionError("fund_seq requires a limit ordinal, got " + to_string(limit));

  Ordinal r = limit;
  const Ordinal e = r.exponents_.back();
  const std::uint64_t c = r.coeffs_.back();
  r.exponents_.pop_back();
  r.coeffs_.pop_back();
  if (c > 1)
    r.push_term(e, c - 1);

  if (!is_limit(e))
    r.push_term(ord_pred(e), n + 1); // e = d + 1: append w^d * (n+1)
  else
    r.push_term(fund_seq(e, n), 1);
  return r;
}

namespace {

class OrdinalParser {
public:
  explicit OrdinalParser(const std::string& text) : text_(text) {}

  Ordinal parse() {
    Ordinal a = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return a;
  }

private:
  Ordinal parse_sum() {
    std::vector<Ordinal> exponents;
    std::vector<std::uint64_t> coeffs;
    bool first = true;
    for (;;) {
      const auto [exp, coeff] = parse_term();
      if (coeff == 0) {
        if (!first)
          fail("'0' cannot be a summand");
        return Ordinal(); // a lone `0`
      }
      if (!first && ord_compare_raw(exp, exponents.back()) >= 0)
        fail("terms must be in strictly decreasing exponent order");
      exponents.push_back(exp);
      coeffs.push_back(coeff);
      first = false;
      skip_ws();
      if (!eat('+'))
        break;
    }
    return Ordinal::from_terms(std::move(exponents), std::move(coeffs));
  }

  // term := 'w' ('^' factor)? ('*' nat)? | nat
  std::pair<Ordinal, std::uint64_t> parse_term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exp = Ordinal::nat(1);
      skip_ws();
      if (eat('^'))
        exp = parse_factor();
      std::uint64_t coeff = 1;
      skip_ws();
      if (eat('*'))
        coeff = parse_nat();
      if (coeff == 0)
        fail("zero coefficient");
      return {exp, coeff};
    }
    if (std::isdigit(static_cast<unsigned char>(peek())))
      return {Ordinal(), parse_nat()};
    fail("expected 'w' or a number");
    // not reached
  }

  // factor := nat | 'w' ('^' factor)? | '(' sum ')'
  Ordinal parse_factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal a = parse_sum();
      skip_ws();
      if (!eat(')'))
        fail("expected ')'");
      return a;
    }
    if (peek() == 'w') {
      ++pos_;
      skip_ws();
      if (eat('^'))
        return Ordinal::omega_pow(parse_factor());
      return Ordinal::omega_pow(Ordinal::nat(1));
    }
    if (std::isdigit(static_cast<unsigned char>(peek())))
      return Ordinal::nat(parse_nat());
    fail("expected exponent");
  }

  std::uint64_t parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("ordinal: " + msg, pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void print_term(const Ordinal& exp, std::uint64_t coeff, std::string& out) {
  if (exp.is_zero()) {
    out += std::to_string(coeff);
    return;
  }
  out += 'w';
  if (!(exp.is_finite() && exp.value() == 1)) {
    out += '^';
    // parenthesize unless the exponent reparses as a factor
    if (exp.is_finite() || (exp.term_count() == 1 && exp.coeff(0) == 1))
      out += to_string(exp);
    else {
      out += '(';
      out += to_string(exp);
      out += ')';
    }
  }
  if (coeff != 1) {
    out += '*';
    out += std::to_string(coeff);
  }
}

} // namespace

Ordinal parse_ordinal(const std::string& text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (i > 0)
      out += '+';
    print_term(a.exponent(i), a.coeff(i), out);
  }
  return out;
}

const Ordinal& RankValue::ordinal() const {
  if (kind_ != Kind::Ord)
    throw PreconditionError("rank value is not an ordinal: " + to_string(*this));
  return ord_;
}

Order rank_compare(const RankValue& a, const RankValue& b) {
  auto level = [](const RankValue& r) {
    switch (r.kind()) {
    case RankValue::Kind::MinusOne: return 0;
    case RankValue::Kind::Ord: return 1;
    case RankValue::Kind::Infinity: return 2;
    }
    return 2;
  };
  if (level(a) != level(b))
    return level(a) < level(b) ? Order::Less : Order::Greater;
  if (a.kind() == RankValue::Kind::Ord)
    return ord_compare(a.ordinal(), b.ordinal());
  return Order::Equal;
}

bool operator<(const RankValue& a, const RankValue& b) {
  return rank_compare(a, b) == Order::Less;
}
bool operator<=(const RankValue& a, const RankValue& b) {
  return rank_compare(a, b) != Order::Greater;
}

std::string to_string(const RankValue& r) {
  switch (r.kind()) {
  case RankValue::Kind::MinusOne: return "-1";
  case RankValue::Kind::Infinity: return "infty";
  case RankValue::Kind::Ord: return to_string(r.ordinal());
  }
  return "?";
}

} // namespace crank
