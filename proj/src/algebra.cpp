#include "heisen/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heisen::algebra {

int Monomial::degree() const {
  return std::accumulate(xs.begin(), xs.end(), 0) +
         std::accumulate(ys.begin(), ys.end(), 0) + s;
}

int Monomial::weight() const { return degree() + s; }

AlgebraElement::AlgebraElement(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("AlgebraElement: d must be >= 1");
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::constant(const Rational& c, int d) {
  AlgebraElement e(d);
  Monomial one{std::vector<int>(d, 0), std::vector<int>(d, 0), 0};
  e.add_term(one, c);
  return e;
}

AlgebraElement AlgebraElement::generator(int letter, int d) {
  if (letter < 1 || letter > 2 * d + 1)
    throw std::invalid_argument("generator: letter out of range");
  AlgebraElement e(d);
  Monomial m{std::vector<int>(d, 0), std::vector<int>(d, 0), 0};
  if (letter <= d)
    m.xs[letter - 1] = 1;
  else if (letter <= 2 * d)
    m.ys[letter - d - 1] = 1;
  else
    m.s = 1;
  e.add_term(m, 1);
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("algebra: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("algebra: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

// Right-multiplication of a normal-form term map by one generator.  Y_j and S
// slot into place directly; X_i must cross the Y block, and each crossing of
// Y_i releases one S:  X^a Y^b S^c X_i = X^{a+e_i} Y^b S^c
//                                        + b_i X^a Y^{b-e_i} S^{c+1}.
void right_mul_x(std::map<Monomial, Rational>& terms, int i) {
  std::map<Monomial, Rational> out;
  auto add = [&out](const Monomial& m, const Rational& c) {
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [m, c] : terms) {
    Monomial up = m;
    ++up.xs[i];
    add(up, c);
    if (m.ys[i] > 0) {
      Monomial swapped = m;
      --swapped.ys[i];
      ++swapped.s;
      add(swapped, c * m.ys[i]);
    }
  }
  terms = std::move(out);
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("multiply: dimension mismatch");
  const int d = a.dim();
  AlgebraElement result(d);
  for (const auto& [mb, cb] : b.terms()) {
    // Seed with a's terms scaled by cb, then push mb's letters in normal
    // order through the accumulated map.
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms()) acc.emplace(ma, ca * cb);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < mb.xs[i]; ++k) right_mul_x(acc, i);
    for (auto& [m, c] : acc) {
      Monomial full = m;
      for (int i = 0; i < d; ++i) full.ys[i] += mb.ys[i];
      full.s += mb.s;
      result.add_term(full, c);
    }
  }
  return result;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement power(const AlgebraElement& a, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  AlgebraElement r = AlgebraElement::constant(1, a.dim());
  for (int k = 0; k < n; ++k) r = multiply(r, a);
  return r;
}

AlgebraElement laplacian(int d) {
  AlgebraElement r(d);
  for (int i = 1; i <= 2 * d; ++i) {
    auto g = AlgebraElement::generator(i, d);
    r += multiply(g, g);
  }
  return r;
}

AlgebraElement word_element(const std::vector<int>& letters, int d) {
  AlgebraElement r = AlgebraElement::constant(1, d);
  for (int l : letters) r = multiply(r, AlgebraElement::generator(l, d));
  return r;
}

std::string letter_name(int letter, int d) {
  if (letter >= 1 && letter <= d) return "X" + std::to_string(letter);
  if (letter > d && letter <= 2 * d) return "Y" + std::to_string(letter - d);
  if (letter == 2 * d + 1) return "S";
  throw std::invalid_argument("letter_name: letter out of range");
}

namespace {

std::string monomial_string(const Monomial& m, int d) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    first = false;
  };
  for (int i = 0; i < d; ++i) emit("X" + std::to_string(i + 1), m.xs[i]);
  for (int i = 0; i < d; ++i) emit("Y" + std::to_string(i + 1), m.ys[i]);
  emit("S", m.s);
  return os.str();
}

std::string rational_string(const Rational& c) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(c);
  if (boost::multiprecision::denominator(c) != 1)
    os << "/" << boost::multiprecision::denominator(c);
  return os.str();
}

}  // namespace

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  const int d = a.dim();
  // highest total degree first, then map order within a degree
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  order.reserve(a.terms().size());
  for (const auto& [m, c] : a.terms()) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& p, const auto& q) {
    return p.first->degree() > q.first->degree();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : order) {
    const bool neg = *c < 0;
    Rational mag = neg ? Rational(-*c) : *c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string mono = monomial_string(*m, d);
    if (mono.empty()) {
      os << rational_string(mag);
    } else {
      if (mag != 1) os << rational_string(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int d) : text_(text), d_(d) {}

  AlgebraElement run() {
    AlgebraElement e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("algebra parse error at position " +
                             std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  AlgebraElement expr() {
    AlgebraElement e = term();
    while (true) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        return e;
    }
  }

  AlgebraElement term() {
    AlgebraElement e = factor();
    while (eat('*')) e = multiply(e, factor());
    return e;
  }

  AlgebraElement factor() {
    AlgebraElement e = primary();
    if (eat('^')) {
      const int n = integer("exponent");
      if (n < 0) fail("negative exponent");
      e = power(e, n);
    }
    return e;
  }

  AlgebraElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'X' || c == 'Y') {
      ++pos_;
      const int i = integer("generator index");
      if (i < 1 || i > d_) fail("generator index out of range for d");
      return AlgebraElement::generator(c == 'X' ? i : d_ + i, d_);
    }
    if (text_.compare(pos_, 5, "Delta") == 0) {
      pos_ += 5;
      return laplacian(d_);
    }
    if (c == 'S') {
      ++pos_;
      return AlgebraElement::generator(2 * d_ + 1, d_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long long num = integer("number");
      if (peek() == '/') {
        ++pos_;
        const long long den = integer("denominator");
        if (den == 0) fail("zero denominator");
        return AlgebraElement::constant(Rational(num, den), d_);
      }
      return AlgebraElement::constant(Rational(num), d_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  long long integer(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected " + what);
    return std::stoll(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  size_t pos_ = 0;
  int d_;
};

}  // namespace

AlgebraElement parse(const std::string& text, int d) {
  return Parser(text, d).run();
}

namespace {

// J maps X_i -> Y_i -> -X_i (period 4 with signs); S is fixed by the
// commutation with Delta, handled separately by the caller.
std::pair<int, int> apply_j_power(int letter, int k, int d) {
  int sign = 1;
  switch (k % 4) {
    case 0:
      break;
    case 1:
      if (letter > d) sign = -1;
      letter = (letter <= d) ? letter + d : letter - d;
      break;
    case 2:
      sign = -1;
      break;
    case 3:
      if (letter <= d) sign = -1;
      letter = (letter <= d) ? letter + d : letter - d;
      break;
  }
  return {letter, sign};
}

Rational binomial_exact(int n, int k) {
  using boost::multiprecision::cpp_int;
  cpp_int v = 1;
  for (int i = 0; i < k; ++i) {
    v *= (n - i);
    v /= (i + 1);
  }
  return Rational(v);
}

using ConstantMap = std::map<std::pair<std::vector<int>, int>, Rational>;

// Pull (-Delta)^p through the remaining letters of I, one letter at a time,
// via (-Delta) E = E (-Delta) + sign*2 (JE) S.  sign = -1 for the forward
// identity, +1 for the reversed one (where powers migrate the other way).
void expand(const std::vector<int>& I, size_t pos, int p, int j,
            std::vector<int>& K, const Rational& coef, int d, int two_sign,
            ConstantMap& out) {
  if (pos == I.size()) {
    auto key = std::make_pair(K, j);
    auto [it, fresh] = out.emplace(key, coef);
    if (!fresh) it->second += coef;
    return;
  }
  const int letter = I[pos];
  if (letter == 2 * d + 1) {
    // S is central: passes through every Laplacian factor unchanged.
    K.push_back(letter);
    expand(I, pos + 1, p, j, K, coef, d, two_sign, out);
    K.pop_back();
    return;
  }
  for (int k = 0; k <= p; ++k) {
    auto [mapped, sign] = apply_j_power(letter, k, d);
    Rational c = coef * binomial_exact(p, k) * sign;
    Rational two_k = 1;
    for (int t = 0; t < k; ++t) two_k *= 2 * two_sign;
    c *= two_k;
    K.push_back(mapped);
    expand(I, pos + 1, p - k, j + k, K, c, d, two_sign, out);
    K.pop_back();
  }
}

void prune_zeros(ConstantMap& m) {
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == 0) ? m.erase(it) : std::next(it);
}

}  // namespace

SwapReport verify_swap_identities(int n, const group::MultiIndex& I, int d,
                                  int n_bound) {
  if (n < 0) throw std::invalid_argument("verify_swap_identities: n < 0");
  if (n > n_bound)
    throw std::invalid_argument("verify_swap_identities: n exceeds bound");
  for (int l : I.letters)
    if (l < 1 || l > 2 * d + 1)
      throw std::invalid_argument("verify_swap_identities: letter out of range");

  SwapReport report;
  std::vector<int> scratch;
  expand(I.letters, 0, n, 0, scratch, 1, d, -1, report.forward);
  scratch.clear();
  expand(I.letters, 0, n, 0, scratch, 1, d, +1, report.reversed);
  prune_zeros(report.forward);
  prune_zeros(report.reversed);

  const AlgebraElement neg_delta = -laplacian(d);
  const AlgebraElement di = word_element(I.letters, d);
  const AlgebraElement s_gen = AlgebraElement::generator(2 * d + 1, d);

  AlgebraElement lhs_fwd = multiply(power(neg_delta, n), di);
  AlgebraElement rhs_fwd(d);
  for (const auto& [key, c] : report.forward) {
    const auto& [K, j] = key;
    rhs_fwd += c * multiply(word_element(K, d),
                            multiply(power(neg_delta, n - j), power(s_gen, j)));
  }

  AlgebraElement lhs_rev = multiply(di, power(neg_delta, n));
  AlgebraElement rhs_rev(d);
  for (const auto& [key, c] : report.reversed) {
    const auto& [K, j] = key;
    rhs_rev += c * multiply(power(neg_delta, n - j),
                            multiply(power(s_gen, j), word_element(K, d)));
  }

  report.match = (lhs_fwd == rhs_fwd) && (lhs_rev == rhs_rev);
  return report;
}

}  // namespace heisen::algebra
