#pragma once

// Exact coefficient fields: Q, Q(zeta) with zeta^2 + zeta + 1 = 0, and F_p with
// p = 1 mod 3. Scalars are immutable values.

#include <gmpxx.h>

#include <cassert>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "skw/error.hpp"

namespace skw {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs_u128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

inline bool fits_i64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline mpz_class to_mpz(i128 v) {
  u128 m = abs_u128(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Arbitrary-precision rational. Values that fit in 64-bit numerator and
/// denominator stay inline; anything larger lives in a shared GMP rational.
/// The representation is canonical, so equality is field-wise.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit like mpq_class
  Rational(long long n, long long d) { *this = from_i128(n, d); }
  explicit Rational(const mpq_class& q) { *this = from_mpq(q); }

  static Rational parse(std::string_view text) {
    std::string s = detail::trim(text);
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty rational");
    if (s[0] == '+') s.erase(0, 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0);
      if (!ok) throw Error(ErrorCode::parse_error, "bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::parse_error, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return from_mpq(q);
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
  }

  mpz_class numerator() const { return to_mpq().get_num(); }
  mpz_class denominator() const { return to_mpq().get_den(); }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero rational");
    if (big_) return from_mpq(1 / *big_);
    detail::i128 n = den_, d = num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return from_reduced(n, d);
  }

  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }

  friend Rational operator-(const Rational& a) {
    if (a.big_) return from_mpq(-*a.big_);
    return from_reduced(-static_cast<detail::i128>(a.num_), a.den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() + b.to_mpq());
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    using detail::i128;
    if (a.den_ == 1 && b.den_ == 1) return from_reduced(static_cast<i128>(a.num_) + b.num_, 1);
    return from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                     static_cast<i128>(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() - b.to_mpq());
    if (b.num_ == 0) return a;
    using detail::i128;
    if (a.den_ == 1 && b.den_ == 1) return from_reduced(static_cast<i128>(a.num_) - b.num_, 1);
    return from_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                     static_cast<i128>(a.den_) * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    using detail::i128;
    using detail::u128;
    if (a.den_ == 1 && b.den_ == 1) return from_reduced(static_cast<i128>(a.num_) * b.num_, 1);
    auto g1 = static_cast<std::int64_t>(detail::gcd_u128(detail::abs_u128(a.num_), static_cast<u128>(b.den_)));
    auto g2 = static_cast<std::int64_t>(detail::gcd_u128(detail::abs_u128(b.num_), static_cast<u128>(a.den_)));
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return from_reduced(n, d);
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  // d > 0, gcd(|n|, d) == 1
  static Rational from_reduced(detail::i128 n, detail::i128 d) {
    Rational r;
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
    } else {
      r.big_ = std::make_shared<const mpq_class>(detail::to_mpz(n), detail::to_mpz(d));
    }
    return r;
  }

  static Rational from_i128(detail::i128 n, detail::i128 d) {
    if (d == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    auto g = static_cast<detail::i128>(detail::gcd_u128(detail::abs_u128(n), static_cast<detail::u128>(d)));
    return from_reduced(n / g, d / g);
  }

  static Rational from_mpq(mpq_class q) {
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
    } else {
      r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Element a + b*zeta of Q(zeta), zeta^2 = -1 - zeta.
class QZeta {
 public:
  QZeta() = default;
  QZeta(long long a) : a_(a) {}  // NOLINT
  QZeta(Rational a) : a_(std::move(a)) {}  // NOLINT
  QZeta(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QZeta zeta() { return QZeta(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& zeta_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  /// Complex conjugation: zeta -> zeta^2.
  QZeta conj() const { return QZeta(a_ - b_, -b_); }

  /// N(a + b zeta) = a^2 - ab + b^2.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  QZeta inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(zeta)");
    Rational n = norm().inverse();
    QZeta c = conj();
    return QZeta(c.a_ * n, c.b_ * n);
  }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string zpart;
    Rational mag = b_.sign() < 0 ? -b_ : b_;
    zpart = mag.to_string() + "*w";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + zpart;
    return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + zpart;
  }

  /// Accepts sums of terms `r`, `r*w`, `w` with optional signs; `w`, `zeta` and
  /// the UTF-8 letter for zeta are synonyms. Optional surrounding parentheses.
  static QZeta parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    replace_all(s, "\xCE\xB6", "w");  // zeta
    replace_all(s, "zeta", "w");
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty scalar");
    QZeta result;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      result = result + parse_term(term);
      i = j;
    }
    return result;
  }

  friend bool operator==(const QZeta& x, const QZeta& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend QZeta operator-(const QZeta& x) { return QZeta(-x.a_, -x.b_); }
  friend QZeta operator+(const QZeta& x, const QZeta& y) { return QZeta(x.a_ + y.a_, x.b_ + y.b_); }
  friend QZeta operator-(const QZeta& x, const QZeta& y) { return QZeta(x.a_ - y.a_, x.b_ - y.b_); }

  friend QZeta operator*(const QZeta& x, const QZeta& y) {
    // (a + b z)(c + d z) = (ac - bd) + (ad + bc - bd) z
    if (x.b_.is_zero()) return QZeta(x.a_ * y.a_, x.a_ * y.b_);
    if (y.b_.is_zero()) return QZeta(x.a_ * y.a_, x.b_ * y.a_);
    Rational bd = x.b_ * y.b_;
    return QZeta(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
  }

  friend QZeta operator/(const QZeta& x, const QZeta& y) { return x * y.inverse(); }

  QZeta& operator+=(const QZeta& o) { return *this = *this + o; }
  QZeta& operator-=(const QZeta& o) { return *this = *this - o; }
  QZeta& operator*=(const QZeta& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const QZeta& x) { return os << x.to_string(); }

 private:
  static void replace_all(std::string& s, const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  }

  static QZeta parse_term(std::string term) {
    bool neg = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw Error(ErrorCode::parse_error, "dangling sign in scalar");
    QZeta value;
    if (term == "w") {
      value = zeta();
    } else if (term.size() > 2 && term.compare(term.size() - 2, 2, "*w") == 0) {
      value = QZeta(Rational(0), Rational::parse(term.substr(0, term.size() - 2)));
    } else {
      value = QZeta(Rational::parse(term));
    }
    return neg ? -value : value;
  }

  Rational a_;
  Rational b_;
};

/// Residue modulo a runtime prime. A default-constructed value is a zero that
/// adopts the modulus of whatever it is combined with.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}

  static Fp from_int(long long n, std::uint32_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (v_ == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero residue");
    return pow(p_ - 2);
  }

  std::string to_string() const { return std::to_string(v_); }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend Fp operator-(const Fp& a) { return a.v_ == 0 ? a : Fp(a.p_ - a.v_, a.p_); }
  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    return raw(static_cast<std::uint32_t>(s >= p ? s - p : s), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : static_cast<std::uint32_t>(a.v_ + (static_cast<std::uint64_t>(p) - b.v_)), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static std::uint32_t join(const Fp& a, const Fp& b) {
    assert(a.p_ == 0 || b.p_ == 0 || a.p_ == b.p_);
    return a.p_ ? a.p_ : b.p_;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

enum class FieldKind { rationals, cyclotomic3, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::cyclotomic3;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  static FieldSpec cyclotomic3() { return {FieldKind::cyclotomic3, 0}; }
  static FieldSpec prime(std::uint32_t p) { return {FieldKind::prime, p}; }

  /// `q`, `qzeta`, or `fp:<p>`.
  static FieldSpec parse(std::string_view text) {
    std::string s = detail::trim(text);
    if (s == "q") return rationals();
    if (s == "qzeta" || s == "cyclotomic3") return cyclotomic3();
    if (s.rfind("fp:", 0) == 0) {
      std::string digits = s.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9) {
        throw Error(ErrorCode::parse_error, "bad prime in field spec '" + s + "'");
      }
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw Error(ErrorCode::parse_error, "unknown field '" + s + "' (expected q, qzeta or fp:<p>)");
  }

  std::string to_string() const {
    switch (kind) {
      case FieldKind::rationals: return "q";
      case FieldKind::cyclotomic3: return "qzeta";
      case FieldKind::prime: return "fp:" + std::to_string(p);
    }
    return "?";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct RationalField {
  using value_type = Rational;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  Rational from_ratio(long long n, long long d) const { return Rational(n, d); }
  Rational parse(std::string_view s) const {
    QZeta v = QZeta::parse(s);
    if (!v.zeta_part().is_zero()) {
      throw Error(ErrorCode::unsupported_field, "scalar '" + std::string(s) + "' needs zeta, not in Q");
    }
    return v.rational_part();
  }
  std::string format(const Rational& x) const { return x.to_string(); }
};

struct CyclotomicField {
  using value_type = QZeta;

  FieldSpec spec() const { return FieldSpec::cyclotomic3(); }
  QZeta zero() const { return QZeta(); }
  QZeta one() const { return QZeta(1); }
  QZeta from_int(long long n) const { return QZeta(n); }
  QZeta from_ratio(long long n, long long d) const { return QZeta(Rational(n, d)); }
  QZeta zeta() const { return QZeta::zeta(); }
  QZeta conj(const QZeta& x) const { return x.conj(); }
  QZeta parse(std::string_view s) const { return QZeta::parse(s); }
  std::string format(const QZeta& x) const { return x.to_string(); }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorCode::no_cube_root, std::to_string(p) + " is not prime; no cube root of unity");
    if (p % 3 != 1) {
      throw Error(ErrorCode::no_cube_root, std::to_string(p) + " is not 1 mod 3; no primitive cube root of unity");
    }
    if (p >= (1u << 31)) throw Error(ErrorCode::invalid_argument, "prime too large");
    for (std::uint32_t g = 2; g < p; ++g) {
      if (Fp(g, p).pow(3).is_one()) {
        zeta_ = g;
        break;
      }
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long n) const { return Fp::from_int(n, p_); }
  Fp from_ratio(long long n, long long d) const { return from_int(n) / from_int(d); }
  Fp element(std::uint64_t v) const { return Fp(v, p_); }
  /// Smallest residue g != 1 with g^3 = 1.
  Fp zeta() const { return Fp(zeta_, p_); }
  Fp parse(std::string_view s) const;
  std::string format(const Fp& x) const { return x.to_string(); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t zeta_ = 0;
};

template <class K>
using Scalar = typename K::value_type;

template <class K>
concept ExactField = requires(const K& k, long long n, const typename K::value_type& a) {
  typename K::value_type;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(n) } -> std::same_as<typename K::value_type>;
  { k.spec() } -> std::same_as<FieldSpec>;
  { a + a } -> std::convertible_to<typename K::value_type>;
  { a * a } -> std::convertible_to<typename K::value_type>;
  { a.inverse() } -> std::convertible_to<typename K::value_type>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Fields that contain a primitive cube root of unity.
template <class K>
concept CubeRootField = ExactField<K> && requires(const K& k) {
  { k.zeta() } -> std::same_as<typename K::value_type>;
};

using AnyField = std::variant<RationalField, CyclotomicField, PrimeField>;

inline AnyField make_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::rationals: return RationalField{};
    case FieldKind::cyclotomic3: return CyclotomicField{};
    case FieldKind::prime: return PrimeField(spec.p);
  }
  throw Error(ErrorCode::invalid_argument, "bad field kind");
}

template <ExactField K>
Scalar<K> primitive_cube_root(const K& field) {
  if constexpr (CubeRootField<K>) {
    return field.zeta();
  } else {
    throw Error(ErrorCode::unsupported_field, "field " + field.spec().to_string() + " has no primitive cube root of unity");
  }
}

inline Fp specialize(const Rational& x, const PrimeField& field) {
  std::uint32_t p = field.characteristic();
  mpz_class num = x.numerator(), den = x.denominator();
  mpz_class pz = static_cast<unsigned long>(p);
  mpz_class dr = den % pz;
  if (dr == 0) throw Error(ErrorCode::bad_prime, "denominator of " + x.to_string() + " divisible by " + std::to_string(p));
  mpz_class nr = num % pz;
  if (nr < 0) nr += pz;
  return Fp(nr.get_ui(), p) / Fp(dr.get_ui(), p);
}

/// Ring homomorphism Z[1/den][zeta] -> F_p sending zeta to the chosen cube root.
inline Fp specialize(const QZeta& x, const PrimeField& field) {
  return specialize(x.rational_part(), field) + specialize(x.zeta_part(), field) * field.zeta();
}

inline Fp PrimeField::parse(std::string_view s) const { return specialize(QZeta::parse(s), *this); }

}  // namespace skw
