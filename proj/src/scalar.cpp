#include "monocat/scalar.hpp"

#include <charconv>

#include "monocat/errors.hpp"

namespace monocat {

  namespace {
    std::int64_t reduce(std::int64_t v, std::int64_t p) {
      v %= p;
      return v < 0 ? v + p : v;
    }

    std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
      // p is prime so a^(p-2) is the inverse
      std::int64_t result = 1, base = a, e = p - 2;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return result;
    }
  }  // namespace

  void check_characteristic(Characteristic p) {
    if (p == 0) {
      return;
    }
    if (p > 97 || p < 2) {
      throw UnsupportedField("characteristic " + std::to_string(p)
                             + " is not 0 or a prime <= 97");
    }
    for (Characteristic d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw UnsupportedField("characteristic " + std::to_string(p)
                               + " is not prime");
      }
    }
  }

  Scalar::Scalar(long value, Characteristic p) : _p(p) {
    if (p == 0) {
      _q.emplace(value);
    } else {
      _r = reduce(value, p);
    }
  }

  Scalar::Scalar(mpq_class const& value, Characteristic p) : _p(p) {
    if (p == 0) {
      _q.emplace(value);
      _q->canonicalize();
      return;
    }
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (den == 0) {
      throw DivisionByZero("denominator vanishes modulo "
                           + std::to_string(p));
    }
    std::int64_t n = reduce(num.get_si(), p);
    std::int64_t d = reduce(den.get_si(), p);
    _r             = n * inverse_mod(d, p) % p;
  }

  Scalar Scalar::parse(std::string_view text, Characteristic p) {
    std::string s(text);
    mpq_class   q;
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw ParseError("cannot parse scalar \"" + s + "\"");
    }
    if (q.get_den() == 0) {
      throw DivisionByZero("zero denominator in \"" + s + "\"");
    }
    q.canonicalize();
    return Scalar(q, p);
  }

  bool Scalar::is_zero() const noexcept {
    return _p == 0 ? sgn(*_q) == 0 : _r == 0;
  }

  bool Scalar::is_one() const noexcept {
    return _p == 0 ? *_q == 1 : _r == 1;
  }

  mpq_class Scalar::rational() const {
    return _p == 0 ? *_q : mpq_class(_r);
  }

  void Scalar::same_field(Scalar const& that) const {
    if (_p != that._p) {
      throw FieldMismatch("mixing characteristic " + std::to_string(_p)
                          + " with " + std::to_string(that._p));
    }
  }

  Scalar& Scalar::operator+=(Scalar const& that) {
    same_field(that);
    if (_p == 0) {
      *_q += *that._q;
    } else {
      _r = (_r + that._r) % _p;
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& that) {
    same_field(that);
    if (_p == 0) {
      *_q -= *that._q;
    } else {
      _r = (_r - that._r + _p) % _p;
    }
    return *this;
  }

  Scalar& Scalar::operator*=(Scalar const& that) {
    same_field(that);
    if (_p == 0) {
      *_q *= *that._q;
    } else {
      _r = _r * that._r % _p;
    }
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& that) {
    return *this *= that.inverse();
  }

  Scalar Scalar::operator-() const {
    Scalar result(*this);
    if (_p == 0) {
      *result._q = -*_q;
    } else {
      result._r = (_p - _r) % _p;
    }
    return result;
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw DivisionByZero("inverse of zero");
    }
    Scalar result(*this);
    if (_p == 0) {
      *result._q = 1 / *_q;
    } else {
      result._r = inverse_mod(_r, _p);
    }
    return result;
  }

  bool operator==(Scalar const& a, Scalar const& b) {
    if (a._p != b._p) {
      return false;
    }
    return a._p == 0 ? *a._q == *b._q : a._r == b._r;
  }

  std::string Scalar::to_string() const {
    return _p == 0 ? _q->get_str() : std::to_string(_r);
  }

}  // namespace monocat
