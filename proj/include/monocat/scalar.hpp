#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace monocat {

  // Characteristic of the base field: 0 for the rationals, otherwise a prime
  // p <= 97.
  using Characteristic = std::uint32_t;

  // Throws UnsupportedField unless p == 0 or p is a prime not exceeding 97.
  void check_characteristic(Characteristic p);

  // An exact element of Q or F_p.  Residues are kept in [0, p).
  class Scalar {
   public:
    Scalar() : Scalar(0, 0) {}
    Scalar(long value, Characteristic p);
    Scalar(mpq_class const& value, Characteristic p);

    // Accepts "n", "-n" or "n/d".
    static Scalar parse(std::string_view text, Characteristic p);

    static Scalar zero(Characteristic p) {
      return Scalar(0, p);
    }
    static Scalar one(Characteristic p) {
      return Scalar(1, p);
    }

    [[nodiscard]] Characteristic characteristic() const noexcept {
      return _p;
    }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;

    // Only meaningful in characteristic p.
    [[nodiscard]] std::int64_t residue() const noexcept {
      return _r;
    }
    [[nodiscard]] mpq_class rational() const;

    Scalar& operator+=(Scalar const& that);
    Scalar& operator-=(Scalar const& that);
    Scalar& operator*=(Scalar const& that);
    Scalar& operator/=(Scalar const& that);

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }
    Scalar operator-() const;

    [[nodiscard]] Scalar inverse() const;

    friend bool operator==(Scalar const& a, Scalar const& b);

    // Residues print as 0..p-1, rationals as "n" or "n/d".
    [[nodiscard]] std::string to_string() const;

   private:
    void same_field(Scalar const& that) const;

    Characteristic           _p;
    std::int64_t             _r = 0;
    std::optional<mpq_class> _q;
  };

}  // namespace monocat
