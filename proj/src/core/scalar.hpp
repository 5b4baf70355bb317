#ifndef MANIN_SCALAR_HPP
#define MANIN_SCALAR_HPP

// Exact scalar fields: Q (GMP rationals) and Q(i) (Gaussian rationals).
// Q(i) stands in for C; its conjugation is the Galois action of a real form.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace manin {

using Rational = mpq_class;

// p/q in lowest terms (the two-argument mpq_class constructor does not canonicalize).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

class Gaussian {
public:
  Gaussian() = default;
  Gaussian(const Rational& re) : re_(re) {}                       // NOLINT
  Gaussian(long re) : re_(re) {}                                  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (o.im_ == 0) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

private:
  Rational re_{0};
  Rational im_{0};
};

enum class FieldTag { Rational, Gaussian };

template <class F> struct FieldOf;
template <> struct FieldOf<Rational> { static constexpr FieldTag tag = FieldTag::Rational; };
template <> struct FieldOf<Gaussian> { static constexpr FieldTag tag = FieldTag::Gaussian; };

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gaussian& x) { return sgn(x.re()) == 0 && sgn(x.im()) == 0; }

inline Rational conj(const Rational& x) { return x; }
inline Gaussian conj(const Gaussian& x) { return Gaussian(x.re(), -x.im()); }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const Gaussian& x) { return sgn(x.im()) == 0; }

inline const Rational& real_part(const Rational& x) { return x; }
inline const Rational& real_part(const Gaussian& x) { return x.re(); }

// Scalar conversion into a field.
template <class F> F lift(const Rational& x) { return F(x); }

// Canonical text: "p/q" (or "p" when q = 1); Gaussian "a+b i" / "a-b i".
std::string to_string(const Rational& x);
std::string to_string(const Gaussian& x);

// Throws manin::Error(ErrorCode::Parse) on malformed input.
Rational parse_rational(std::string_view s);
Gaussian parse_gaussian(std::string_view s);

template <class F> F parse_scalar(std::string_view s);
template <> inline Rational parse_scalar<Rational>(std::string_view s) { return parse_rational(s); }
template <> inline Gaussian parse_scalar<Gaussian>(std::string_view s) { return parse_gaussian(s); }

}  // namespace manin

#endif
